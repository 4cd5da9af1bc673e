#pragma once

#include "opring/errors.hpp"
#include "opring/numeric.hpp"

#include <compare>
#include <optional>
#include <string>

namespace opring {

// Element of Q or of a single quadratic extension Q(sqrt(d)), stored as
// a + b*sqrt(d) with squarefree integer d not in {0, 1}.  Rational values keep
// d == 0.  Mixing two different nontrivial extensions throws
// UnsupportedExtension; no nested radicals are representable.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(int v) : a_(v) {}                 // NOLINT(google-explicit-constructor)
  FieldScalar(long long v) : a_(v) {}           // NOLINT(google-explicit-constructor)
  FieldScalar(const Rat& v) : a_(v) {}          // NOLINT(google-explicit-constructor)
  FieldScalar(const Int& v) : a_(Rat(v)) {}     // NOLINT(google-explicit-constructor)

  // a + b*sqrt(d); validates that d is squarefree and not 0 or 1.
  static FieldScalar quadratic(const Rat& a, const Rat& b, const Int& d);

  // Exact square root of a rational, extending the field if needed.
  // Negative inputs are allowed (d becomes negative).
  static FieldScalar sqrt_of(const Rat& r);

  const Rat& rational_part() const { return a_; }
  const Rat& radical_part() const { return b_; }
  const Int& radicand() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_one() const { return b_ == 0 && a_ == 1; }

  // Rational value; requires is_rational().
  const Rat& as_rational() const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  FieldScalar& operator/=(const FieldScalar& o);

  friend FieldScalar operator+(FieldScalar l, const FieldScalar& r) { return l += r; }
  friend FieldScalar operator-(FieldScalar l, const FieldScalar& r) { return l -= r; }
  friend FieldScalar operator*(FieldScalar l, const FieldScalar& r) { return l *= r; }
  friend FieldScalar operator/(FieldScalar l, const FieldScalar& r) { return l /= r; }

  FieldScalar inverse() const;
  FieldScalar conjugate() const;  // a - b*sqrt(d)
  FieldScalar pow(long long e) const;

  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  // Deterministic structural order (rational part, then radical part, then
  // radicand).  Used for canonical sorting; not the real-number order.
  std::strong_ordering operator<=>(const FieldScalar& o) const;

  std::string to_string() const;

 private:
  static Int merge_radicand(const FieldScalar& x, const FieldScalar& y);

  Rat a_ = 0;
  Rat b_ = 0;
  Int d_ = 0;
};

inline bool struct_less(const FieldScalar& x, const FieldScalar& y) {
  return (x <=> y) == std::strong_ordering::less;
}

}  // namespace opring
