#pragma once

#include "opring/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace opring {

enum class Axis { X, Y };

// Exponent pair (r, s) of a term c * u^r * v^s where u = e^x, v = e^y.
struct ExpKey {
  Rat r;
  Rat s;
  bool operator==(const ExpKey& o) const { return r == o.r && s == o.s; }
  bool operator<(const ExpKey& o) const {
    if (auto c = r.compare(o.r); c != 0) return c < 0;
    return s.compare(o.s) < 0;
  }
};

// Finite sum of exponential terms sum_i c_i e^{r_i x + s_i y} with rational
// exponents and FieldScalar coefficients.  Terms are kept sorted by exponent;
// zero coefficients are never stored.
class ExpSum {
 public:
  using Terms = std::map<ExpKey, FieldScalar>;

  ExpSum() = default;
  ExpSum(int c) { add_term({0, 0}, FieldScalar(c)); }  // NOLINT
  ExpSum(const FieldScalar& c) { add_term({0, 0}, c); }  // NOLINT

  static ExpSum monomial(const Rat& r, const Rat& s,
                         const FieldScalar& c = FieldScalar(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // Constant value; requires is_constant().
  FieldScalar constant_value() const;

  void add_term(const ExpKey& k, const FieldScalar& c);

  ExpSum operator-() const;
  ExpSum& operator+=(const ExpSum& o);
  ExpSum& operator-=(const ExpSum& o);
  friend ExpSum operator+(ExpSum l, const ExpSum& r) { return l += r; }
  friend ExpSum operator-(ExpSum l, const ExpSum& r) { return l -= r; }
  friend ExpSum operator*(const ExpSum& l, const ExpSum& r);

  ExpSum scaled(const FieldScalar& c) const;
  ExpSum shifted(const Rat& dr, const Rat& ds) const;  // * u^dr v^ds

  // d/dx or d/dy: the term c u^r v^s maps to (r*c) u^r v^s (resp. s*c).
  ExpSum derive(Axis axis) const;

  // Exponent bounding box; requires a nonzero sum.
  Rat min_r() const;
  Rat max_r() const;
  Rat min_s() const;
  Rat max_s() const;

  // Lexicographically largest exponent and its coefficient.
  std::pair<ExpKey, FieldScalar> leading() const;

  bool operator==(const ExpSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const ExpSum& o) const { return !(*this == o); }

  // Deterministic structural order for canonical sorting.
  static bool struct_less(const ExpSum& a, const ExpSum& b);

  std::string to_string() const;

 private:
  Terms terms_;
};

// Greatest common divisor, canonical: minimal exponents (0, 0) and leading
// coefficient 1.  gcd(0, b) is the canonical associate of b.
ExpSum exp_gcd(const ExpSum& a, const ExpSum& b);

// Exact quotient a / b if it exists as an ExpSum, nullopt otherwise.
// Requires b nonzero.
std::optional<ExpSum> exp_try_divide(const ExpSum& a, const ExpSum& b);

// The canonical associate used by exp_gcd: shift so both minimal exponents
// are 0, then scale the lex-leading coefficient to 1.
ExpSum exp_canonical_associate(const ExpSum& a);

}  // namespace opring
