#pragma once

#include "opring/expsum.hpp"

#include <string>

namespace opring {

// Fraction of exponential sums, kept in canonical form: numerator and
// denominator coprime, denominator with minimal exponents (0, 0) and
// lex-leading coefficient 1.  Equality is therefore structural.
class CoeffElem {
 public:
  CoeffElem() : den_(1) {}
  CoeffElem(int c) : num_(c), den_(1) {}                 // NOLINT
  CoeffElem(const FieldScalar& c) : num_(c), den_(1) {}  // NOLINT
  CoeffElem(const ExpSum& n) : num_(n), den_(1) {}       // NOLINT
  CoeffElem(ExpSum n, ExpSum d);

  static CoeffElem monomial(const Rat& r, const Rat& s,
                            const FieldScalar& c = FieldScalar(1)) {
    return CoeffElem(ExpSum::monomial(r, s, c));
  }

  const ExpSum& num() const { return num_; }
  const ExpSum& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_ == ExpSum(1) && num_.is_constant(); }
  FieldScalar constant_value() const;

  CoeffElem operator-() const;
  CoeffElem& operator+=(const CoeffElem& o);
  CoeffElem& operator-=(const CoeffElem& o);
  CoeffElem& operator*=(const CoeffElem& o);
  CoeffElem& operator/=(const CoeffElem& o);
  friend CoeffElem operator+(CoeffElem l, const CoeffElem& r) { return l += r; }
  friend CoeffElem operator-(CoeffElem l, const CoeffElem& r) { return l -= r; }
  friend CoeffElem operator*(CoeffElem l, const CoeffElem& r) { return l *= r; }
  friend CoeffElem operator/(CoeffElem l, const CoeffElem& r) { return l /= r; }

  CoeffElem inverse() const;

  // d/dx or d/dy via the quotient rule.
  CoeffElem derive(Axis axis) const;

  bool operator==(const CoeffElem& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const CoeffElem& o) const { return !(*this == o); }

  static bool struct_less(const CoeffElem& a, const CoeffElem& b);

  std::string to_string() const;

 private:
  void normalize();

  ExpSum num_;
  ExpSum den_;
};

}  // namespace opring
