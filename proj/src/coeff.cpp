#include "opring/coeff.hpp"

#include "opring/errors.hpp"

namespace opring {

CoeffElem::CoeffElem(ExpSum n, ExpSum d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  normalize();
}

void CoeffElem::normalize() {
  if (num_.is_zero()) {
    den_ = ExpSum(1);
    return;
  }
  ExpSum g = exp_gcd(num_, den_);
  if (g != ExpSum(1)) {
    num_ = *exp_try_divide(num_, g);
    den_ = *exp_try_divide(den_, g);
  }
  // units: push the denominator's monomial and scalar factor into the numerator
  Rat dr = den_.min_r(), ds = den_.min_s();
  if (dr != 0 || ds != 0) {
    den_ = den_.shifted(-dr, -ds);
    num_ = num_.shifted(-dr, -ds);
  }
  FieldScalar lead = den_.leading().second;
  if (!lead.is_one()) {
    FieldScalar inv = lead.inverse();
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

FieldScalar CoeffElem::constant_value() const {
  if (!is_constant())
    throw std::invalid_argument("coefficient is not constant: " + to_string());
  return num_.constant_value();
}

CoeffElem CoeffElem::operator-() const {
  CoeffElem r = *this;
  r.num_ = -r.num_;
  return r;
}

CoeffElem& CoeffElem::operator+=(const CoeffElem& o) {
  // reduce by the denominator gcd first so normalize() works on small inputs
  ExpSum g = exp_gcd(den_, o.den_);
  ExpSum od = g == ExpSum(1) ? o.den_ : *exp_try_divide(o.den_, g);
  ExpSum sd = g == ExpSum(1) ? den_ : *exp_try_divide(den_, g);
  num_ = num_ * od + o.num_ * sd;
  den_ = den_ * od;
  normalize();
  return *this;
}

CoeffElem& CoeffElem::operator-=(const CoeffElem& o) { return *this += -o; }

CoeffElem& CoeffElem::operator*=(const CoeffElem& o) {
  // cross-cancel so the product of two reduced fractions is already reduced
  ExpSum t1 = exp_gcd(num_, o.den_), t2 = exp_gcd(o.num_, den_);
  ExpSum n1 = t1 == ExpSum(1) ? num_ : *exp_try_divide(num_, t1);
  ExpSum d2 = t1 == ExpSum(1) ? o.den_ : *exp_try_divide(o.den_, t1);
  ExpSum n2 = t2 == ExpSum(1) ? o.num_ : *exp_try_divide(o.num_, t2);
  ExpSum d1 = t2 == ExpSum(1) ? den_ : *exp_try_divide(den_, t2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize();
  return *this;
}

CoeffElem CoeffElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  CoeffElem r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

CoeffElem& CoeffElem::operator/=(const CoeffElem& o) {
  return *this *= o.inverse();
}

CoeffElem CoeffElem::derive(Axis axis) const {
  CoeffElem r;
  r.num_ = num_.derive(axis) * den_ - num_ * den_.derive(axis);
  r.den_ = den_ * den_;
  r.normalize();
  return r;
}

bool CoeffElem::struct_less(const CoeffElem& a, const CoeffElem& b) {
  if (a.num_ != b.num_) return ExpSum::struct_less(a.num_, b.num_);
  return ExpSum::struct_less(a.den_, b.den_);
}

std::string CoeffElem::to_string() const {
  if (den_ == ExpSum(1)) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.term_count() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

}  // namespace opring
