#include "opring/field.hpp"

#include <cstdlib>

namespace opring {

std::string rat_to_string(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

Rat parse_rat(const std::string& text) {
  auto bad = [&] { throw ParseError("not a rational number: '" + text + "'"); };
  if (text.empty()) bad();
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto valid = [](const std::string& p) {
    if (p.empty()) return false;
    std::size_t i = (p[0] == '-' || p[0] == '+') ? 1 : 0;
    if (i == p.size()) return false;
    for (; i < p.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
    return true;
  };
  if (!valid(num) || !valid(den)) bad();
  Int n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rat(n, d);
}

std::pair<Int, Int> squarefree_decompose(Int n) {
  if (n == 0) throw std::invalid_argument("squarefree_decompose(0)");
  Int d = n < 0 ? -1 : 1;
  if (n < 0) n = -n;
  Int s = 1;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) d *= p;
  }
  d *= n;  // leftover factor is prime, hence squarefree
  return {s, d};
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = int_gcd(a, b);
  Int l = (a / g) * b;
  return l < 0 ? Int(-l) : l;
}

FieldScalar FieldScalar::quadratic(const Rat& a, const Rat& b, const Int& d) {
  if (b == 0) return FieldScalar(a);
  if (d == 0 || d == 1)
    throw UnsupportedExtension("radicand must not be 0 or 1");
  auto [s, core] = squarefree_decompose(d);
  if (s != 1)
    throw UnsupportedExtension("radicand " + d.str() + " is not squarefree");
  FieldScalar r;
  r.a_ = a;
  r.b_ = b;
  r.d_ = d;
  return r;
}

FieldScalar FieldScalar::sqrt_of(const Rat& r) {
  if (r == 0) return FieldScalar();
  // sqrt(p/q) = sqrt(p*q)/q
  Int pq = rat_num(r) * rat_den(r);
  auto [s, d] = squarefree_decompose(pq);
  Rat scale(s, rat_den(r));
  if (d == 1) return FieldScalar(scale);
  return quadratic(Rat(0), scale, d);
}

const Rat& FieldScalar::as_rational() const {
  if (!is_rational())
    throw UnsupportedExtension("value " + to_string() + " is not rational");
  return a_;
}

Int FieldScalar::merge_radicand(const FieldScalar& x, const FieldScalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw UnsupportedExtension("cannot mix sqrt(" + x.d_.str() + ") with sqrt(" +
                             y.d_.str() + ")");
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  Int d = merge_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = b_ == 0 ? Int(0) : d;
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) { return *this += -o; }

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  Int d = merge_radicand(*this, o);
  Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = b_ == 0 ? Int(0) : d;
  return *this;
}

FieldScalar FieldScalar::conjugate() const {
  FieldScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldScalar(Rat(1) / a_);
  // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm cannot
  // vanish for nonzero values because d is squarefree.
  Rat norm = a_ * a_ - b_ * b_ * Rat(d_);
  FieldScalar r = conjugate();
  r.a_ /= norm;
  r.b_ /= norm;
  return r;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
  return *this *= o.inverse();
}

FieldScalar FieldScalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldScalar acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (b_ == 0 && o.b_ == 0) return a_ == o.a_;
  return a_ == o.a_ && b_ == o.b_ && merge_radicand(*this, o) != 0;
}

std::strong_ordering FieldScalar::operator<=>(const FieldScalar& o) const {
  if (auto c = a_.compare(o.a_); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = b_.compare(o.b_); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (d_ != o.d_ && b_ != 0)
    return d_ < o.d_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string FieldScalar::to_string() const {
  if (is_rational()) return rat_to_string(a_);
  std::string root = "sqrt(" + d_.str() + ")";
  std::string rad;
  if (b_ == 1) rad = root;
  else if (b_ == -1) rad = "-" + root;
  else rad = rat_to_string(b_) + "*" + root;
  if (a_ == 0) return rad;
  if (rad[0] == '-') return rat_to_string(a_) + rad;
  return rat_to_string(a_) + "+" + rad;
}

}  // namespace opring
