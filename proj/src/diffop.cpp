#include "opring/diffop.hpp"

#include <algorithm>

namespace opring {

DiffOp DiffOp::coefficient(const CoeffElem& c) {
  DiffOp d;
  d.add_term(0, 0, c);
  return d;
}

DiffOp DiffOp::partial(Axis axis, int power) {
  if (power < 0) throw std::invalid_argument("negative power of a partial");
  DiffOp d;
  d.add_term(axis == Axis::X ? power : 0, axis == Axis::Y ? power : 0,
             CoeffElem(1));
  return d;
}

int DiffOp::order() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first + k.second);
  return m;
}

void DiffOp::add_term(int a, int b, const CoeffElem& c) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative partial degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const CoeffElem& DiffOp::coeff(int a, int b) const {
  static const CoeffElem kZero;
  auto it = terms_.find(Key{a, b});
  return it == terms_.end() ? kZero : it->second;
}

DiffOp DiffOp::operator-() const {
  DiffOp r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

DiffOp DiffOp::scaled(const CoeffElem& c) const {
  DiffOp r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) {
    CoeffElem p = c * v;
    if (!p.is_zero()) r.terms_.emplace(k, std::move(p));
  }
  return r;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    bool unit = cs == "1" && (k.first || k.second);
    if (!unit) {
      bool wrap = cs.find_first_of("+-", 1) != std::string::npos;
      out += wrap ? "(" + cs + ")" : cs;
      if (k.first || k.second) out += "*";
    }
    for (auto [axis, deg] : {std::pair{"Dx", k.first}, {"Dy", k.second}}) {
      if (deg == 0) continue;
      out += axis;
      if (deg > 1) out += "^" + std::to_string(deg);
    }
  }
  return out;
}

namespace {

Rat binomial(int n, int k) {
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= Rat(n - i, i + 1);
  return r;
}

CoeffElem derive_pow(const CoeffElem& c, int dx, int dy) {
  CoeffElem r = c;
  for (int i = 0; i < dx; ++i) r = r.derive(Axis::X);
  for (int i = 0; i < dy; ++i) r = r.derive(Axis::Y);
  return r;
}

}  // namespace

DiffOp op_compose(const DiffOp& d, const DiffOp& e) {
  DiffOp out;
  for (const auto& [kd, cd] : d.terms()) {
    const auto [a, b] = kd;
    for (const auto& [ke, ce] : e.terms()) {
      // ∂x^a ∂y^b ∘ ce = Σ C(a,i) C(b,j) δx^i δy^j(ce) ∂x^(a-i) ∂y^(b-j)
      for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
          CoeffElem der = derive_pow(ce, i, j);
          if (der.is_zero()) continue;
          CoeffElem w(FieldScalar(binomial(a, i) * binomial(b, j)));
          out.add_term(a - i + ke.first, b - j + ke.second, cd * w * der);
        }
    }
  }
  return out;
}

MatrixDiffOp MatrixDiffOp::identity() { return diagonal(DiffOp::identity()); }

MatrixDiffOp MatrixDiffOp::diagonal(const DiffOp& d) {
  MatrixDiffOp m;
  m.e[0][0] = d;
  m.e[1][1] = d;
  return m;
}

bool MatrixDiffOp::is_zero() const {
  for (const auto& row : e)
    for (const auto& d : row)
      if (!d.is_zero()) return false;
  return true;
}

int MatrixDiffOp::order() const {
  int m = 0;
  for (const auto& row : e)
    for (const auto& d : row) m = std::max(m, d.order());
  return m;
}

MatrixDiffOp MatrixDiffOp::operator-() const {
  MatrixDiffOp r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = -e[i][j];
  return r;
}

MatrixDiffOp& MatrixDiffOp::operator+=(const MatrixDiffOp& o) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) e[i][j] += o.e[i][j];
  return *this;
}

MatrixDiffOp& MatrixDiffOp::operator-=(const MatrixDiffOp& o) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) e[i][j] -= o.e[i][j];
  return *this;
}

MatrixDiffOp mat_compose(const MatrixDiffOp& d, const MatrixDiffOp& e) {
  MatrixDiffOp r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        r.e[i][j] += op_compose(d.e[i][k], e.e[k][j]);
  return r;
}

MatrixDiffOp commutator(const MatrixDiffOp& d, const MatrixDiffOp& e) {
  return mat_compose(d, e) - mat_compose(e, d);
}

BAElement apply_to_ba(const DiffOp& d, const BAElement& e, const Session& s) {
  int target = e.pole_order() + d.order();
  BAElement acc = BAElement::zero(target);
  for (const auto& [k, c] : d.terms()) {
    BAElement term = e;
    for (int i = 0; i < k.first; ++i) term = ba_derive(term, Axis::X, s);
    for (int i = 0; i < k.second; ++i) term = ba_derive(term, Axis::Y, s);
    term = ba_lift(term, target, s);
    acc = ba_add(acc, ba_scale_by_coeff(term, c, s), s);
  }
  return acc;
}

std::pair<BAElement, BAElement> matrix_apply(
    const MatrixDiffOp& d, const std::pair<BAElement, BAElement>& psi,
    const Session& s) {
  auto row = [&](int i) {
    return ba_add(apply_to_ba(d.e[i][0], psi.first, s),
                  apply_to_ba(d.e[i][1], psi.second, s), s);
  };
  return {row(0), row(1)};
}

}  // namespace opring
