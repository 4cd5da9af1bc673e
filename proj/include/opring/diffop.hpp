#pragma once

#include "opring/ba.hpp"

#include <map>
#include <utility>

namespace opring {

// Differential operator sum c_ab ∂x^a ∂y^b with coefficients on the left.
// Canonical form: no zero coefficients stored, so equality is map equality.
class DiffOp {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, CoeffElem>;

  DiffOp() = default;

  static DiffOp identity() { return coefficient(CoeffElem(1)); }
  static DiffOp coefficient(const CoeffElem& c);
  static DiffOp partial(Axis axis, int power = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;

  void add_term(int a, int b, const CoeffElem& c);
  const CoeffElem& coeff(int a, int b) const;  // zero when absent

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp l, const DiffOp& r) { return l += r; }
  friend DiffOp operator-(DiffOp l, const DiffOp& r) { return l -= r; }

  DiffOp scaled(const CoeffElem& c) const;  // left multiplication by c

  bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }
  bool operator!=(const DiffOp& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Terms terms_;
};

// Skew product: moving ∂ past a coefficient costs its derivative
// (∂ ∘ c = c∂ + δ(c)), extended by the general Leibniz rule.
DiffOp op_compose(const DiffOp& d, const DiffOp& e);

struct MatrixDiffOp {
  std::array<std::array<DiffOp, 2>, 2> e;

  static MatrixDiffOp identity();
  static MatrixDiffOp zero() { return MatrixDiffOp{}; }
  static MatrixDiffOp diagonal(const DiffOp& d);

  bool is_zero() const;
  int order() const;

  MatrixDiffOp operator-() const;
  MatrixDiffOp& operator+=(const MatrixDiffOp& o);
  MatrixDiffOp& operator-=(const MatrixDiffOp& o);
  friend MatrixDiffOp operator+(MatrixDiffOp l, const MatrixDiffOp& r) {
    return l += r;
  }
  friend MatrixDiffOp operator-(MatrixDiffOp l, const MatrixDiffOp& r) {
    return l -= r;
  }

  bool operator==(const MatrixDiffOp& o) const { return e == o.e; }
  bool operator!=(const MatrixDiffOp& o) const { return !(*this == o); }
};

MatrixDiffOp mat_compose(const MatrixDiffOp& d, const MatrixDiffOp& e);
MatrixDiffOp commutator(const MatrixDiffOp& d, const MatrixDiffOp& e);

// Left action on module elements; result has pole order n + order(d).
BAElement apply_to_ba(const DiffOp& d, const BAElement& e, const Session& s);

std::pair<BAElement, BAElement> matrix_apply(
    const MatrixDiffOp& d, const std::pair<BAElement, BAElement>& psi,
    const Session& s);

}  // namespace opring
