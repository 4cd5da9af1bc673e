#include "opring/solver.hpp"

#include "opring/errors.hpp"
#include "opring/linsolve.hpp"

#include <map>

namespace opring {

FunctionOnGamma validate_function(const BiForm& g, const Session& s) {
  int m = g.bidegree();
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= m; ++l) {
      const CoeffElem& c = g.cell(k, l);
      if (!c.is_zero() && !c.is_constant())
        throw SpectralParameterOnly(
            "numerator cell (" + std::to_string(k) + "," + std::to_string(l) +
            ") depends on x or y; the function must live on the surface alone");
    }
  auto r1 = g.eval_line(BiForm::Slot::First, s.gluing.p1.a(), s.gluing.p1.b());
  auto r2 = g.eval_line(BiForm::Slot::Second, s.gluing.p2.a(), s.gluing.p2.b());
  CoeffElem am{s.gluing.factor.pow(m)};
  for (std::size_t j = 0; j < r1.size(); ++j)
    if (r1[j] != am * r2[j])
      throw NotAFunctionOnGamma(
          "edge restrictions disagree at t-degree " + std::to_string(j) +
          "; the quotient is not single-valued on the glued surface");
  return FunctionOnGamma{m, g};
}

FunctionOnGamma fn_constant(const FieldScalar& c) {
  BiForm g(0);
  g.set_cell(0, 0, CoeffElem(c));
  return FunctionOnGamma{0, g};
}

FunctionOnGamma fn_mul(const FunctionOnGamma& a, const FunctionOnGamma& b,
                       const Session& s) {
  return validate_function(a.numerator * b.numerator, s);
}

FunctionOnGamma make_function(const LambdaSpec& spec, const Session& s) {
  if (spec.pole_order < 0)
    throw ValidationError("negative pole order in function spec");
  BiForm g(spec.pole_order);
  for (const auto& [k, l, c] : spec.cells) {
    if (k < 0 || k > spec.pole_order || l < 0 || l > spec.pole_order)
      throw ValidationError("cell (" + std::to_string(k) + "," +
                            std::to_string(l) + ") outside bidegree (" +
                            std::to_string(spec.pole_order) + "," +
                            std::to_string(spec.pole_order) + ")");
    g.set_cell(k, l, g.cell(k, l) + CoeffElem(c));
  }
  return validate_function(g, s);
}

MatrixDiffOp construct_operator(const FunctionOnGamma& lambda,
                                const BasisPair& basis, const Session& s) {
  const int m = lambda.pole_order;
  const int lift_to = m + 1;

  // derivative multi-indices (a, b), a+b <= m, in a fixed display-like order
  std::vector<std::pair<int, int>> dlist;
  for (int t = 0; t <= m; ++t)
    for (int a = t; a >= 0; --a) dlist.emplace_back(a, t - a);
  const std::size_t per_basis = dlist.size();

  // lifted numerators of all basis derivatives, shared by both rows
  std::vector<std::vector<BiForm>> lifted(2);
  for (int j = 0; j < 2; ++j) {
    const BAElement& psi = j == 0 ? basis.psi1 : basis.psi2;
    std::map<std::pair<int, int>, BAElement> chain;
    chain.emplace(std::pair{0, 0}, psi);
    for (const auto& [a, b] : dlist) {
      if (a == 0 && b == 0) continue;
      const BAElement& prev = a > 0 ? chain.at({a - 1, b}) : chain.at({a, b - 1});
      chain.emplace(std::pair{a, b},
                    ba_derive(prev, a > 0 ? Axis::X : Axis::Y, s));
    }
    lifted[static_cast<std::size_t>(j)].reserve(per_basis);
    for (const auto& ab : dlist)
      lifted[static_cast<std::size_t>(j)].push_back(
          ba_lift(chain.at(ab), lift_to, s).numerator());
  }

  const std::size_t unknowns = 2 * per_basis;
  const std::size_t w = static_cast<std::size_t>(lift_to) + 1;
  CoeffMatrix a(w * w, std::vector<CoeffElem>(unknowns));
  for (std::size_t col = 0; col < unknowns; ++col) {
    const BiForm& num = lifted[col / per_basis][col % per_basis];
    for (int k = 0; k <= lift_to; ++k)
      for (int l = 0; l <= lift_to; ++l)
        a[static_cast<std::size_t>(k) * w + static_cast<std::size_t>(l)][col] =
            num.cell(k, l);
  }

  MatrixDiffOp out;
  for (int i = 0; i < 2; ++i) {
    const BAElement& psi = i == 0 ? basis.psi1 : basis.psi2;
    BiForm target = lambda.numerator * psi.numerator();
    std::vector<CoeffElem> rhs(w * w);
    for (int k = 0; k <= lift_to; ++k)
      for (int l = 0; l <= lift_to; ++l)
        rhs[static_cast<std::size_t>(k) * w + static_cast<std::size_t>(l)] =
            target.cell(k, l);
    LinearSolution sol = coeff_solve(a, rhs);
    if (sol.status == SolveStatus::Inconsistent)
      throw BasisNotGenerating("row " + std::to_string(i + 1) +
                               ": the basis derivatives do not span the target");
    if (sol.status == SolveStatus::Underdetermined)
      throw BasisNotFree("row " + std::to_string(i + 1) +
                         ": operator coefficients are not unique");
    for (int j = 0; j < 2; ++j)
      for (std::size_t idx = 0; idx < per_basis; ++idx) {
        const CoeffElem& c =
            sol.values[static_cast<std::size_t>(j) * per_basis + idx];
        if (!c.is_zero())
          out.e[i][j].add_term(dlist[idx].first, dlist[idx].second, c);
      }
  }
  return out;
}

bool verify_eigen(const SpectralAssignment& a, const Session& s) {
  auto applied = matrix_apply(a.d, {a.basis.psi1, a.basis.psi2}, s);
  BAElement want1 = ba_scale_by_function(a.basis.psi1, a.lambda, s);
  BAElement want2 = ba_scale_by_function(a.basis.psi2, a.lambda, s);
  return ba_equal(applied.first, want1, s) && ba_equal(applied.second, want2, s);
}

bool verify_commute_pair(const MatrixDiffOp& d1, const MatrixDiffOp& d2) {
  return commutator(d1, d2).is_zero();
}

bool verify_homomorphism(const FunctionOnGamma& lambda,
                         const FunctionOnGamma& mu, const BasisPair& basis,
                         const Session& s) {
  MatrixDiffOp dl = construct_operator(lambda, basis, s);
  MatrixDiffOp dm = construct_operator(mu, basis, s);
  MatrixDiffOp dp = construct_operator(fn_mul(lambda, mu, s), basis, s);
  return mat_compose(dl, dm) == dp;
}

}  // namespace opring
