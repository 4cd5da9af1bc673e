#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "opring/errors.hpp"
#include "opring/solver.hpp"

using namespace opring;
using test::uv;

namespace {

DiffOp quarter_dx_plus_dy() {
  DiffOp d;
  d.add_term(1, 0, CoeffElem(FieldScalar(Rat(1, 4))));
  d.add_term(0, 1, CoeffElem(FieldScalar(Rat(1, 4))));
  return d;
}

}  // namespace

TEST_CASE("validate_function accepts surface functions and rejects others") {
  Session s = test::reference_session();

  FunctionOnGamma lam1 = make_function(s.lambdas[0], s);
  CHECK(lam1.pole_order == 1);
  CHECK(lam1.numerator.cell(0, 1) == CoeffElem(1));
  CHECK(lam1.numerator.cell(1, 0).is_zero());

  // z1 w2 / f restricts to [1, 0] on one line and [0, 1] on the other
  BiForm bad(1);
  bad.set_cell(1, 0, CoeffElem(1));
  CHECK_THROWS_AS(validate_function(bad, s), NotAFunctionOnGamma);

  // numerator coefficients must not depend on x or y
  BiForm moving(1);
  moving.set_cell(0, 1, uv(1, 0));
  CHECK_THROWS_AS(validate_function(moving, s), SpectralParameterOnly);

  LambdaSpec out_of_range{"bad", 1, {{2, 0, FieldScalar(1)}}};
  CHECK_THROWS_AS(make_function(out_of_range, s), ValidationError);
  LambdaSpec negative{"bad", -1, {}};
  CHECK_THROWS_AS(make_function(negative, s), ValidationError);

  FunctionOnGamma c = fn_constant(FieldScalar(Rat(-3, 2)));
  CHECK(c.pole_order == 0);
  CHECK(c.numerator.cell(0, 0) == CoeffElem(FieldScalar(Rat(-3, 2))));

  // (w1 z2 / f)^2 has numerator (w1 z2)^2
  FunctionOnGamma sq = fn_mul(lam1, lam1, s);
  CHECK(sq.pole_order == 2);
  CHECK(sq.numerator.cell(0, 2) == CoeffElem(1));
  CHECK(sq.numerator.cell(1, 1).is_zero());
}

TEST_CASE("order-one function gives the diagonal quarter operator") {
  Session s = test::reference_session();
  BasisPair basis = default_basis(s);

  FunctionOnGamma lam1 = make_function(s.lambdas[0], s);
  MatrixDiffOp d = construct_operator(lam1, basis, s);
  CHECK(d == MatrixDiffOp::diagonal(quarter_dx_plus_dy()));

  // constants act as scalar matrices
  CHECK(construct_operator(fn_constant(FieldScalar(1)), basis, s) ==
        MatrixDiffOp::identity());
  MatrixDiffOp c = construct_operator(fn_constant(FieldScalar(Rat(-3, 2))), basis, s);
  CHECK(c == MatrixDiffOp::diagonal(
                 DiffOp::coefficient(CoeffElem(FieldScalar(Rat(-3, 2))))));
}

TEST_CASE("eigen-relation holds for every session function") {
  Session s = test::reference_session();
  BasisPair basis = default_basis(s);

  for (const LambdaSpec& spec : s.lambdas) {
    CAPTURE(spec.name);
    FunctionOnGamma lam = make_function(spec, s);
    MatrixDiffOp d = construct_operator(lam, basis, s);
    CHECK(verify_eigen({lam, d, basis}, s));
    CHECK(d.order() <= spec.pole_order);

    // the solution is rigid: any perturbation of an entry breaks the relation
    MatrixDiffOp bumped = d;
    bumped.e[0][0].add_term(0, 0, CoeffElem(1));
    CHECK(!verify_eigen({lam, bumped, basis}, s));
    MatrixDiffOp off = d;
    off.e[1][0].add_term(0, 1, uv(0, 1));
    CHECK(!verify_eigen({lam, off, basis}, s));
  }
}

TEST_CASE("solver is linear in the function") {
  Session s = test::reference_session();
  BasisPair basis = default_basis(s);

  MatrixDiffOp d2 = construct_operator(make_function(s.lambdas[1], s), basis, s);
  MatrixDiffOp d3 = construct_operator(make_function(s.lambdas[2], s), basis, s);

  LambdaSpec sum{"sum", 2, {{1, 2, FieldScalar(1)}, {1, 1, FieldScalar(1)}}};
  CHECK(construct_operator(make_function(sum, s), basis, s) == d2 + d3);

  LambdaSpec twice{"twice", 2, {{1, 2, FieldScalar(2)}}};
  CHECK(construct_operator(make_function(twice, s), basis, s) == d2 + d2);
}

TEST_CASE("degenerate bases are rejected") {
  Session s = test::reference_session();
  BasisPair basis = default_basis(s);
  FunctionOnGamma lam1 = make_function(s.lambdas[0], s);
  FunctionOnGamma lam2 = make_function(s.lambdas[1], s);

  // a repeated vector leaves the coefficients underdetermined
  CHECK_THROWS_AS(construct_operator(lam1, {basis.psi1, basis.psi1}, s),
                  BasisNotFree);

  // with a zero second vector, an order-two function needs columns that do
  // not exist, while the order-one one is reachable yet non-unique
  CHECK_THROWS_AS(construct_operator(lam2, {basis.psi1, BAElement::zero(1)}, s),
                  BasisNotGenerating);
  CHECK_THROWS_AS(construct_operator(lam1, {basis.psi1, BAElement::zero(1)}, s),
                  BasisNotFree);
}

TEST_CASE("composition realizes products of functions") {
  Session s = test::reference_session();
  BasisPair basis = default_basis(s);
  FunctionOnGamma lam1 = make_function(s.lambdas[0], s);

  CHECK(verify_homomorphism(lam1, lam1, basis, s));

  // D(lam1^2) is the square of the diagonal quarter operator
  MatrixDiffOp dsq = construct_operator(fn_mul(lam1, lam1, s), basis, s);
  DiffOp q = quarter_dx_plus_dy();
  CHECK(dsq == MatrixDiffOp::diagonal(op_compose(q, q)));
}
