#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "opring/linsolve.hpp"
#include "opring/parallel.hpp"
#include "opring/solver.hpp"

using namespace opring;

namespace {

BiForm random_form(test::Rng& rng, int n) {
  BiForm f(n);
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) f.set_cell(k, l, rng.coeff(2));
  return f;
}

ExpMatrix random_matrix(test::Rng& rng, std::size_t rows, std::size_t cols) {
  ExpMatrix m(rows, std::vector<ExpSum>(cols));
  for (auto& row : m)
    for (auto& x : row) x = rng.expsum(2);
  return m;
}

bool same_elimination(const Elimination& a, const Elimination& b) {
  return a.m == b.m && a.pivot_cols == b.pivot_cols && a.rank == b.rank &&
         a.lhs_cols == b.lhs_cols;
}

}  // namespace

TEST_CASE("runtime switch scopes and restores") {
  bool initial = par::enabled();
  {
    par::Guard off(false);
    CHECK(!par::enabled());
    {
      par::Guard on(true);
      CHECK(par::enabled());
    }
    CHECK(!par::enabled());
  }
  CHECK(par::enabled() == initial);
}

TEST_CASE("form products agree bit for bit") {
  test::Rng rng(90210);
  for (int n : {1, 2, 3}) {
    BiForm a = random_form(rng, n), b = random_form(rng, n);
    BiForm serial = BiForm::mul_serial(a, b);
    CHECK(serial == BiForm::mul_parallel(a, b));

    // the runtime switch routes operator* to the same two kernels
    par::Guard off(false);
    BiForm via_off = a * b;
    CHECK(via_off == serial);
    par::Guard on(true);
    CHECK(a * b == serial);
  }
}

TEST_CASE("elimination agrees bit for bit") {
  test::Rng rng(8081);
  for (int iter = 0; iter < 6; ++iter) {
    std::size_t rows = 2 + static_cast<std::size_t>(rng.uniform(0, 4));
    std::size_t cols = 2 + static_cast<std::size_t>(rng.uniform(0, 4));
    std::size_t aug = static_cast<std::size_t>(rng.uniform(0, 1));
    if (aug >= cols) aug = 0;
    ExpMatrix m = random_matrix(rng, rows, cols);
    Elimination serial = exp_eliminate_serial(m, aug);
    Elimination parallel = exp_eliminate_parallel(m, aug);
    CHECK(same_elimination(serial, parallel));

    par::Guard off(false);
    CHECK(same_elimination(exp_eliminate(m, aug), serial));
    par::Guard on(true);
    CHECK(same_elimination(exp_eliminate(m, aug), serial));
  }
}

TEST_CASE("operator solve is independent of the kernel choice") {
  Session s = test::reference_session();
  BasisPair basis = default_basis(s);
  FunctionOnGamma lam2 = make_function(s.lambdas[1], s);

  MatrixDiffOp serial;
  {
    par::Guard off(false);
    serial = construct_operator(lam2, basis, s);
  }
  MatrixDiffOp parallel;
  {
    par::Guard on(true);
    parallel = construct_operator(lam2, basis, s);
  }
  CHECK(serial == parallel);
  CHECK(verify_eigen({lam2, serial, basis}, s));
}
