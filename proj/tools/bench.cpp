#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "opring/io.hpp"
#include "opring/linsolve.hpp"
#include "opring/parallel.hpp"
#include "opring/solver.hpp"

using namespace opring;

namespace {

std::string default_session() {
  return std::string(
      "p1 = 1 0\np2 = 0 1\na = 1\nsection = 1 1 0 1\n"
      "flow = 1 0 2 -1\nflow = -1 0 2 1\n"
      "lambda = lam4 2 1,0:1 2,1:1\n");
}

double seconds(auto fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << name << ": serial " << serial << "s, parallel " << parallel
            << "s, speedup " << serial / parallel << "x\n";
}

// f^k times the basis numerators: the product shape the solver hits hardest
BiForm product_load(const Session& s, const BasisPair& basis, int k) {
  BiForm acc = basis.psi2.numerator();
  for (int i = 0; i < k; ++i) acc = acc * s.f.form;
  return acc * basis.psi2.numerator();
}

// the rank computation's restriction matrix at order n
ExpMatrix rank_load(int n, const Session& s) {
  const std::size_t dim = static_cast<std::size_t>(n + 1);
  ExpMatrix m(dim, std::vector<ExpSum>(dim * dim));
  auto p1 = s.gluing.p1.normalized();
  auto p2 = s.gluing.p2.normalized();
  ExpSum mu = ExpSum::monomial(1, 0);  // stand-in for the edge factor
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t l = 0; l < dim; ++l) {
        ExpSum first = ExpSum(p1.a().pow(static_cast<long long>(k)) *
                              p1.b().pow(static_cast<long long>(dim - 1 - k)));
        ExpSum second = ExpSum(p2.a().pow(static_cast<long long>(l)) *
                               p2.b().pow(static_cast<long long>(dim - 1 - l)));
        ExpSum entry;
        if (l == j) entry += first;
        if (k == j) entry -= mu * second;
        m[j][k * dim + l] = std::move(entry);
      }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  int product_power = 6;
  int elim_order = 30;
  int solves = 1;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&] { return std::stoi(argv[++i]); };
    if (arg == "--product-power" && i + 1 < argc) product_power = next();
    else if (arg == "--elim-order" && i + 1 < argc) elim_order = next();
    else if (arg == "--solves" && i + 1 < argc) solves = next();
    else {
      std::cerr << "usage: bench [--product-power K] [--elim-order N] [--solves R]\n";
      return 2;
    }
  }

  Session s = build_session(parse_session(default_session()));
  BasisPair basis = default_basis(s);

  BiForm serial_prod(0), parallel_prod(0);
  double t_ps = seconds([&] {
    par::Guard g(false);
    serial_prod = product_load(s, basis, product_power);
  });
  double t_pp = seconds([&] {
    par::Guard g(true);
    parallel_prod = product_load(s, basis, product_power);
  });
  if (!(serial_prod.nonzero_cells() == parallel_prod.nonzero_cells()))
    std::cerr << "MISMATCH between serial and parallel products\n";
  row("biform product (f^" + std::to_string(product_power) + " load)", t_ps, t_pp);

  ExpMatrix m = rank_load(elim_order, s);
  std::size_t rank_s = 0, rank_p = 0;
  double t_es = seconds([&] { rank_s = exp_eliminate_serial(m).rank; });
  double t_ep = seconds([&] { rank_p = exp_eliminate_parallel(m).rank; });
  if (rank_s != rank_p)
    std::cerr << "MISMATCH between serial and parallel elimination ranks\n";
  row("elimination (order " + std::to_string(elim_order) + ", rank " +
          std::to_string(rank_s) + ")",
      t_es, t_ep);

  FunctionOnGamma lam = make_function(s.lambdas[0], s);
  MatrixDiffOp ds, dp;
  double t_ss = seconds([&] {
    par::Guard g(false);
    for (int i = 0; i < solves; ++i) ds = construct_operator(lam, basis, s);
  });
  double t_sp = seconds([&] {
    par::Guard g(true);
    for (int i = 0; i < solves; ++i) dp = construct_operator(lam, basis, s);
  });
  if (!(ds == dp)) std::cerr << "MISMATCH between serial and parallel solves\n";
  row("operator solve (pole order 2)", t_ss, t_sp);
  return 0;
}
