#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "opring/io.hpp"
#include "opring/solver.hpp"

using namespace opring;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  // timings go to stderr so stdout stays byte-deterministic
  void lap(const std::string& what) {
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "# " << what << ": "
              << std::chrono::duration<double>(t1 - t0).count() << "s\n";
    t0 = t1;
  }
};

struct Options {
  std::string session_path;
  std::string format_name = "text";
  bool quiet = false;

  EmitFormat format() const { return parse_format(format_name); }
  Session session() const {
    if (session_path.empty())
      throw ParseError("this command needs --session <file>");
    return build_session(parse_session(read_file(session_path)));
  }
};

// report line; the check's outcome feeds the exit status
bool report(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
  return ok;
}

void print_operator(const MatrixDiffOp& d, const Options& opt) {
  if (!opt.quiet) std::cout << emit_operator(d, opt.format());
}

std::string describe(const LambdaSpec& spec) {
  std::string s = spec.name + " (pole order " + std::to_string(spec.pole_order) + ")";
  return s;
}

bool all_of_residual_zero(const FlowForm& h, const SectionForm& f,
                          const GluingData& g) {
  for (const FieldScalar& r : flow_residual(h.form, h.c, f, g))
    if (!r.is_zero()) return false;
  return true;
}

int cmd_reproduce(const Options& opt) {
  Timer timer;
  Session s = opt.session();
  bool ok = true;

  ok &= report(check_section(s.f.form, s.gluing) == s.gluing.factor,
               "section identity with factor A = " + s.gluing.factor.to_string());
  auto space = flow_form_space(s.f, s.gluing);
  ok &= report(space.size() == 3, "flow-form space has dimension 3");
  ok &= report(all_of_residual_zero(s.f1, s.f, s.gluing) &&
                   all_of_residual_zero(s.f2, s.f, s.gluing),
               "chosen flow pair satisfies the flow identity, c1 = " +
                   s.f1.c.to_string() + ", c2 = " + s.f2.c.to_string());
  timer.lap("session and flow space");

  auto P = intersection_points(s.f, s.f1);
  auto Q = intersection_points(s.f, s.f2);
  for (auto [name, pt] : {std::pair<const char*, const SurfacePoint*>{"P1", &P[0]},
                          {"P2", &P[1]},
                          {"Q1", &Q[0]},
                          {"Q2", &Q[1]}})
    std::cout << "       " << name << " = " << pt->to_string() << "\n";
  ok &= report(check_distinct_witnesses({P[0], P[1], Q[0], Q[1]}),
               "witness points pairwise distinct");
  timer.lap("intersection points");

  BasisPair basis = default_basis(s);
  std::cout << "       psi1 numerator = " << basis.psi1.numerator().to_string()
            << "\n       psi2 numerator = " << basis.psi2.numerator().to_string()
            << "\n";
  ok &= report(!ratio_witness(basis, P[0]).is_zero(),
               "h1 does not vanish at P1");
  ok &= report(ratio_witness(basis, P[0]) != ratio_witness(basis, P[1]),
               "freeness ratio differs at P1 and P2");
  timer.lap("basis and witnesses");

  std::vector<FunctionOnGamma> lams;
  std::vector<MatrixDiffOp> ops;
  for (const LambdaSpec& spec : s.lambdas) {
    FunctionOnGamma lam = make_function(spec, s);
    MatrixDiffOp d = construct_operator(lam, basis, s);
    ok &= report(verify_eigen({lam, d, basis}, s),
                 "eigen-relation for " + describe(spec));
    timer.lap(spec.name + " solve and eigen check");
    if (!opt.quiet) {
      std::cout << "operator D(" << spec.name << "):\n";
      std::cout << emit_operator(d, opt.format());
    }
    for (std::size_t j = 0; j < ops.size(); ++j) {
      ok &= report(verify_commute_pair(ops[j], d),
                   "commutator [D(" + s.lambdas[j].name + "), D(" + spec.name +
                       ")] vanishes");
      timer.lap("commutator pair");
    }
    lams.push_back(std::move(lam));
    ops.push_back(std::move(d));
  }

  std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  return ok ? 0 : 1;
}

int cmd_construct(const Options& opt, const std::string& name, int pole,
                  const std::vector<std::string>& cell_tokens) {
  Session s = opt.session();
  LambdaSpec spec;
  if (!name.empty()) {
    auto it = std::find_if(s.lambdas.begin(), s.lambdas.end(),
                           [&](const LambdaSpec& l) { return l.name == name; });
    if (it == s.lambdas.end())
      throw ParseError("session defines no lambda named '" + name + "'");
    spec = *it;
  } else {
    if (pole <= 0 || cell_tokens.empty())
      throw ParseError("construct needs --name, or --pole with --cell entries");
    spec.name = "lambda";
    spec.pole_order = pole;
    for (const std::string& tok : cell_tokens) {
      auto comma = tok.find(',');
      auto colon = tok.find(':');
      if (comma == std::string::npos || colon == std::string::npos || colon < comma)
        throw ParseError("cell must look like k,l:coef, got '" + tok + "'");
      spec.cells.emplace_back(std::stoi(tok.substr(0, comma)),
                              std::stoi(tok.substr(comma + 1, colon - comma - 1)),
                              parse_scalar_token(tok.substr(colon + 1)));
    }
  }
  Timer timer;
  BasisPair basis = default_basis(s);
  FunctionOnGamma lam = make_function(spec, s);
  MatrixDiffOp d = construct_operator(lam, basis, s);
  bool eigen = verify_eigen({lam, d, basis}, s);
  timer.lap("construct " + spec.name);
  std::cout << emit_operator(d, opt.format());
  std::string stamp = std::string("eigen-check: ") + (eigen ? "pass" : "FAIL");
  switch (opt.format()) {
    case EmitFormat::Json: std::cerr << "# " << stamp << "\n"; break;
    case EmitFormat::Latex: std::cout << "% " << stamp << "\n"; break;
    case EmitFormat::Text: std::cout << "# " << stamp << "\n"; break;
  }
  return eigen ? 0 : 1;
}

int cmd_verify_commute(const Options& opt) {
  Session s = opt.session();
  if (s.lambdas.size() < 2)
    throw ParseError("verify-commute needs at least two lambda entries");
  Timer timer;
  BasisPair basis = default_basis(s);
  std::vector<MatrixDiffOp> ops;
  for (const LambdaSpec& spec : s.lambdas) {
    ops.push_back(construct_operator(make_function(spec, s), basis, s));
    timer.lap("construct " + spec.name);
  }
  bool ok = true;
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      ok &= report(verify_commute_pair(ops[i], ops[j]),
                   "[D(" + s.lambdas[i].name + "), D(" + s.lambdas[j].name +
                       ")] = 0");
      timer.lap("commutator pair");
    }
  std::cout << (ok ? "all pairs commute" : "COMMUTATOR CHECKS FAILED") << "\n";
  return ok ? 0 : 1;
}

int cmd_rank(const Options& opt, int max_n) {
  if (max_n < 1) throw ParseError("--max-n must be at least 1");
  Session s = opt.session();
  bool ok = true;
  std::cout << "n  computed  expected  match\n";
  for (int n = 1; n <= max_n; ++n) {
    std::size_t got = rank_M(n, s);
    std::size_t want = static_cast<std::size_t>(n) * (n + 1);
    ok &= got == want;
    std::cout << n << "  " << got << "  " << want << "  "
              << (got == want ? "yes" : "NO") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_emit(const Options& opt, const std::string& input) {
  MatrixDiffOp d = operator_from_json(read_file(input));
  std::cout << emit_operator(d, opt.format());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commuting 2x2 matrix differential operators from spectral data"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--session", opt.session_path, "session document to load");
  app.add_option("--format", opt.format_name, "output format")
      ->check(CLI::IsMember({"json", "latex", "text"}));
  app.add_flag("--quiet", opt.quiet, "suppress operator bodies");

  auto* reproduce = app.add_subcommand(
      "reproduce", "run the full pipeline and print a pass/fail table");

  std::string name;
  int pole = 0;
  std::vector<std::string> cells;
  auto* construct =
      app.add_subcommand("construct", "solve D(lambda) for one function");
  construct->add_option("--name", name, "lambda name from the session");
  construct->add_option("--pole", pole, "pole order of an inline lambda");
  construct->add_option("--cell", cells,
                        "inline numerator cell k,l:coef (repeatable)");

  auto* commute = app.add_subcommand(
      "verify-commute", "check all pairwise commutators of the session lambdas");

  int max_n = 3;
  auto* rank = app.add_subcommand("rank", "rank of the order-n module pieces");
  rank->add_option("--max-n", max_n, "largest n to check");

  std::string input;
  auto* emit = app.add_subcommand("emit", "re-emit a stored operator document");
  emit->add_option("--input", input, "operator json document")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (reproduce->parsed()) return cmd_reproduce(opt);
    if (construct->parsed()) return cmd_construct(opt, name, pole, cells);
    if (commute->parsed()) return cmd_verify_commute(opt);
    if (rank->parsed()) return cmd_rank(opt, max_n);
    if (emit->parsed()) return cmd_emit(opt, input);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
