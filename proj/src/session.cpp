#include "opring/session.hpp"

#include "opring/errors.hpp"

namespace opring {

bool SessionConfig::operator==(const SessionConfig& o) const {
  auto lam_eq = [](const LambdaSpec& a, const LambdaSpec& b) {
    return a.name == b.name && a.pole_order == b.pole_order && a.cells == b.cells;
  };
  if (lambdas.size() != o.lambdas.size()) return false;
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    if (!lam_eq(lambdas[i], o.lambdas[i])) return false;
  return p1 == o.p1 && p2 == o.p2 && factor == o.factor &&
         section == o.section && flow_preferences == o.flow_preferences &&
         extension_d == o.extension_d;
}

BiForm display_form(const std::array<FieldScalar, 4>& coeffs) {
  // display order: z1z2, z1w2, w1z2, w1w2 -> cells (1,1), (1,0), (0,1), (0,0)
  BiForm f(1);
  f.set_cell(1, 1, CoeffElem(coeffs[0]));
  f.set_cell(1, 0, CoeffElem(coeffs[1]));
  f.set_cell(0, 1, CoeffElem(coeffs[2]));
  f.set_cell(0, 0, CoeffElem(coeffs[3]));
  return f;
}

namespace {

void check_extension(const SessionConfig& cfg) {
  Int declared = cfg.extension_d.value_or(Int(0));
  if (declared == 1)
    throw ValidationError("declared extension d must not be 0 or 1");
  auto visit = [&](const FieldScalar& s) {
    if (s.is_rational()) return;
    if (declared == 0)
      throw ValidationError("coefficient " + s.to_string() +
                            " uses a quadratic extension but none is declared");
    if (s.radicand() != declared)
      throw ValidationError("coefficient " + s.to_string() +
                            " uses an extension other than the declared sqrt(" +
                            declared.str() + ")");
  };
  for (const auto& s : cfg.p1) visit(s);
  for (const auto& s : cfg.p2) visit(s);
  visit(cfg.factor);
  for (const auto& s : cfg.section) visit(s);
  for (const auto& pref : cfg.flow_preferences)
    for (const auto& s : pref) visit(s);
  for (const auto& lam : cfg.lambdas)
    for (const auto& [k, l, c] : lam.cells) visit(c);
  if (declared != 0) {
    // reuse the constructor's squarefree validation
    FieldScalar::quadratic(Rat(0), Rat(1), declared);
  }
}

}  // namespace

Session build_session(const SessionConfig& cfg) {
  check_extension(cfg);
  GluingData gluing(ProjPoint(cfg.p1[0], cfg.p1[1]),
                    ProjPoint(cfg.p2[0], cfg.p2[1]), cfg.factor);
  SectionForm f = make_section(display_form(cfg.section), gluing);
  auto basis = flow_form_space(f, gluing);
  std::vector<BiForm> prefs;
  prefs.reserve(cfg.flow_preferences.size());
  for (const auto& p : cfg.flow_preferences) prefs.push_back(display_form(p));
  auto [f1, f2] = choose_flow_pair(basis, f, gluing, prefs);
  for (const FlowForm* fl : {&f1, &f2})
    if (!fl->c.is_rational())
      throw ValidationError("flow constant " + fl->c.to_string() +
                            " is irrational; the exponent lattice is undefined");
  Int q0 = int_lcm(rat_den(f1.c.as_rational()), rat_den(f2.c.as_rational()));
  return Session{std::move(gluing), std::move(f), std::move(f1), std::move(f2),
                 std::move(q0), cfg.lambdas};
}

}  // namespace opring
