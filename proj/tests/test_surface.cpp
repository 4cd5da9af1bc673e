#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "opring/linsolve.hpp"
#include "opring/surface.hpp"

using namespace opring;

namespace {

GluingData reference_gluing() {
  return GluingData(ProjPoint(FieldScalar(1), FieldScalar(0)),
                    ProjPoint(FieldScalar(0), FieldScalar(1)), FieldScalar(1));
}

// cells given in display order z1z2 z1w2 w1z2 w1w2
BiForm form_from_display(const FieldScalar& a, const FieldScalar& b,
                         const FieldScalar& c, const FieldScalar& d) {
  BiForm f(1);
  f.set_cell(1, 1, CoeffElem(a));
  f.set_cell(1, 0, CoeffElem(b));
  f.set_cell(0, 1, CoeffElem(c));
  f.set_cell(0, 0, CoeffElem(d));
  return f;
}

BiForm reference_form() { return form_from_display(1, 1, 0, 1); }

bool residual_zero(const BiForm& form, const FieldScalar& c,
                   const SectionForm& f, const GluingData& g) {
  for (const FieldScalar& x : flow_residual(form, c, f, g))
    if (!x.is_zero()) return false;
  return true;
}

FieldScalar q(const Rat& a, const Rat& b) {  // a + b*sqrt(2)
  return FieldScalar::quadratic(a, b, 2);
}

}  // namespace

TEST_CASE("projective points") {
  CHECK_THROWS_AS(ProjPoint(FieldScalar(0), FieldScalar(0)), InvalidProjectivePoint);
  ProjPoint p(FieldScalar(2), FieldScalar(4));
  CHECK(p == ProjPoint(FieldScalar(1), FieldScalar(2)));  // projective equality
  CHECK(p != ProjPoint(FieldScalar(1), FieldScalar(0)));
  CHECK(p.normalized().a() == FieldScalar(Rat(1, 2)));
  CHECK(p.normalized().b() == FieldScalar(1));
  CHECK(ProjPoint(FieldScalar(3), FieldScalar(0)).normalized() ==
        ProjPoint(FieldScalar(1), FieldScalar(0)));
  CHECK(ProjPoint(q(0, -1), FieldScalar(1)).to_string() == "(-sqrt(2) : 1)");
}

TEST_CASE("gluing data validation") {
  CHECK_THROWS_AS(GluingData(ProjPoint(FieldScalar(1), FieldScalar(0)),
                             ProjPoint(FieldScalar(2), FieldScalar(0)),
                             FieldScalar(1)),
                  ValidationError);  // p1 == p2 projectively
  CHECK_THROWS_AS(GluingData(ProjPoint(FieldScalar(1), FieldScalar(0)),
                             ProjPoint(FieldScalar(0), FieldScalar(1)),
                             FieldScalar(0)),
                  ValidationError);  // zero factor
}

TEST_CASE("section identity factor") {
  GluingData g = reference_gluing();

  CHECK(check_section(reference_form(), g) == FieldScalar(1));

  // z1 z2 restricts to zero on one glued line: no factor exists
  CHECK(!check_section(form_from_display(1, 0, 0, 0), g).has_value());

  // 4 z1z2 + 2 z1w2 + 5 w1z2 + w1w2 glues with factor 2
  CHECK(check_section(form_from_display(4, 2, 5, 1), g) == FieldScalar(2));

  CHECK_THROWS_AS((void)check_section(BiForm(1), g), ZeroForm);

  SectionForm f = make_section(reference_form(), g);
  CHECK(f.factor == FieldScalar(1));
  CHECK_THROWS_AS((void)make_section(form_from_display(1, 0, 0, 0), g),
                  ValidationError);
  // declared gluing factor must match the computed one
  GluingData g2(ProjPoint(FieldScalar(1), FieldScalar(0)),
                ProjPoint(FieldScalar(0), FieldScalar(1)), FieldScalar(3));
  CHECK_THROWS_AS((void)make_section(reference_form(), g2), ValidationError);
}

TEST_CASE("flow-form space") {
  GluingData g = reference_gluing();
  SectionForm f = make_section(reference_form(), g);

  auto basis = flow_form_space(f, g);
  CHECK(basis.size() == 3);
  for (const FlowForm& h : basis) {
    CHECK(residual_zero(h.form, h.c, f, g));
    CHECK(!h.form.is_zero());
  }
  // the section itself is a flow form with constant 0
  CHECK(residual_zero(f.form, FieldScalar(0), f, g));
  // and not with any other constant
  CHECK(!residual_zero(f.form, FieldScalar(1), f, g));
}

TEST_CASE("flow pair selection honors valid preferences") {
  GluingData g = reference_gluing();
  SectionForm f = make_section(reference_form(), g);
  auto basis = flow_form_space(f, g);

  BiForm pref1 = form_from_display(1, 0, 2, -1);
  BiForm pref2 = form_from_display(-1, 0, 2, 1);
  auto [f1, f2] = choose_flow_pair(basis, f, g, {pref1, pref2});
  CHECK(f1.form == pref1);
  CHECK(f1.c == FieldScalar(1));
  CHECK(f2.form == pref2);
  CHECK(f2.c == FieldScalar(-1));

  // non-flow preferences are skipped; the basis still yields a pair
  auto [b1, b2] = choose_flow_pair(basis, f, g, {form_from_display(1, 1, 1, 1)});
  CHECK(residual_zero(b1.form, b1.c, f, g));
  CHECK(residual_zero(b2.form, b2.c, f, g));

  // any returned pair is independent of the section: {f, f1, f2} has rank 3
  auto [c1, c2] = choose_flow_pair(basis, f, g);
  FieldMatrix m;
  for (const BiForm* form : {&f.form, &c1.form, &c2.form}) {
    std::vector<FieldScalar> row;
    for (int k = 0; k <= 1; ++k)
      for (int l = 0; l <= 1; ++l) row.push_back(form->cell(k, l).constant_value());
    m.push_back(row);
  }
  CHECK(field_rank(m) == 3);
}

TEST_CASE("intersection points are exact and sorted") {
  GluingData g = reference_gluing();
  SectionForm f = make_section(reference_form(), g);
  auto basis = flow_form_space(f, g);
  auto [f1, f2] = choose_flow_pair(
      basis, f, g, {form_from_display(1, 0, 2, -1), form_from_display(-1, 0, 2, 1)});

  auto P = intersection_points(f, f1);
  CHECK(P[0] == SurfacePoint{ProjPoint(q(-2, -1), FieldScalar(1)),
                             ProjPoint(q(0, Rat(-1, 2)), FieldScalar(1))});
  CHECK(P[1] == SurfacePoint{ProjPoint(q(-2, 1), FieldScalar(1)),
                             ProjPoint(q(0, Rat(1, 2)), FieldScalar(1))});

  auto Q = intersection_points(f, f2);
  CHECK(Q[0] == SurfacePoint{ProjPoint(q(0, -1), FieldScalar(1)),
                             ProjPoint(q(-1, Rat(1, 2)), FieldScalar(1))});
  CHECK(Q[1] == SurfacePoint{ProjPoint(q(0, 1), FieldScalar(1)),
                             ProjPoint(q(-1, Rat(-1, 2)), FieldScalar(1))});

  // both forms vanish at every reported point
  for (const auto& [form, pts] : {std::pair{f.form, P}, {f.form, Q}}) {
    for (const SurfacePoint& p : pts)
      CHECK(form.eval_point(p.first.a(), p.first.b(), p.second.a(), p.second.b())
                .is_zero());
  }
  for (const SurfacePoint& p : P)
    CHECK(f1.form.eval_point(p.first.a(), p.first.b(), p.second.a(), p.second.b())
              .is_zero());
  for (const SurfacePoint& p : Q)
    CHECK(f2.form.eval_point(p.first.a(), p.first.b(), p.second.a(), p.second.b())
              .is_zero());

  CHECK(check_distinct_witnesses({P[0], P[1], Q[0], Q[1]}));

  // a proportional pair has no well-defined intersection
  CHECK_THROWS_AS((void)intersection_points(f, FlowForm{f.form, FieldScalar(0)}),
                  DegeneratePencil);
}

TEST_CASE("witness distinctness respects projective scaling") {
  SurfacePoint a{ProjPoint(FieldScalar(1), FieldScalar(2)),
                 ProjPoint(FieldScalar(0), FieldScalar(1))};
  SurfacePoint b{ProjPoint(FieldScalar(2), FieldScalar(4)),
                 ProjPoint(FieldScalar(0), FieldScalar(5))};
  SurfacePoint c{ProjPoint(FieldScalar(1), FieldScalar(0)),
                 ProjPoint(FieldScalar(0), FieldScalar(1))};
  SurfacePoint d{ProjPoint(FieldScalar(1), FieldScalar(1)),
                 ProjPoint(FieldScalar(1), FieldScalar(0))};
  CHECK(a == b);  // scaled coordinates name the same point
  CHECK(!check_distinct_witnesses({a, b, c, d}));
  SurfacePoint e{ProjPoint(FieldScalar(1), FieldScalar(3)),
                 ProjPoint(FieldScalar(0), FieldScalar(1))};
  CHECK(check_distinct_witnesses({a, e, c, d}));
}
