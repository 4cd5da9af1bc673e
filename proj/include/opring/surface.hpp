#pragma once

#include "opring/biform.hpp"

#include <array>
#include <optional>
#include <vector>

namespace opring {

// Point of CP^1 with exact coordinates.
class ProjPoint {
 public:
  ProjPoint(FieldScalar a, FieldScalar b);

  const FieldScalar& a() const { return a_; }
  const FieldScalar& b() const { return b_; }

  // Scale so the last nonzero coordinate is 1; makes equality plain.
  ProjPoint normalized() const;

  bool operator==(const ProjPoint& o) const {
    return (a_ * o.b_ - o.a_ * b_).is_zero();
  }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldScalar a_, b_;
};

// The two identified lines: {p1} x CP^1 and CP^1 x {p2}, with the section
// identity factor A.
struct GluingData {
  GluingData(ProjPoint p1_, ProjPoint p2_, FieldScalar factor_);
  ProjPoint p1;
  ProjPoint p2;
  FieldScalar factor;  // A, nonzero
};

// Bidegree-(1,1) constant form cutting the pole divisor, together with its
// verified gluing factor.
struct SectionForm {
  BiForm form;         // constant coefficients
  FieldScalar factor;  // equals check_section(form, gluing)
};

// Bidegree-(1,1) constant form satisfying the flow identity with constant c.
struct FlowForm {
  BiForm form;
  FieldScalar c;
};

struct SurfacePoint {
  ProjPoint first;
  ProjPoint second;
  bool operator==(const SurfacePoint& o) const {
    return first == o.first && second == o.second;
  }
  std::string to_string() const;
};

// Restriction of a constant form to the glued lines, as scalar coefficient
// vectors in t = (z2 : w2) resp. (z1 : w1); index = t-numerator degree.
std::vector<FieldScalar> restrict_first(const BiForm& form, const ProjPoint& p1);
std::vector<FieldScalar> restrict_second(const BiForm& form, const ProjPoint& p2);

// The factor A with form(p1, t) = A * form(t, p2) identically in t, if a
// unique nonzero one exists.
std::optional<FieldScalar> check_section(const BiForm& form, const GluingData& g);

// t-coefficients of form(p1,t) - A*form(t,p2) - A*c*f(t,p2); all zero iff
// (form, c) satisfies the flow identity.
std::vector<FieldScalar> flow_residual(const BiForm& form, const FieldScalar& c,
                                       const SectionForm& f, const GluingData& g);

SectionForm make_section(const BiForm& form, const GluingData& g);

// Basis of the 3-dimensional space of (form, c) pairs with
// form(p1,t) - A*form(t,p2) - A*c*f(t,p2) = 0 identically in t.
std::vector<FlowForm> flow_form_space(const SectionForm& f, const GluingData& g);

// Two flow forms with {f1, f2, f} linearly independent.  Preferences are
// tried first (each gets its c from the flow identity); then the basis forms
// greedily in order.
std::pair<FlowForm, FlowForm> choose_flow_pair(
    const std::vector<FlowForm>& basis, const SectionForm& f,
    const GluingData& g,
    const std::vector<BiForm>& preferences = {});

// The two intersection points of {f = 0} and {h = 0}, sorted canonically.
std::array<SurfacePoint, 2> intersection_points(const SectionForm& f,
                                                const FlowForm& h);

bool check_distinct_witnesses(const std::array<SurfacePoint, 4>& pts);

}  // namespace opring
