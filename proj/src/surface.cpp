#include "opring/surface.hpp"

#include "opring/errors.hpp"
#include "opring/linsolve.hpp"

#include <algorithm>

namespace opring {

ProjPoint::ProjPoint(FieldScalar a, FieldScalar b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero() && b_.is_zero())
    throw InvalidProjectivePoint("(0 : 0) is not a projective point");
}

ProjPoint ProjPoint::normalized() const {
  if (!b_.is_zero()) return ProjPoint(a_ / b_, FieldScalar(1));
  return ProjPoint(FieldScalar(1), FieldScalar(0));
}

std::string ProjPoint::to_string() const {
  return "(" + a_.to_string() + " : " + b_.to_string() + ")";
}

GluingData::GluingData(ProjPoint p1_, ProjPoint p2_, FieldScalar factor_)
    : p1(std::move(p1_)), p2(std::move(p2_)), factor(std::move(factor_)) {
  if (p1 == p2) throw ValidationError("p1 equals p2");
  if (factor.is_zero()) throw ValidationError("gluing factor A is zero");
}

std::string SurfacePoint::to_string() const {
  return first.to_string() + " x " + second.to_string();
}

namespace {

std::vector<FieldScalar> as_constants(const std::vector<CoeffElem>& v) {
  std::vector<FieldScalar> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].constant_value();
  return out;
}

bool all_zero(const std::vector<FieldScalar>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const FieldScalar& x) { return x.is_zero(); });
}

// Constant bidegree-(1,1) form as the flat vector (c00, c01, c10, c11).
std::vector<FieldScalar> flat4(const BiForm& form) {
  if (form.bidegree() != 1)
    throw std::invalid_argument("expected a bidegree-(1,1) form");
  std::vector<FieldScalar> v;
  v.reserve(4);
  for (int k = 0; k <= 1; ++k)
    for (int l = 0; l <= 1; ++l) v.push_back(form.cell(k, l).constant_value());
  return v;
}

}  // namespace

std::vector<FieldScalar> restrict_first(const BiForm& form, const ProjPoint& p1) {
  return as_constants(form.eval_line(BiForm::Slot::First, p1.a(), p1.b()));
}

std::vector<FieldScalar> restrict_second(const BiForm& form, const ProjPoint& p2) {
  return as_constants(form.eval_line(BiForm::Slot::Second, p2.a(), p2.b()));
}

std::vector<FieldScalar> flow_residual(const BiForm& form, const FieldScalar& c,
                                       const SectionForm& f,
                                       const GluingData& g) {
  auto r1 = restrict_first(form, g.p1);
  auto r2 = restrict_second(form, g.p2);
  auto fs = restrict_second(f.form, g.p2);
  std::vector<FieldScalar> res(r1.size());
  for (std::size_t j = 0; j < r1.size(); ++j)
    res[j] = r1[j] - g.factor * r2[j] - g.factor * c * fs[j];
  return res;
}

std::optional<FieldScalar> check_section(const BiForm& form,
                                         const GluingData& g) {
  if (form.is_zero()) throw ZeroForm();
  auto r1 = restrict_first(form, g.p1);
  auto r2 = restrict_second(form, g.p2);
  if (all_zero(r2)) return std::nullopt;  // no nonzero factor can match
  std::size_t j0 = 0;
  while (r2[j0].is_zero()) ++j0;
  FieldScalar a = r1[j0] / r2[j0];
  if (a.is_zero()) return std::nullopt;
  for (std::size_t j = 0; j < r1.size(); ++j)
    if (r1[j] != a * r2[j]) return std::nullopt;
  return a;
}

SectionForm make_section(const BiForm& form, const GluingData& g) {
  auto a = check_section(form, g);
  if (!a)
    throw ValidationError("form does not satisfy the gluing identity");
  if (*a != g.factor)
    throw ValidationError("gluing identity holds with factor " +
                          a->to_string() + ", not the declared " +
                          g.factor.to_string());
  return SectionForm{form, *a};
}

std::vector<FlowForm> flow_form_space(const SectionForm& f,
                                      const GluingData& g) {
  auto fs = restrict_second(f.form, g.p2);
  const FieldScalar& A = g.factor;
  // unknowns: c00, c01, c10, c11, c  (form cells in lex order, then the
  // flow constant); one equation per t-coefficient j.
  FieldMatrix m(2, std::vector<FieldScalar>(5));
  for (int j = 0; j <= 1; ++j) {
    for (int k = 0; k <= 1; ++k)
      for (int l = 0; l <= 1; ++l) {
        FieldScalar coef(0);
        if (l == j) coef += g.p1.a().pow(k) * g.p1.b().pow(1 - k);
        if (k == j) coef -= A * g.p2.a().pow(l) * g.p2.b().pow(1 - l);
        m[j][static_cast<std::size_t>(2 * k + l)] = coef;
      }
    m[j][4] = -(A * fs[static_cast<std::size_t>(j)]);
  }
  auto basis = field_nullspace(m);
  if (basis.size() != 3)
    throw DegenerateGluing("flow-form space has dimension " +
                           std::to_string(basis.size()) + ", expected 3");
  std::vector<FlowForm> out;
  out.reserve(3);
  for (const auto& v : basis) {
    BiForm form(1);
    for (int k = 0; k <= 1; ++k)
      for (int l = 0; l <= 1; ++l)
        form.set_cell(k, l, CoeffElem(v[static_cast<std::size_t>(2 * k + l)]));
    out.push_back(FlowForm{std::move(form), v[4]});
  }
  return out;
}

std::pair<FlowForm, FlowForm> choose_flow_pair(
    const std::vector<FlowForm>& basis, const SectionForm& f,
    const GluingData& g, const std::vector<BiForm>& preferences) {
  std::vector<FlowForm> candidates;
  auto fs = restrict_second(f.form, g.p2);
  if (all_zero(fs))
    throw DegenerateGluing("section form vanishes on a glued line");
  std::size_t j0 = fs[0].is_zero() ? 1 : 0;
  for (const BiForm& pref : preferences) {
    // recover this form's flow constant, then confirm the identity holds
    auto lhs = flow_residual(pref, FieldScalar(0), f, g);
    FieldScalar c = lhs[j0] / (g.factor * fs[j0]);
    if (!all_zero(flow_residual(pref, c, f, g))) continue;  // not a flow form
    candidates.push_back(FlowForm{pref, c});
  }
  candidates.insert(candidates.end(), basis.begin(), basis.end());

  std::vector<FieldScalar> fv = flat4(f.form);
  auto rank_with = [&](const std::vector<const FlowForm*>& picked) {
    FieldMatrix m;
    m.push_back(fv);
    for (const FlowForm* p : picked) m.push_back(flat4(p->form));
    return field_rank(m);
  };
  const FlowForm* first = nullptr;
  for (const FlowForm& cand : candidates) {
    if (!first) {
      if (rank_with({&cand}) == 2) first = &cand;
      continue;
    }
    if (rank_with({first, &cand}) == 3)
      return {*first, cand};
  }
  throw DegenerateGluing("no linearly independent flow pair exists");
}

namespace {

struct PointKey {
  std::vector<FieldScalar> coords;
  explicit PointKey(const SurfacePoint& p) {
    for (const ProjPoint* q : {&p.first, &p.second}) {
      ProjPoint n = q->normalized();
      coords.push_back(n.a());
      coords.push_back(n.b());
    }
  }
  bool operator<(const PointKey& o) const {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (auto c = coords[i] <=> o.coords[i]; c != 0) return c < 0;
    }
    return false;
  }
};

}  // namespace

std::array<SurfacePoint, 2> intersection_points(const SectionForm& f,
                                                const FlowForm& h) {
  std::vector<FieldScalar> fv = flat4(f.form), hv = flat4(h.form);
  if (field_rank({fv, hv}) < 2)
    throw DegeneratePencil("the two forms are proportional");

  // write each form as a(t) z1 + b(t) w1 with t = (z2 : w2);
  // index 1 in flat4 order picks cells (k, l): a_l = c[1][l], b_l = c[0][l]
  auto af = [&](int l) { return fv[static_cast<std::size_t>(2 + l)]; };
  auto bf = [&](int l) { return fv[static_cast<std::size_t>(l)]; };
  auto ah = [&](int l) { return hv[static_cast<std::size_t>(2 + l)]; };
  auto bh = [&](int l) { return hv[static_cast<std::size_t>(l)]; };

  // resultant in (z1 : w1): quadratic qa z2^2 + qb z2 w2 + qc w2^2
  FieldScalar qa = af(1) * bh(1) - bf(1) * ah(1);
  FieldScalar qb = af(0) * bh(1) + af(1) * bh(0) - bf(0) * ah(1) - bf(1) * ah(0);
  FieldScalar qc = af(0) * bh(0) - bf(0) * ah(0);

  std::vector<ProjPoint> roots;
  if (!qa.is_zero()) {
    FieldScalar disc = qb * qb - FieldScalar(4) * qa * qc;
    if (disc.is_zero())
      throw NonGenericData("the curves are tangent: coincident intersection");
    if (!disc.is_rational())
      throw UnsupportedExtension(
          "intersection discriminant " + disc.to_string() +
          " lies outside the rationals; a nested radical would be required");
    FieldScalar s = FieldScalar::sqrt_of(disc.as_rational());
    FieldScalar half = FieldScalar(1) / (FieldScalar(2) * qa);
    roots.emplace_back((-qb + s) * half, FieldScalar(1));
    roots.emplace_back((-qb - s) * half, FieldScalar(1));
  } else if (!qb.is_zero()) {
    roots.emplace_back(FieldScalar(1), FieldScalar(0));
    roots.emplace_back(-qc / qb, FieldScalar(1));
  } else if (!qc.is_zero()) {
    throw NonGenericData("the curves are tangent: coincident intersection");
  } else {
    throw NonGenericData("the curves share a component");
  }

  std::array<SurfacePoint, 2> pts = {
      SurfacePoint{ProjPoint(1, 0), ProjPoint(1, 0)},
      SurfacePoint{ProjPoint(1, 0), ProjPoint(1, 0)}};
  for (std::size_t i = 0; i < 2; ++i) {
    const ProjPoint& t = roots[i];
    auto line_coord = [&](auto a, auto b) -> std::optional<ProjPoint> {
      FieldScalar av = a(0) * t.b() + a(1) * t.a();
      FieldScalar bv = b(0) * t.b() + b(1) * t.a();
      if (av.is_zero() && bv.is_zero()) return std::nullopt;
      return ProjPoint(-bv, av);
    };
    auto z1 = line_coord(af, bf);
    if (!z1) z1 = line_coord(ah, bh);
    if (!z1)
      throw NonGenericData("both curves contain the line over " + t.to_string());
    pts[i] = SurfacePoint{z1->normalized(), t.normalized()};
  }
  if (pts[0] == pts[1])
    throw NonGenericData("intersection points coincide");
  if (PointKey(pts[1]) < PointKey(pts[0])) std::swap(pts[0], pts[1]);
  return pts;
}

bool check_distinct_witnesses(const std::array<SurfacePoint, 4>& pts) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) return false;
  return true;
}

}  // namespace opring
