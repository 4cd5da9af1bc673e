#include "opring/ba.hpp"

#include "opring/errors.hpp"
#include "opring/linsolve.hpp"

#include <algorithm>

namespace opring {

namespace {

// Λ-side coefficient of the membership identity at order n (without Λ):
// A^n · u^{-c1} v^{-c2}.
CoeffElem edge_factor(int n, const Session& s) {
  CoeffElem e = CoeffElem::monomial(-s.c1(), -s.c2());
  return e * CoeffElem(s.gluing.factor.pow(n));
}

bool all_zero(const std::vector<CoeffElem>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const CoeffElem& c) { return c.is_zero(); });
}

}  // namespace

std::optional<MembershipTag> membership_check(const BiForm& numerator,
                                              const Session& s) {
  int n = numerator.bidegree();
  auto r1 = numerator.eval_line(BiForm::Slot::First, s.gluing.p1.a(),
                                s.gluing.p1.b());
  auto r2 = numerator.eval_line(BiForm::Slot::Second, s.gluing.p2.a(),
                                s.gluing.p2.b());
  bool z1 = all_zero(r1), z2 = all_zero(r2);
  if (z1 && z2) return MembershipTag{std::nullopt};
  if (z1 || z2) return std::nullopt;
  CoeffElem e = edge_factor(n, s);
  std::size_t j0 = 0;
  while (r2[j0].is_zero()) ++j0;
  CoeffElem ratio = r1[j0] / (e * r2[j0]);
  if (!ratio.is_constant()) return std::nullopt;
  FieldScalar lambda = ratio.constant_value();
  CoeffElem le = CoeffElem(lambda) * e;
  for (std::size_t j = 0; j < r1.size(); ++j)
    if (r1[j] != le * r2[j]) return std::nullopt;
  return MembershipTag{lambda};
}

BAElement BAElement::checked(BiForm numerator, const Session& s) {
  auto tag = membership_check(numerator, s);
  if (!tag)
    throw MembershipViolation(
        "numerator fails the constant-eigenvalue identity on the glued lines");
  return BAElement(std::move(numerator), std::move(*tag));
}

BAElement BAElement::zero(int pole_order) {
  return BAElement(BiForm(pole_order), MembershipTag{std::nullopt});
}

BAElement ba_derive(const BAElement& e, Axis axis, const Session& s) {
  const BiForm& flow = axis == Axis::X ? s.f1.form : s.f2.form;
  BiForm num = s.f.form * e.numerator().derive(axis) + flow * e.numerator();
  // the tag carries over: differentiating multiplies both edge restrictions
  // by the same flow ratio and exponential correction
  return BAElement::checked(std::move(num), s);
}

BAElement ba_lift(const BAElement& e, int target_order, const Session& s) {
  int n = e.pole_order();
  if (target_order < n)
    throw InvalidLift("cannot lift from pole order " + std::to_string(n) +
                      " down to " + std::to_string(target_order));
  BiForm num = e.numerator();
  for (int i = n; i < target_order; ++i) num = num * s.f.form;
  return BAElement::checked(std::move(num), s);
}

BAElement ba_scale_by_function(const BAElement& e, const FunctionOnGamma& lam,
                               const Session& s) {
  return BAElement::checked(lam.numerator * e.numerator(), s);
}

BAElement ba_scale_by_coeff(const BAElement& e, const CoeffElem& c,
                            const Session& s) {
  return BAElement::checked(e.numerator().scaled(c), s);
}

BAElement ba_add(const BAElement& a, const BAElement& b, const Session& s) {
  int m = std::max(a.pole_order(), b.pole_order());
  BAElement la = ba_lift(a, m, s), lb = ba_lift(b, m, s);
  return BAElement::checked(la.numerator() + lb.numerator(), s);
}

bool ba_equal(const BAElement& a, const BAElement& b, const Session& s) {
  int m = std::max(a.pole_order(), b.pole_order());
  return ba_lift(a, m, s).numerator() == ba_lift(b, m, s).numerator();
}

std::size_t rank_M(int n, const Session& s) {
  if (n < 1) throw std::invalid_argument("pole order must be positive");
  // Unknowns: the (n+1)^2 numerator cells.  Equation j equates the t^j
  // coefficients of the two edge restrictions; the combined constant
  // Λ·A^n·u^{-c1}v^{-c2} enters linearly as one symbolic unit μ, carried
  // in the spare exponent slot of ExpSum.
  std::size_t w = static_cast<std::size_t>(n) + 1;
  ExpMatrix m(w, std::vector<ExpSum>(w * w));
  const ProjPoint& p1 = s.gluing.p1;
  const ProjPoint& p2 = s.gluing.p2;
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l) {
        ExpSum entry;
        if (l == j) {
          FieldScalar c = p1.a().pow(k) * p1.b().pow(n - k);
          if (!c.is_zero()) entry += ExpSum(c);
        }
        if (k == j) {
          FieldScalar c = p2.a().pow(l) * p2.b().pow(n - l);
          if (!c.is_zero()) entry -= ExpSum::monomial(1, 0, c);
        }
        m[static_cast<std::size_t>(j)]
         [static_cast<std::size_t>(k) * w + static_cast<std::size_t>(l)] =
             std::move(entry);
      }
  std::size_t rank = exp_rank(std::move(m));
  return w * w - rank;
}

namespace {

// Unit-normalize a candidate numerator: clear denominators, strip content,
// center the exponent window on the lattice, scale the first cell's leading
// coefficient to 1.
BiForm canonical_numerator(std::vector<CoeffElem> cells, const Int& q0) {
  ExpSum l(1);
  for (const auto& c : cells) {
    if (c.is_zero()) continue;
    ExpSum g = exp_gcd(l, c.den());
    l = l * *exp_try_divide(c.den(), g);
  }
  std::vector<ExpSum> nums(cells.size());
  ExpSum content;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].is_zero()) continue;
    nums[i] = cells[i].num() * *exp_try_divide(l, cells[i].den());
    content = exp_gcd(content, nums[i]);
  }
  bool have = false;
  Rat rmin, rmax, smin, smax;
  for (auto& nu : nums) {
    if (nu.is_zero()) continue;
    if (content != ExpSum(1)) nu = *exp_try_divide(nu, content);
    if (!have) {
      rmin = nu.min_r();
      rmax = nu.max_r();
      smin = nu.min_s();
      smax = nu.max_s();
      have = true;
    } else {
      rmin = std::min(rmin, nu.min_r());
      rmax = std::max(rmax, nu.max_r());
      smin = std::min(smin, nu.min_s());
      smax = std::max(smax, nu.max_s());
    }
  }
  if (have) {
    // lattice floor of the window midpoint
    auto center = [&](const Rat& lo, const Rat& hi) {
      Rat mid = (lo + hi) * Rat(q0) / 2;
      Int fl = rat_num(mid) / rat_den(mid);
      if (mid < 0 && fl * rat_den(mid) != rat_num(mid)) fl -= 1;
      return Rat(fl, q0);
    };
    Rat sr = center(rmin, rmax), ss = center(smin, smax);
    FieldScalar lead;
    bool found = false;
    for (auto& nu : nums) {
      if (nu.is_zero()) continue;
      nu = nu.shifted(-sr, -ss);
      if (!found) {
        lead = nu.leading().second;
        found = true;
      }
    }
    FieldScalar inv = lead.inverse();
    for (auto& nu : nums)
      if (!nu.is_zero()) nu = nu.scaled(inv);
  }
  int n = 1;
  BiForm out(n);
  for (int k = 0; k <= n; ++k)
    for (int l2 = 0; l2 <= n; ++l2) {
      std::size_t idx = static_cast<std::size_t>(2 * k + l2);
      if (!nums[idx].is_zero()) out.set_cell(k, l2, CoeffElem(nums[idx]));
    }
  return out;
}

}  // namespace

BasisPair default_basis(const Session& s) {
  // membership at pole order 1 on the single-valued (Λ = 1) stratum
  CoeffElem e = edge_factor(1, s);
  const ProjPoint& p1 = s.gluing.p1;
  const ProjPoint& p2 = s.gluing.p2;
  CoeffMatrix m(2, std::vector<CoeffElem>(4));
  for (int j = 0; j <= 1; ++j)
    for (int k = 0; k <= 1; ++k)
      for (int l = 0; l <= 1; ++l) {
        CoeffElem entry;
        if (l == j) entry += CoeffElem(p1.a().pow(k) * p1.b().pow(1 - k));
        if (k == j) entry -= e * CoeffElem(p2.a().pow(l) * p2.b().pow(1 - l));
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(2 * k + l)] =
            std::move(entry);
      }
  auto null_basis = coeff_nullspace(m);
  if (null_basis.size() != 2)
    throw DegenerateModule("pole-order-1 solution space has dimension " +
                           std::to_string(null_basis.size()) + ", expected 2");
  std::vector<BiForm> forms;
  forms.reserve(2);
  for (auto& v : null_basis)
    forms.push_back(canonical_numerator(std::move(v), s.q0));
  auto size_key = [](const BiForm& f) {
    return std::pair<std::size_t, std::size_t>(f.nonzero_cells(),
                                               f.term_count());
  };
  auto cell_less = [](const BiForm& a, const BiForm& b) {
    for (int k = 0; k <= 1; ++k)
      for (int l = 0; l <= 1; ++l) {
        if (a.cell(k, l) != b.cell(k, l))
          return CoeffElem::struct_less(a.cell(k, l), b.cell(k, l));
      }
    return false;
  };
  std::sort(forms.begin(), forms.end(), [&](const BiForm& a, const BiForm& b) {
    if (size_key(a) != size_key(b)) return size_key(a) < size_key(b);
    return cell_less(a, b);
  });
  BasisPair pair{BAElement::checked(forms[0], s),
                 BAElement::checked(forms[1], s)};
  CoeffMatrix indep(2, std::vector<CoeffElem>(4));
  for (int k = 0; k <= 1; ++k)
    for (int l = 0; l <= 1; ++l) {
      indep[0][static_cast<std::size_t>(2 * k + l)] = forms[0].cell(k, l);
      indep[1][static_cast<std::size_t>(2 * k + l)] = forms[1].cell(k, l);
    }
  if (coeff_rank(indep) != 2)
    throw DegenerateModule("canonical pole-order-1 pair is dependent");
  return pair;
}

CoeffElem ratio_witness(const BasisPair& basis, const SurfacePoint& p) {
  auto value = [&](const BAElement& e) {
    return e.numerator().eval_point(p.first.a(), p.first.b(), p.second.a(),
                                    p.second.b());
  };
  CoeffElem h2 = value(basis.psi2);
  if (h2.is_zero())
    throw WitnessUndefined("second basis numerator vanishes at " +
                           p.to_string());
  return value(basis.psi1) / h2;
}

}  // namespace opring
