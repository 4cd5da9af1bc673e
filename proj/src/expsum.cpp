#include "opring/expsum.hpp"

#include "opring/errors.hpp"

#include <algorithm>
#include <cassert>

namespace opring {

ExpSum ExpSum::monomial(const Rat& r, const Rat& s, const FieldScalar& c) {
  ExpSum e;
  e.add_term({r, s}, c);
  return e;
}

bool ExpSum::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ExpKey{0, 0};
}

FieldScalar ExpSum::constant_value() const {
  if (terms_.empty()) return FieldScalar(0);
  if (!is_constant())
    throw std::invalid_argument("exponential sum is not constant: " + to_string());
  return terms_.begin()->second;
}

void ExpSum::add_term(const ExpKey& k, const FieldScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpSum ExpSum::operator-() const {
  ExpSum r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

ExpSum& ExpSum::operator+=(const ExpSum& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ExpSum operator*(const ExpSum& l, const ExpSum& r) {
  ExpSum out;
  for (const auto& [ka, ca] : l.terms())
    for (const auto& [kb, cb] : r.terms())
      out.add_term({ka.r + kb.r, ka.s + kb.s}, ca * cb);
  return out;
}

ExpSum ExpSum::scaled(const FieldScalar& c) const {
  ExpSum r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

ExpSum ExpSum::shifted(const Rat& dr, const Rat& ds) const {
  ExpSum r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(ExpKey{k.r + dr, k.s + ds}, v);
  return r;
}

ExpSum ExpSum::derive(Axis axis) const {
  ExpSum r;
  for (const auto& [k, v] : terms_)
    r.add_term(k, v * FieldScalar(axis == Axis::X ? k.r : k.s));
  return r;
}

namespace {
[[noreturn]] void throw_empty() {
  throw std::invalid_argument("exponent range of the zero sum");
}
}  // namespace

Rat ExpSum::min_r() const {
  if (terms_.empty()) throw_empty();
  Rat m = terms_.begin()->first.r;
  for (const auto& [k, v] : terms_) m = std::min(m, k.r, [](const Rat& a, const Rat& b) { return a < b; });
  return m;
}

Rat ExpSum::max_r() const {
  if (terms_.empty()) throw_empty();
  return terms_.rbegin()->first.r;
}

Rat ExpSum::min_s() const {
  if (terms_.empty()) throw_empty();
  Rat m = terms_.begin()->first.s;
  for (const auto& [k, v] : terms_)
    if (k.s < m) m = k.s;
  return m;
}

Rat ExpSum::max_s() const {
  if (terms_.empty()) throw_empty();
  Rat m = terms_.begin()->first.s;
  for (const auto& [k, v] : terms_)
    if (k.s > m) m = k.s;
  return m;
}

std::pair<ExpKey, FieldScalar> ExpSum::leading() const {
  if (terms_.empty()) throw_empty();
  return *terms_.rbegin();
}

bool ExpSum::struct_less(const ExpSum& a, const ExpSum& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first < ib->first) return true;
    if (ib->first < ia->first) return false;
    if (auto c = ia->second <=> ib->second; c != 0) return c < 0;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

std::string ExpSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string coef = c.to_string();
    bool negated = false;
    if (coef.size() > 1 && coef[0] == '-' &&
        coef.find_first_of("+-", 1) == std::string::npos) {
      coef = coef.substr(1);
      negated = true;
    }
    if (!first) out += negated ? " - " : " + ";
    else if (negated) out += "-";
    first = false;
    std::string expo;
    auto part = [](const Rat& e, const char* var) -> std::string {
      if (e == 0) return "";
      if (e == 1) return var;
      if (e == -1) return "-" + std::string(var);
      return rat_to_string(e) + var;
    };
    std::string px = part(k.r, "x"), py = part(k.s, "y");
    if (!px.empty() && !py.empty()) {
      expo = px + (py[0] == '-' ? py : "+" + py);
    } else {
      expo = px + py;
    }
    if (expo.empty()) {
      out += coef.find_first_of("+-", 1) != std::string::npos ? "(" + coef + ")" : coef;
    } else {
      std::string base = "e^(" + expo + ")";
      if (coef == "1") out += base;
      else if (coef.find_first_of("+-", 1) != std::string::npos)
        out += "(" + coef + ")*" + base;
      else out += coef + "*" + base;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// gcd and exact division.  Exponents are scaled onto an integer lattice and
// shifted so both operands have minimal exponents (0, 0); every monomial is a
// unit in this ring, so shifts only change the result by a unit and the
// canonical representative fixes that freedom.

namespace {

using LKey = std::pair<long long, long long>;
using LPoly = std::map<LKey, FieldScalar>;

Int exponent_scale(std::initializer_list<const ExpSum*> sums) {
  Int q = 1;
  for (const ExpSum* e : sums)
    for (const auto& [k, c] : e->terms()) {
      q = int_lcm(q, rat_den(k.r));
      q = int_lcm(q, rat_den(k.s));
    }
  return q;
}

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

LPoly to_lattice(const ExpSum& e, const Int& q) {
  LPoly p;
  Rat mr = e.min_r(), ms = e.min_s();
  for (const auto& [k, c] : e.terms()) {
    Rat r = (k.r - mr) * Rat(q);
    Rat s = (k.s - ms) * Rat(q);
    p.emplace(LKey{to_ll(rat_num(r)), to_ll(rat_num(s))}, c);
  }
  return p;
}

ExpSum from_lattice(const LPoly& p, const Int& q) {
  ExpSum e;
  for (const auto& [k, c] : p)
    e.add_term({Rat(k.first, q), Rat(k.second, q)}, c);
  return e;
}

// Dense univariate polynomials over the scalar field (index = u-degree).
using UPoly = std::vector<FieldScalar>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool uzero(const UPoly& p) { return p.empty(); }

UPoly umul(const UPoly& a, const UPoly& b) {
  if (uzero(a) || uzero(b)) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}

UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  utrim(a);
  return a;
}

UPoly uscale(UPoly a, const FieldScalar& c) {
  if (c.is_zero()) return {};
  for (auto& x : a) x *= c;
  return a;
}

// Content of the rational and radical parts: gcd of numerators over lcm of
// denominators, so p divided by it has coprime integer components.
Rat rat_content(const UPoly& p) {
  Int g = 0, l = 1;
  for (const FieldScalar& x : p)
    for (const Rat& r : {x.rational_part(), x.radical_part()}) {
      if (r == 0) continue;
      g = int_gcd(g, rat_num(r));
      l = int_lcm(l, rat_den(r));
    }
  if (g < 0) g = -g;
  return g == 0 ? Rat(1) : Rat(g, l);
}

UPoly rat_primitive(UPoly p) {
  if (uzero(p)) return p;
  Rat c = rat_content(p);
  if (c != 1) p = uscale(std::move(p), FieldScalar(Rat(1) / c));
  return p;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * (a mod b), division free.
UPoly uprem(UPoly a, const UPoly& b) {
  assert(!uzero(b));
  const FieldScalar lb = b.back();
  long long fixup = (long long)a.size() - (long long)b.size() + 1;
  while (a.size() >= b.size() && !uzero(a)) {
    FieldScalar la = a.back();
    std::size_t off = a.size() - b.size();
    a = uscale(std::move(a), lb);
    --fixup;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= la * b[i];
    utrim(a);
  }
  for (; fixup > 0; --fixup) a = uscale(std::move(a), lb);
  return a;
}

// Exact quotient; throws if the division leaves a remainder.
UPoly udiv_exact(UPoly a, const UPoly& b) {
  assert(!uzero(b));
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !uzero(a)) {
    FieldScalar f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    utrim(a);
  }
  if (!uzero(a)) throw std::logic_error("inexact univariate division");
  utrim(q);
  return q;
}

// Monic gcd via the subresultant remainder sequence.  Each remainder equals a
// subresultant of the inputs, so coefficient sizes stay polynomial.  Plain
// Euclid grows them exponentially, and integer content stripping alone cannot
// fix that over Q(sqrt d): unit factors like (1+sqrt 2)^k have content 1.
// Signs are ignored throughout; the result is normalized to monic anyway.
UPoly ugcd(UPoly a, UPoly b) {
  a = rat_primitive(std::move(a));
  b = rat_primitive(std::move(b));
  if (uzero(a)) std::swap(a, b);
  if (a.size() < b.size()) std::swap(a, b);
  FieldScalar g(1), h(1);
  while (!uzero(b)) {
    long long delta = (long long)a.size() - (long long)b.size();
    UPoly r = uprem(a, b);
    FieldScalar divisor = g * h.pow(delta);
    a = std::move(b);
    b = uscale(std::move(r), divisor.inverse());
    g = a.back();
    if (delta > 0) h = g.pow(delta) / h.pow(delta - 1);
  }
  if (!uzero(a)) {
    a = rat_primitive(std::move(a));
    a = uscale(std::move(a), a.back().inverse());
  }
  return a;
}

// Dense in v with u-polynomial coefficients (index = v-degree).
using VPoly = std::vector<UPoly>;

void vtrim(VPoly& p) {
  while (!p.empty() && uzero(p.back())) p.pop_back();
}

bool vzero(const VPoly& p) { return p.empty(); }

VPoly to_vpoly(const LPoly& p) {
  long long dv = 0;
  for (const auto& [k, c] : p) dv = std::max(dv, k.second);
  VPoly r(static_cast<std::size_t>(dv) + 1);
  for (const auto& [k, c] : p) {
    auto& up = r[static_cast<std::size_t>(k.second)];
    if (up.size() <= static_cast<std::size_t>(k.first))
      up.resize(static_cast<std::size_t>(k.first) + 1);
    up[static_cast<std::size_t>(k.first)] = c;
  }
  for (auto& up : r) utrim(up);
  vtrim(r);
  return r;
}

LPoly from_vpoly(const VPoly& p) {
  LPoly r;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i)
      if (!p[j][i].is_zero())
        r.emplace(LKey{static_cast<long long>(i), static_cast<long long>(j)}, p[j][i]);
  return r;
}

UPoly vcontent(const VPoly& p) {
  UPoly c;
  for (const auto& up : p)
    if (!uzero(up)) c = ugcd(std::move(c), up);
  return c;
}

VPoly vdiv_content(VPoly p, const UPoly& c) {
  for (auto& up : p)
    if (!uzero(up)) up = udiv_exact(std::move(up), c);
  return p;
}

VPoly vprimitive(VPoly p) {
  vtrim(p);
  if (vzero(p)) return p;
  return vdiv_content(std::move(p), vcontent(p));
}

VPoly vmul_u(VPoly p, const UPoly& c) {
  for (auto& up : p) up = umul(up, c);
  vtrim(p);
  return p;
}

// Pseudo-remainder of a by b in v: repeatedly scale by lc_v(b) and cancel the
// top term.  Only used inside the primitive PRS, where content is stripped
// after each step.
VPoly vprem(VPoly a, const VPoly& b) {
  assert(!vzero(b));
  const UPoly& lb = b.back();
  while (!vzero(a) && a.size() >= b.size()) {
    UPoly la = a.back();
    std::size_t off = a.size() - b.size();
    VPoly scaled = vmul_u(a, lb);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (scaled.size() <= off + j) scaled.resize(off + j + 1);
      scaled[off + j] = usub(std::move(scaled[off + j]), umul(la, b[j]));
    }
    vtrim(scaled);
    a = std::move(scaled);
  }
  return a;
}

FieldScalar ueval(const UPoly& p, const FieldScalar& x) {
  FieldScalar acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly uadd(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  utrim(a);
  return a;
}

// p with u evaluated at x, leaving a dense polynomial in v.
UPoly eval_u(const VPoly& p, const FieldScalar& x) {
  UPoly r;
  r.reserve(p.size());
  for (const auto& up : p) r.push_back(ueval(up, x));
  utrim(r);
  return r;
}

VPoly vtranspose(const VPoly& p) {
  VPoly r;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i) {
      if (p[j][i].is_zero()) continue;
      if (r.size() <= i) r.resize(i + 1);
      if (r[i].size() <= j) r[i].resize(j + 1);
      r[i][j] = p[j][i];
    }
  vtrim(r);
  return r;
}

// Bound on deg_v gcd(a, b) from a univariate evaluation u = x.  Any factor g
// of a keeps its v-degree at x whenever lc_v(a)(x) != 0, because lc_v(g)
// divides lc_v(a); the evaluated gcd degree is then an upper bound.  Returns
// -1 if no usable evaluation point is found.
long long vdegree_bound(const VPoly& a, const VPoly& b) {
  for (int x : {2, 3, 5, 7, 11, 13}) {
    FieldScalar fx(x);
    if (ueval(a.back(), fx).is_zero()) continue;
    UPoly ea = eval_u(a, fx), eb = eval_u(b, fx);
    if (uzero(eb)) continue;
    UPoly g = ugcd(std::move(ea), std::move(eb));
    return static_cast<long long>(g.size()) - 1;
  }
  return -1;
}

// Evaluation-interpolation gcd of primitive a, b (Brown): univariate gcd
// images at u = x are scaled to the known leading coefficient gamma(x) and
// Newton-interpolated; once a fresh point adds nothing, the primitive part of
// the interpolant is verified by exact division.  Points whose image degree
// exceeds the best seen are unlucky and skipped; a smaller degree restarts.
// Sets ok = false if no verified gcd emerges within the point budget.
VPoly brown_gcd(const VPoly& a, const VPoly& b, const UPoly& gamma, bool& ok) {
  ExpSum ea = from_lattice(from_vpoly(a), 1), eb = from_lattice(from_vpoly(b), 1);
  VPoly g;
  UPoly nodes{FieldScalar(1)};  // prod (u - x_k) over absorbed points
  long long best = -1;
  int used = 0;
  for (int xi = 2; xi < 256 && used < 160; ++xi) {
    FieldScalar x(xi);
    if (ueval(a.back(), x).is_zero() || ueval(b.back(), x).is_zero()) continue;
    UPoly image = ugcd(eval_u(a, x), eval_u(b, x));
    long long d = static_cast<long long>(image.size()) - 1;
    if (d == 0) {  // primitive parts are coprime
      ok = true;
      return VPoly{UPoly{FieldScalar(1)}};
    }
    if (best != -1 && d > best) continue;
    if (best == -1 || d < best) {
      best = d;
      g.clear();
      nodes = UPoly{FieldScalar(1)};
      used = 0;
    }
    UPoly scaled = uscale(std::move(image), ueval(gamma, x));
    FieldScalar inv = ueval(nodes, x).inverse();
    if (g.size() < scaled.size()) g.resize(scaled.size());
    bool changed = false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      FieldScalar want = j < scaled.size() ? scaled[j] : FieldScalar(0);
      FieldScalar err = want - ueval(g[j], x);
      if (err.is_zero()) continue;
      changed = true;
      g[j] = uadd(std::move(g[j]), uscale(nodes, err * inv));
    }
    nodes = umul(nodes, UPoly{-x, FieldScalar(1)});
    ++used;
    if (changed || used < 2) continue;
    VPoly cand = g;
    vtrim(cand);
    if (vzero(cand)) continue;
    VPoly prim = vprimitive(std::move(cand));
    ExpSum ge = from_lattice(from_vpoly(prim), 1);
    if (exp_try_divide(ea, ge) && exp_try_divide(eb, ge)) {
      ok = true;
      return prim;
    }
  }
  ok = false;
  return {};
}

VPoly vgcd(VPoly a, VPoly b) {
  vtrim(a);
  vtrim(b);
  if (vzero(a)) return b;
  if (vzero(b)) return a;
  UPoly ca = vcontent(a), cb = vcontent(b);
  UPoly c = ugcd(ca, cb);
  a = vdiv_content(std::move(a), ca);
  b = vdiv_content(std::move(b), cb);
  // Coprimality shortcuts: cheap univariate evaluations bound the gcd degree
  // in each variable.  Degree zero in v means the primitive parts share only
  // a u-polynomial, which their trivial content rules out, so the gcd is the
  // content alone.  Degree zero in u leaves a pure v-polynomial, namely the
  // gcd of the transposed contents.
  if (vdegree_bound(a, b) == 0) return VPoly{c};
  VPoly ta = vtranspose(a), tb = vtranspose(b);
  if (vdegree_bound(ta, tb) == 0) {
    UPoly g = ugcd(vcontent(ta), vcontent(tb));
    VPoly r(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) r[j] = uscale(c, g[j]);
    vtrim(r);
    return r;
  }
  if (a.size() < b.size()) std::swap(a, b);
  UPoly gamma = ugcd(a.back(), b.back());
  bool ok = false;
  VPoly g = brown_gcd(a, b, gamma, ok);
  if (ok) return vmul_u(std::move(g), c);
  // primitive remainder sequence as the fallback of last resort
  while (!vzero(b)) {
    VPoly r = vprem(std::move(a), b);
    a = std::move(b);
    b = vprimitive(std::move(r));
  }
  return vmul_u(std::move(a), c);
}

}  // namespace

ExpSum exp_canonical_associate(const ExpSum& a) {
  if (a.is_zero()) return a;
  ExpSum shifted = a.shifted(-a.min_r(), -a.min_s());
  return shifted.scaled(shifted.leading().second.inverse());
}

ExpSum exp_gcd(const ExpSum& a, const ExpSum& b) {
  if (a.is_zero()) return exp_canonical_associate(b);
  if (b.is_zero()) return exp_canonical_associate(a);
  Int q = exponent_scale({&a, &b});
  VPoly g = vgcd(to_vpoly(to_lattice(a, q)), to_vpoly(to_lattice(b, q)));
  return exp_canonical_associate(from_lattice(from_vpoly(g), q));
}

std::optional<ExpSum> exp_try_divide(const ExpSum& a, const ExpSum& b) {
  if (b.is_zero()) throw DivisionByZero("exponential-sum division by zero");
  if (a.is_zero()) return ExpSum();
  Int q = exponent_scale({&a, &b});
  LPoly ra = to_lattice(a, q);
  LPoly rb = to_lattice(b, q);
  // Laurent quotient a/b = (ra/rb) * unit; ra/rb is polynomial when exact.
  LPoly quot;
  const auto& [kb, cb] = *rb.rbegin();
  while (!ra.empty()) {
    const auto& [ka, ca] = *ra.rbegin();
    if (ka.first < kb.first || ka.second < kb.second) return std::nullopt;
    LKey kq{ka.first - kb.first, ka.second - kb.second};
    FieldScalar cq = ca / cb;
    quot.emplace(kq, cq);
    for (const auto& [k, c] : rb) {
      LKey kk{k.first + kq.first, k.second + kq.second};
      auto it = ra.find(kk);
      FieldScalar nv = (it != ra.end() ? it->second : FieldScalar(0)) - c * cq;
      if (it != ra.end()) ra.erase(it);
      if (!nv.is_zero()) ra.emplace(kk, nv);
    }
  }
  // restore the unit dropped by the lattice shifts
  ExpSum result = from_lattice(quot, q);
  return result.shifted(a.min_r() - b.min_r(), a.min_s() - b.min_s());
}

}  // namespace opring
