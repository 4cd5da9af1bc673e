#include "opring/biform.hpp"

#include "opring/parallel.hpp"

#include <stdexcept>

namespace opring {

std::size_t BiForm::index(int k, int l) const {
  if (k < 0 || k > n_ || l < 0 || l > n_)
    throw std::out_of_range("biform cell out of range");
  return static_cast<std::size_t>(k) * (n_ + 1) + static_cast<std::size_t>(l);
}

BiForm BiForm::from_constants(int n,
                              const std::vector<std::vector<FieldScalar>>& grid) {
  BiForm f(n);
  if (grid.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("grid rows do not match bidegree");
  for (int k = 0; k <= n; ++k) {
    if (grid[k].size() != static_cast<std::size_t>(n + 1))
      throw std::invalid_argument("grid columns do not match bidegree");
    for (int l = 0; l <= n; ++l)
      if (!grid[k][l].is_zero()) f.set_cell(k, l, CoeffElem(grid[k][l]));
  }
  return f;
}

bool BiForm::is_zero() const {
  for (const auto& c : cells_)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t BiForm::nonzero_cells() const {
  std::size_t n = 0;
  for (const auto& c : cells_)
    if (!c.is_zero()) ++n;
  return n;
}

std::size_t BiForm::term_count() const {
  std::size_t n = 0;
  for (const auto& c : cells_) n += c.num().term_count();
  return n;
}

BiForm BiForm::operator-() const {
  BiForm r(n_);
  for (std::size_t i = 0; i < cells_.size(); ++i) r.cells_[i] = -cells_[i];
  return r;
}

BiForm& BiForm::operator+=(const BiForm& o) {
  if (n_ != o.n_) throw std::invalid_argument("bidegree mismatch in sum");
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += o.cells_[i];
  return *this;
}

BiForm& BiForm::operator-=(const BiForm& o) {
  if (n_ != o.n_) throw std::invalid_argument("bidegree mismatch in sum");
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] -= o.cells_[i];
  return *this;
}

BiForm BiForm::mul_serial(const BiForm& l, const BiForm& r) {
  BiForm out(l.n_ + r.n_);
  for (int ka = 0; ka <= l.n_; ++ka)
    for (int la = 0; la <= l.n_; ++la) {
      const CoeffElem& ca = l.cell(ka, la);
      if (ca.is_zero()) continue;
      for (int kb = 0; kb <= r.n_; ++kb)
        for (int lb = 0; lb <= r.n_; ++lb) {
          const CoeffElem& cb = r.cell(kb, lb);
          if (cb.is_zero()) continue;
          std::size_t idx = out.index(ka + kb, la + lb);
          out.cells_[idx] += ca * cb;
        }
    }
  return out;
}

BiForm BiForm::mul_parallel(const BiForm& l, const BiForm& r) {
  int n = l.n_ + r.n_;
  BiForm out(n);
  std::size_t cells = static_cast<std::size_t>(n + 1) * (n + 1);
  par::for_range(cells, [&](std::size_t idx) {
    int k = static_cast<int>(idx) / (n + 1);
    int lo = static_cast<int>(idx) % (n + 1);
    CoeffElem acc;
    for (int ka = std::max(0, k - r.n_); ka <= std::min(l.n_, k); ++ka)
      for (int la = std::max(0, lo - r.n_); la <= std::min(l.n_, lo); ++la) {
        const CoeffElem& ca = l.cell(ka, la);
        if (ca.is_zero()) continue;
        const CoeffElem& cb = r.cell(k - ka, lo - la);
        if (cb.is_zero()) continue;
        acc += ca * cb;
      }
    out.cells_[idx] = std::move(acc);
  });
  return out;
}

BiForm operator*(const BiForm& l, const BiForm& r) {
  return par::enabled() ? BiForm::mul_parallel(l, r) : BiForm::mul_serial(l, r);
}

BiForm BiForm::scaled(const CoeffElem& c) const {
  BiForm r(n_);
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!cells_[i].is_zero()) r.cells_[i] = cells_[i] * c;
  return r;
}

BiForm BiForm::derive(Axis axis) const {
  BiForm r(n_);
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!cells_[i].is_zero()) r.cells_[i] = cells_[i].derive(axis);
  return r;
}

std::vector<CoeffElem> BiForm::eval_line(Slot fixed, const FieldScalar& a,
                                         const FieldScalar& b) const {
  std::vector<CoeffElem> out(static_cast<std::size_t>(n_) + 1);
  for (int k = 0; k <= n_; ++k) {
    // weight of the fixed slot's degree-k coordinate: a^k b^(n-k)
    FieldScalar w = a.pow(k) * b.pow(n_ - k);
    if (w.is_zero()) continue;
    CoeffElem cw{w};
    for (int l = 0; l <= n_; ++l) {
      const CoeffElem& c =
          fixed == Slot::First ? cell(k, l) : cell(l, k);
      if (!c.is_zero()) out[static_cast<std::size_t>(l)] += c * cw;
    }
  }
  return out;
}

CoeffElem BiForm::eval_point(const FieldScalar& a1, const FieldScalar& b1,
                             const FieldScalar& a2, const FieldScalar& b2) const {
  auto line = eval_line(Slot::First, a1, b1);
  CoeffElem acc;
  for (int l = 0; l <= n_; ++l) {
    if (line[static_cast<std::size_t>(l)].is_zero()) continue;
    FieldScalar w = a2.pow(l) * b2.pow(n_ - l);
    if (w.is_zero()) continue;
    acc += line[static_cast<std::size_t>(l)] * CoeffElem(w);
  }
  return acc;
}

std::string BiForm::to_string() const {
  std::string out;
  for (int k = 0; k <= n_; ++k)
    for (int l = 0; l <= n_; ++l) {
      const CoeffElem& c = cell(k, l);
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      std::string cs = c.to_string();
      if (cs != "1") out += "(" + cs + ")*";
      out += "z1^" + std::to_string(k) + "w1^" + std::to_string(n_ - k) +
             "z2^" + std::to_string(l) + "w2^" + std::to_string(n_ - l);
    }
  return out.empty() ? "0" : out;
}

}  // namespace opring
