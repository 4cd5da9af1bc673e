#include "opring/linsolve.hpp"

#include "opring/errors.hpp"
#include "opring/parallel.hpp"

#include <stdexcept>
#include <utility>

namespace opring {

namespace {

ExpSum bareiss_update(const ExpSum& target, const ExpSum& pivot,
                      const ExpSum& row_head, const ExpSum& col_entry,
                      const ExpSum& prev) {
  ExpSum num = target * pivot - row_head * col_entry;
  if (num.is_zero()) return num;
  auto q = exp_try_divide(num, prev);
  if (!q) throw std::logic_error("fraction-free elimination: inexact division");
  return *q;
}

struct PivotPick {
  bool found = false;
  std::size_t row = 0, col = 0;
};

PivotPick pick_pivot(const ExpMatrix& m, std::size_t from_row,
                     std::size_t lhs_cols,
                     const std::vector<bool>& col_used) {
  PivotPick best;
  std::size_t best_terms = 0;
  for (std::size_t r = from_row; r < m.size(); ++r)
    for (std::size_t c = 0; c < lhs_cols; ++c) {
      if (col_used[c] || m[r][c].is_zero()) continue;
      std::size_t t = m[r][c].term_count();
      if (!best.found || t < best_terms) {
        best = {true, r, c};
        best_terms = t;
      }
    }
  return best;
}

template <bool Parallel>
Elimination eliminate_impl(ExpMatrix a, std::size_t aug_cols) {
  Elimination out;
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  if (aug_cols > cols) throw std::invalid_argument("augmented columns exceed width");
  std::size_t lhs = cols - aug_cols;
  out.lhs_cols = lhs;
  std::vector<bool> col_used(lhs, false);

  ExpSum prev(1);
  std::size_t step = 0;
  while (step < rows) {
    PivotPick p = pick_pivot(a, step, lhs, col_used);
    if (!p.found) break;
    std::swap(a[step], a[p.row]);
    col_used[p.col] = true;
    out.pivot_cols.push_back(p.col);
    const std::vector<ExpSum>& prow = a[step];
    const ExpSum& pivot = prow[p.col];
    auto update_row = [&](std::size_t r) {
      std::vector<ExpSum>& row = a[r];
      ExpSum head = std::move(row[p.col]);
      row[p.col] = ExpSum();
      if (head.is_zero()) {
        // still rescale so the Bareiss divisibility pattern is preserved
        for (std::size_t c = 0; c < cols; ++c) {
          if (c == p.col || row[c].is_zero()) continue;
          row[c] = bareiss_update(row[c], pivot, ExpSum(), ExpSum(), prev);
        }
        return;
      }
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == p.col) continue;
        row[c] = bareiss_update(row[c], pivot, head, prow[c], prev);
      }
    };
    if constexpr (Parallel) {
      par::for_range(rows - step - 1,
                     [&](std::size_t i) { update_row(step + 1 + i); });
    } else {
      for (std::size_t r = step + 1; r < rows; ++r) update_row(r);
    }
    prev = pivot;
    ++step;
  }
  out.rank = step;
  out.m = std::move(a);
  return out;
}

}  // namespace

Elimination exp_eliminate_serial(ExpMatrix a, std::size_t aug_cols) {
  return eliminate_impl<false>(std::move(a), aug_cols);
}

Elimination exp_eliminate_parallel(ExpMatrix a, std::size_t aug_cols) {
  return eliminate_impl<true>(std::move(a), aug_cols);
}

Elimination exp_eliminate(ExpMatrix a, std::size_t aug_cols) {
  return par::enabled() ? exp_eliminate_parallel(std::move(a), aug_cols)
                        : exp_eliminate_serial(std::move(a), aug_cols);
}

std::size_t exp_rank(ExpMatrix a) {
  return exp_eliminate(std::move(a)).rank;
}

LinearSolution coeff_solve(const CoeffMatrix& a,
                           const std::vector<CoeffElem>& rhs) {
  std::size_t rows = a.size();
  if (rhs.size() != rows) throw std::invalid_argument("rhs size mismatch");
  std::size_t cols = rows ? a[0].size() : 0;

  // Clear denominators row by row: multiply through by the lcm of the row's
  // denominators, so elimination runs over exponential sums.
  ExpMatrix m(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != cols) throw std::invalid_argument("ragged matrix");
    ExpSum l(1);
    auto fold = [&](const CoeffElem& e) {
      if (e.is_zero()) return;
      ExpSum g = exp_gcd(l, e.den());
      l = l * *exp_try_divide(e.den(), g);
    };
    for (const auto& e : a[r]) fold(e);
    fold(rhs[r]);
    m[r].resize(cols + 1);
    for (std::size_t c = 0; c <= cols; ++c) {
      const CoeffElem& e = c < cols ? a[r][c] : rhs[r];
      if (e.is_zero()) continue;
      m[r][c] = e.num() * *exp_try_divide(l, e.den());
    }
  }

  Elimination el = exp_eliminate(std::move(m), 1);
  LinearSolution sol;
  for (std::size_t r = el.rank; r < rows; ++r)
    if (!el.m[r][cols].is_zero()) {
      sol.status = SolveStatus::Inconsistent;
      return sol;
    }
  if (el.rank < cols) {
    sol.status = SolveStatus::Underdetermined;
    return sol;
  }
  sol.status = SolveStatus::Unique;
  sol.values.assign(cols, CoeffElem());
  for (std::size_t i = el.rank; i-- > 0;) {
    CoeffElem acc(CoeffElem(el.m[i][cols]));
    for (std::size_t j = i + 1; j < el.rank; ++j) {
      std::size_t c = el.pivot_cols[j];
      if (!el.m[i][c].is_zero())
        acc -= CoeffElem(el.m[i][c]) * sol.values[c];
    }
    sol.values[el.pivot_cols[i]] = acc / CoeffElem(el.m[i][el.pivot_cols[i]]);
  }
  return sol;
}

namespace {

// Reduced row echelon form over a field-like element type.
template <class T>
std::pair<std::vector<std::vector<T>>, std::vector<std::size_t>> rref(
    std::vector<std::vector<T>> m) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && m[pr][col].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[row], m[pr]);
    T inv = m[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      T f = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] = m[r][c] - f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::vector<std::vector<T>> nullspace_impl(const std::vector<std::vector<T>>& a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  auto [m, pivots] = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = T(0) - m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::size_t coeff_rank(const CoeffMatrix& a) { return rref(a).second.size(); }

std::vector<std::vector<CoeffElem>> coeff_nullspace(const CoeffMatrix& a) {
  return nullspace_impl(a);
}

std::size_t field_rank(const FieldMatrix& a) { return rref(a).second.size(); }

std::vector<std::vector<FieldScalar>> field_nullspace(const FieldMatrix& a) {
  return nullspace_impl(a);
}

}  // namespace opring
