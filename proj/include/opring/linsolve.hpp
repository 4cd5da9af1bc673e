#pragma once

#include "opring/coeff.hpp"

#include <cstddef>
#include <vector>

namespace opring {

using ExpMatrix = std::vector<std::vector<ExpSum>>;
using CoeffMatrix = std::vector<std::vector<CoeffElem>>;
using FieldMatrix = std::vector<std::vector<FieldScalar>>;

// Result of fraction-free forward elimination (Bareiss) with full pivoting.
// Pivots are chosen among the remaining submatrix by fewest terms, ties by
// position, which keeps intermediate sums small and the pass deterministic.
struct Elimination {
  ExpMatrix m;                          // echelon form, pivot rows first
  std::vector<std::size_t> pivot_cols;  // column of the i-th pivot
  std::size_t rank = 0;
  std::size_t lhs_cols = 0;  // columns eligible as pivots (rest are augmented)
};

// `aug_cols` trailing columns are carried through but never pivoted.
Elimination exp_eliminate(ExpMatrix a, std::size_t aug_cols = 0);
Elimination exp_eliminate_serial(ExpMatrix a, std::size_t aug_cols = 0);
Elimination exp_eliminate_parallel(ExpMatrix a, std::size_t aug_cols = 0);

std::size_t exp_rank(ExpMatrix a);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct LinearSolution {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<CoeffElem> values;  // filled when status == Unique
};

// Exact solve of A x = rhs over the fraction field.
LinearSolution coeff_solve(const CoeffMatrix& a,
                           const std::vector<CoeffElem>& rhs);

std::size_t coeff_rank(const CoeffMatrix& a);

// Reduced row echelon nullspace basis with the standard free-variable
// convention; deterministic (pivots scanned in column order).
std::vector<std::vector<CoeffElem>> coeff_nullspace(const CoeffMatrix& a);

std::size_t field_rank(const FieldMatrix& a);
std::vector<std::vector<FieldScalar>> field_nullspace(const FieldMatrix& a);

}  // namespace opring
