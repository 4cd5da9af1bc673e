#pragma once

#include "opring/coeff.hpp"

#include <vector>

namespace opring {

// Bihomogeneous form of bidegree (n, n) on CP^1 x CP^1 with CoeffElem
// coefficients.  Cell (k, l) holds the coefficient of
// z1^k w1^(n-k) z2^l w2^(n-l).
class BiForm {
 public:
  explicit BiForm(int n = 0) : n_(n), cells_(size(n)) {
    if (n < 0) throw std::invalid_argument("negative bidegree");
  }

  static BiForm from_constants(
      int n, const std::vector<std::vector<FieldScalar>>& grid);

  int bidegree() const { return n_; }
  const CoeffElem& cell(int k, int l) const { return cells_[index(k, l)]; }
  void set_cell(int k, int l, CoeffElem c) { cells_[index(k, l)] = std::move(c); }

  bool is_zero() const;
  std::size_t nonzero_cells() const;
  std::size_t term_count() const;  // total ExpSum terms over all numerators

  BiForm operator-() const;
  BiForm& operator+=(const BiForm& o);
  BiForm& operator-=(const BiForm& o);
  friend BiForm operator+(BiForm l, const BiForm& r) { return l += r; }
  friend BiForm operator-(BiForm l, const BiForm& r) { return l -= r; }

  // Bidegrees add; dispatches between the OpenMP kernel and the serial
  // reference depending on par::enabled().
  friend BiForm operator*(const BiForm& l, const BiForm& r);
  static BiForm mul_serial(const BiForm& l, const BiForm& r);
  static BiForm mul_parallel(const BiForm& l, const BiForm& r);

  BiForm scaled(const CoeffElem& c) const;
  BiForm derive(Axis axis) const;  // cellwise d/dx or d/dy

  // Restriction to a line: fixing the chosen slot at (a : b) leaves a degree-n
  // form in the other slot, returned as its n+1 coefficients.
  enum class Slot { First, Second };
  std::vector<CoeffElem> eval_line(Slot fixed, const FieldScalar& a,
                                   const FieldScalar& b) const;

  CoeffElem eval_point(const FieldScalar& a1, const FieldScalar& b1,
                       const FieldScalar& a2, const FieldScalar& b2) const;

  bool operator==(const BiForm& o) const {
    return n_ == o.n_ && cells_ == o.cells_;
  }
  bool operator!=(const BiForm& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  static std::size_t size(int n) {
    return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
  }
  std::size_t index(int k, int l) const;

  int n_;
  std::vector<CoeffElem> cells_;
};

}  // namespace opring
