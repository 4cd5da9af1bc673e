#pragma once

#include "opring/session.hpp"

#include <optional>

namespace opring {

// Meromorphic function g/f^m on the glued surface; the numerator must obey
// the descent identity g(p1,t) = A^m g(t,p2).
struct FunctionOnGamma {
  int pole_order = 0;
  BiForm numerator{0};
};

// Eigenvalue tag of a module element: a concrete constant, or "any" when
// both edge restrictions vanish identically (lambda unconstrained).
struct MembershipTag {
  std::optional<FieldScalar> lambda;
  bool any() const { return !lambda.has_value(); }
};

// The constant-Lambda identity numerator(p1,t) = Λ·A^n·u^{-c1}v^{-c2}·
// numerator(t,p2): returns the tag when some Λ works, absent otherwise.
std::optional<MembershipTag> membership_check(const BiForm& numerator,
                                              const Session& s);

// Element f̃/f^n · exp(xF1 + yF2) of the module, stored by its numerator.
class BAElement {
 public:
  static BAElement checked(BiForm numerator, const Session& s);
  static BAElement zero(int pole_order);

  int pole_order() const { return num_.bidegree(); }
  const BiForm& numerator() const { return num_; }
  const MembershipTag& tag() const { return tag_; }
  bool is_zero() const { return num_.is_zero(); }

 private:
  BAElement(BiForm num, MembershipTag tag)
      : num_(std::move(num)), tag_(std::move(tag)) {}
  BiForm num_;
  MembershipTag tag_;
};

// d/dx resp. d/dy: raises pole order by one; numerator f·δ(f̃) + f_axis·f̃.
BAElement ba_derive(const BAElement& e, Axis axis, const Session& s);

// Common-denominator embedding M(n) ⊂ M(m): numerator times f^(m-n).
BAElement ba_lift(const BAElement& e, int target_order, const Session& s);

// Multiplication by a function on the surface: pole orders add.
BAElement ba_scale_by_function(const BAElement& e, const FunctionOnGamma& lam,
                               const Session& s);

// Scalar multiplication by a coefficient c(x, y); pole order unchanged.
BAElement ba_scale_by_coeff(const BAElement& e, const CoeffElem& c,
                            const Session& s);

// Sum after lifting to the larger pole order; the tag is recomputed.
BAElement ba_add(const BAElement& a, const BAElement& b, const Session& s);

// Equality as functions: lift to a common order and compare numerators.
bool ba_equal(const BAElement& a, const BAElement& b, const Session& s);

// Rank of the order-n piece: (n+1)^2 minus the rank of the n+1 restriction
// conditions, with the whole factor Λ·A^n·u^{-c1}v^{-c2} treated as one
// auxiliary unknown (generic stratum).
std::size_t rank_M(int n, const Session& s);

struct BasisPair {
  BAElement psi1;
  BAElement psi2;
};

// Two canonical independent pole-order-1 elements of the single-valued
// (Λ = 1) stratum, normalized and ordered by numerator size.
BasisPair default_basis(const Session& s);

// h1(P)/h2(P) as an exact coefficient; unequal values at two witness points
// certify that the basis admits no operator-coefficient relation.
CoeffElem ratio_witness(const BasisPair& basis, const SurfacePoint& p);

}  // namespace opring
