#pragma once

#include "opring/diffop.hpp"

namespace opring {

// Checks that g/f^m is a well-defined function on the glued surface:
// coefficients free of x, y, and the two edge restrictions matching with
// factor A^m.
FunctionOnGamma validate_function(const BiForm& g, const Session& s);

// Constant function c = c·f^0.
FunctionOnGamma fn_constant(const FieldScalar& c);

// Product of functions; pole orders add.
FunctionOnGamma fn_mul(const FunctionOnGamma& a, const FunctionOnGamma& b,
                       const Session& s);

// Builds the function from a monomial cell list.
FunctionOnGamma make_function(const LambdaSpec& spec, const Session& s);

struct SpectralAssignment {
  FunctionOnGamma lambda;
  MatrixDiffOp d;
  BasisPair basis;
};

// The unique 2x2 operator D with D·(ψ1, ψ2) = λ·(ψ1, ψ2): row i solves
// λ·ψ_i = d_i1 ψ1 + d_i2 ψ2 with ansatz order m = pole_order(λ), by equating
// all numerator cells at pole order m+1.
MatrixDiffOp construct_operator(const FunctionOnGamma& lambda,
                                const BasisPair& basis, const Session& s);

// Exact re-check of the defining relation, independent of the solve.
bool verify_eigen(const SpectralAssignment& a, const Session& s);

bool verify_commute_pair(const MatrixDiffOp& d1, const MatrixDiffOp& d2);

// construct(λ·μ) compared against compose(construct(λ), construct(μ)).
bool verify_homomorphism(const FunctionOnGamma& lambda,
                         const FunctionOnGamma& mu, const BasisPair& basis,
                         const Session& s);

}  // namespace opring
