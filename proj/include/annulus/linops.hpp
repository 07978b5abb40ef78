#ifndef ANNULUS_LINOPS_HPP
#define ANNULUS_LINOPS_HPP

#include <vector>

#include "annulus/core.hpp"

namespace annulus {

// Largest singular value.
double op_norm(const ComplexMatrix& M);

// Orthonormal basis of the numerical null space of a square matrix:
// right singular vectors whose singular values satisfy
// sigma_i <= tol_rank * sigma_max. sigma_max = 0 yields the full space.
Subspace kernel(const ComplexMatrix& M, double tol_rank = 1e-9);

// Null space of a possibly rectangular matrix. The cutoff is
// tol_rank * max(sigma_max, scale_floor); the floor keeps kernels of
// near-zero matrices (defect operators of unitaries) at full dimension
// instead of collapsing under the purely relative rule.
Subspace nullspace(const ComplexMatrix& M, double tol_rank,
                   double scale_floor = 0.0);

// Orthonormal basis of A ∩ B via the stacked complement projections.
Subspace intersect(const Subspace& A, const Subspace& B,
                   double tol_rank = 1e-9);

// Orthogonal complement; dim = ambient - k exactly.
Subspace complement(const Subspace& A, double tol_rank = 1e-9);

// Orthonormal basis of A + B.
Subspace span_union(const Subspace& A, const Subspace& B,
                    double tol_rank = 1e-9);

// ||P_A - P_B||_F. Subspace equality is always tested this way, never by
// comparing bases.
double projection_distance(const Subspace& A, const Subspace& B);

// ||(I - P_B) A|| : how far A sticks out of B.
double containment_residual(const Subspace& A, const Subspace& B);

// All eigenvalues with multiplicity, any order.
std::vector<Complex> eigenvalues(const ComplexMatrix& M);

// Largest subspace M ⊆ K with T·M ⊆ M and T*·M ⊆ M for every T in ops.
// Refines K_{j+1} = K_j ∩ T^{-1}(K_j) ∩ (T*)^{-1}(K_j); preimages are
// realized as kernels of P_{K⊥}·T, so singular T is fine.
Subspace largest_reducing_within(const std::vector<ComplexMatrix>& ops,
                                 const Subspace& K, double tol_rank = 1e-9);

// B* T B for an orthonormal frame B (the matrix of T restricted to span B,
// meaningful when span B reduces T).
ComplexMatrix compress(const ComplexMatrix& T, const Subspace& S);

// Re-orthonormalized copy of an arbitrary frame (thin QR).
ComplexMatrix orthonormalize(const ComplexMatrix& frame);

}  // namespace annulus

#endif
