#include "annulus/linops.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace annulus {

double op_norm(const ComplexMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(M);
  return svd.singularValues()(0);
}

Subspace nullspace(const ComplexMatrix& M, double tol_rank,
                   double scale_floor) {
  const Eigen::Index n = M.cols();
  if (M.rows() == 0) return Subspace::full(n);
  if (!M.allFinite()) throw InvalidMatrix("nullspace: non-finite entries");
  Eigen::JacobiSVD<ComplexMatrix> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = tol_rank * std::max(sigma_max, scale_floor);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return Subspace{svd.matrixV().rightCols(n - rank)};
}

Subspace kernel(const ComplexMatrix& M, double tol_rank) {
  require_square_finite(M);
  return nullspace(M, tol_rank);
}

Subspace intersect(const Subspace& A, const Subspace& B, double tol_rank) {
  if (A.ambient() != B.ambient())
    throw DimensionMismatch("intersect: ambient dimensions differ");
  const Eigen::Index d = A.ambient();
  if (A.dim() == 0 || B.dim() == 0) return Subspace::zero(d);
  ComplexMatrix stacked(2 * d, d);
  stacked.topRows(d) = ComplexMatrix::Identity(d, d) - A.projector();
  stacked.bottomRows(d) = ComplexMatrix::Identity(d, d) - B.projector();
  return nullspace(stacked, tol_rank, 1.0);
}

Subspace complement(const Subspace& A, double tol_rank) {
  if (A.dim() == 0) return Subspace::full(A.ambient());
  return nullspace(A.basis.adjoint(), tol_rank, 1.0);
}

Subspace span_union(const Subspace& A, const Subspace& B, double tol_rank) {
  if (A.ambient() != B.ambient())
    throw DimensionMismatch("span_union: ambient dimensions differ");
  const Eigen::Index d = A.ambient();
  if (A.dim() + B.dim() == 0) return Subspace::zero(d);
  ComplexMatrix joint(d, A.dim() + B.dim());
  joint.leftCols(A.dim()) = A.basis;
  joint.rightCols(B.dim()) = B.basis;
  Eigen::JacobiSVD<ComplexMatrix> svd(joint, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cutoff = tol_rank * std::max(sv(0), 1.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return Subspace{svd.matrixU().leftCols(rank)};
}

double projection_distance(const Subspace& A, const Subspace& B) {
  if (A.ambient() != B.ambient())
    throw DimensionMismatch("projection_distance: ambient dimensions differ");
  return (A.projector() - B.projector()).norm();
}

double containment_residual(const Subspace& A, const Subspace& B) {
  if (A.ambient() != B.ambient())
    throw DimensionMismatch("containment_residual: ambient dimensions differ");
  if (A.dim() == 0) return 0.0;
  return op_norm(A.basis - B.projector() * A.basis);
}

std::vector<Complex> eigenvalues(const ComplexMatrix& M) {
  require_square_finite(M);
  Eigen::ComplexEigenSolver<ComplexMatrix> es(M, false);
  if (es.info() != Eigen::Success)
    throw NumericalFailure("eigenvalue iteration did not converge");
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

Subspace largest_reducing_within(const std::vector<ComplexMatrix>& ops,
                                 const Subspace& K, double tol_rank) {
  const Eigen::Index d = K.ambient();
  for (const auto& T : ops) {
    require_square_finite(T);
    if (T.rows() != d)
      throw DimensionMismatch("largest_reducing_within: operator/ambient");
  }
  Subspace M = K;
  const Eigen::Index cap = d + 2;
  for (Eigen::Index iter = 0; iter <= cap; ++iter) {
    if (M.dim() == 0) return M;
    const Eigen::Index before = M.dim();
    const ComplexMatrix Pperp = ComplexMatrix::Identity(d, d) - M.projector();
    Subspace next = M;
    for (const auto& T : ops) {
      const double scale = op_norm(T);
      next = intersect(next, nullspace(Pperp * T, tol_rank, scale), tol_rank);
      next = intersect(next, nullspace(Pperp * T.adjoint(), tol_rank, scale),
                       tol_rank);
    }
    M = next;
    if (M.dim() == before) return M;
  }
  throw StallError("reducing-subspace refinement did not stabilize");
}

ComplexMatrix compress(const ComplexMatrix& T, const Subspace& S) {
  if (T.rows() != S.ambient())
    throw DimensionMismatch("compress: operator/ambient");
  return S.basis.adjoint() * T * S.basis;
}

ComplexMatrix orthonormalize(const ComplexMatrix& frame) {
  if (frame.cols() == 0) return frame;
  Eigen::HouseholderQR<ComplexMatrix> qr(frame);
  ComplexMatrix Q = qr.householderQ() *
                    ComplexMatrix::Identity(frame.rows(), frame.cols());
  return Q;
}

}  // namespace annulus
