// Shared construction helpers for the test suites: fixed small matrices,
// seeded random instances, and planted block sums with known answers.
#ifndef ANNULUS_TESTS_SUPPORT_HPP
#define ANNULUS_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "annulus/core.hpp"
#include "annulus/models.hpp"

namespace testsupport {

using annulus::Complex;
using annulus::ComplexMatrix;

inline ComplexMatrix diagm(const std::vector<Complex>& entries) {
  const Eigen::Index d = static_cast<Eigen::Index>(entries.size());
  ComplexMatrix M = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) M(i, i) = entries[i];
  return M;
}

inline ComplexMatrix jordan2(Complex lambda, double eps) {
  ComplexMatrix J(2, 2);
  J << lambda, eps, 0.0, lambda;
  return J;
}

inline ComplexMatrix cyclic_shift(int k) {
  ComplexMatrix C = ComplexMatrix::Zero(k, k);
  for (int i = 0; i < k; ++i) C((i + 1) % k, i) = 1.0;
  return C;
}

inline ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B) {
  ComplexMatrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

inline ComplexMatrix block_diag(const std::vector<ComplexMatrix>& blocks) {
  Eigen::Index d = 0;
  for (const auto& B : blocks) d += B.rows();
  ComplexMatrix M = ComplexMatrix::Zero(d, d);
  Eigen::Index off = 0;
  for (const auto& B : blocks) {
    M.block(off, off, B.rows(), B.rows()) = B;
    off += B.rows();
  }
  return M;
}

// Random A_r-unitary: dim_u unimodular and dim_r modulus-r eigenvalues with
// seeded phases, optionally hidden behind a Haar conjugation.
inline ComplexMatrix random_ar_unitary(Eigen::Index dim_u, Eigen::Index dim_r,
                                       double r, std::uint64_t seed,
                                       bool conjugate = true) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::vector<Complex> unit, rmod;
  for (Eigen::Index i = 0; i < dim_u; ++i)
    unit.push_back(std::polar(1.0, angle(rng)));
  for (Eigen::Index i = 0; i < dim_r; ++i)
    rmod.push_back(std::polar(r, angle(rng)));
  ComplexMatrix T = annulus::gen_ar_unitary(unit, rmod, annulus::AnnulusParams{r});
  if (conjugate) {
    const ComplexMatrix Q = annulus::haar_unitary(T.rows(), seed + 1);
    T = Q * T * Q.adjoint();
  }
  return T;
}

// Tuple of n A_r-unitaries that are simultaneously diagonal in one random
// basis: each entry modulus is independently 1 or r. Doubly commuting.
inline std::vector<ComplexMatrix> random_du_tuple(std::size_t n,
                                                  Eigen::Index dim, double r,
                                                  std::uint64_t seed,
                                                  bool conjugate = true) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::bernoulli_distribution coin(0.5);
  const ComplexMatrix Q = annulus::haar_unitary(dim, seed + 7);
  std::vector<ComplexMatrix> ops;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Complex> entries;
    for (Eigen::Index i = 0; i < dim; ++i)
      entries.push_back(std::polar(coin(rng) ? 1.0 : r, angle(rng)));
    ComplexMatrix D = diagm(entries);
    ops.push_back(conjugate ? ComplexMatrix(Q * D * Q.adjoint()) : D);
  }
  return ops;
}

// Random c.n.u. candidate: Jordan-type upper triangular blocks with
// eigenvalues strictly inside the annulus, hidden behind a conjugation.
inline ComplexMatrix random_cnu_candidate(Eigen::Index n_blocks, double r,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> modulus(r + 0.35 * (1.0 - r),
                                                 1.0 - 0.25 * (1.0 - r));
  std::vector<ComplexMatrix> blocks;
  for (Eigen::Index b = 0; b < n_blocks; ++b)
    blocks.push_back(
        jordan2(std::polar(modulus(rng), angle(rng)), 0.05 * (1.0 - r)));
  ComplexMatrix T = block_diag(blocks);
  const ComplexMatrix Q = annulus::haar_unitary(T.rows(), seed + 3);
  return Q * T * Q.adjoint();
}

// Weighted cyclic shift: A e_i = w_i e_{i+1 mod d}. With non-constant
// weights in (sqrt(r), 1) the pair (A, A^2) commutes but does not doubly
// commute, and both pass the candidate predicate.
inline ComplexMatrix weighted_cyclic(const std::vector<double>& weights) {
  const int d = static_cast<int>(weights.size());
  ComplexMatrix A = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) A((i + 1) % d, i) = weights[i];
  return A;
}

}  // namespace testsupport

#endif
