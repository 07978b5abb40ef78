#include "annulus/models.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "annulus/linops.hpp"

namespace annulus {

void HardyModelSpec::validate(long min_len) const {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw InvalidMatrix("hardy model: alpha must lie in [0,1)");
  if (!(r > 0.0 && r < 1.0))
    throw InvalidMatrix("hardy model: r must lie in (0,1)");
  if (n_min >= n_max || window_len() < min_len)
    throw WindowTooSmall("hardy model: window [" + std::to_string(n_min) +
                         ", " + std::to_string(n_max) + "] too small");
}

ComplexMatrix gen_ar_unitary(const std::vector<Complex>& eigs_unit,
                             const std::vector<Complex>& eigs_r,
                             const AnnulusParams& p) {
  p.validate();
  for (const Complex& z : eigs_unit)
    if (std::abs(std::abs(z) - 1.0) > p.tol_spec)
      throw EigenvalueOffBoundary("unit-circle eigenvalue has modulus " +
                                  std::to_string(std::abs(z)));
  for (const Complex& z : eigs_r)
    if (std::abs(std::abs(z) - p.r) > p.tol_spec)
      throw EigenvalueOffBoundary("r-circle eigenvalue has modulus " +
                                  std::to_string(std::abs(z)));
  const Eigen::Index d =
      static_cast<Eigen::Index>(eigs_unit.size() + eigs_r.size());
  if (d == 0) throw InvalidMatrix("gen_ar_unitary: no eigenvalues given");
  ComplexMatrix T = ComplexMatrix::Zero(d, d);
  Eigen::Index i = 0;
  for (const Complex& z : eigs_unit) T(i, i) = z, ++i;
  for (const Complex& z : eigs_r) T(i, i) = z, ++i;
  return T;
}

namespace {

ComplexMatrix cyclic_shift(int k) {
  ComplexMatrix C = ComplexMatrix::Zero(k, k);
  for (int i = 0; i < k; ++i) C((i + 1) % k, i) = 1.0;
  return C;
}

}  // namespace

ComplexMatrix gen_cyclic_annulus_unitary(int N, int M,
                                         const AnnulusParams& p) {
  p.validate();
  if (N < 1 || M < 1)
    throw InvalidMatrix("gen_cyclic_annulus_unitary: N, M must be >= 1");
  ComplexMatrix T = ComplexMatrix::Zero(N + M, N + M);
  T.topLeftCorner(N, N) = cyclic_shift(N);
  T.bottomRightCorner(M, M) = p.r * cyclic_shift(M);
  return T;
}

HardyShift gen_hardy_shift(const HardyModelSpec& spec) {
  spec.validate(3);
  const long len = spec.window_len();
  HardyShift out;
  out.weights.reserve(len);
  for (long n = spec.n_min; n <= spec.n_max; ++n)
    out.weights.push_back(
        1.0 + std::pow(spec.r, 2.0 * (spec.alpha + static_cast<double>(n))));
  out.matrix = ComplexMatrix::Zero(len, len);
  for (long i = 0; i + 1 < len; ++i)
    out.matrix(i + 1, i) = std::sqrt(out.weights[i + 1] / out.weights[i]);
  return out;
}

SarasonPair gen_sarason_pair(const HardyModelSpec& spec) {
  spec.validate(5);
  HardyShift shift = gen_hardy_shift(spec);
  SarasonPair out;
  out.v1 = shift.matrix;
  out.v2 = shift.matrix * shift.matrix;
  out.weights = std::move(shift.weights);
  out.r_squared = spec.r * spec.r;
  return out;
}

ComplexMatrix haar_unitary(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix Z(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      Z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(Z);
  ComplexMatrix Q =
      qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex rjj = R(j, j);
    if (std::abs(rjj) > 0.0) Q.col(j) *= rjj / std::abs(rjj);
  }
  return Q;
}

PlantedInstance gen_planted(const PlantedSpec& spec) {
  if (spec.blocks.empty())
    throw InconsistentBlocks("gen_planted: no blocks given");
  const std::size_t n_comp = spec.blocks.front().component_ops.size();
  if (n_comp == 0)
    throw InconsistentBlocks("gen_planted: block has no components");
  Eigen::Index total = 0;
  for (const auto& blk : spec.blocks) {
    if (blk.component_ops.size() != n_comp ||
        blk.labels.size() != n_comp)
      throw InconsistentBlocks("gen_planted: inconsistent component count");
    const Eigen::Index bd = blk.component_ops.front().rows();
    for (const auto& M : blk.component_ops) {
      require_square_finite(M);
      if (M.rows() != bd)
        throw InconsistentBlocks("gen_planted: block dims differ across "
                                 "components");
    }
    total += bd;
  }

  const ComplexMatrix Q = haar_unitary(total, spec.seed);
  PlantedInstance out;
  out.conjugator = Q;
  out.ops.assign(n_comp, ComplexMatrix::Zero(total, total));
  std::map<std::vector<std::string>, std::vector<Eigen::Index>> coords;
  Eigen::Index offset = 0;
  for (const auto& blk : spec.blocks) {
    const Eigen::Index bd = blk.component_ops.front().rows();
    for (std::size_t c = 0; c < n_comp; ++c)
      out.ops[c].block(offset, offset, bd, bd) = blk.component_ops[c];
    auto& idx = coords[blk.labels];
    for (Eigen::Index i = 0; i < bd; ++i) idx.push_back(offset + i);
    offset += bd;
  }
  for (auto& T : out.ops) T = Q * T * Q.adjoint();

  for (const auto& [labels, idx] : coords) {
    ComplexMatrix basis(total, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) basis.col(j) = Q.col(idx[j]);
    out.expected.emplace_back(TypeAssignment{labels}, Subspace{basis});
  }
  return out;
}

}  // namespace annulus
