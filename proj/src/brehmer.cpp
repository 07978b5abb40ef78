#include "annulus/brehmer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

#include "annulus/classify.hpp"
#include "annulus/family.hpp"
#include "annulus/linops.hpp"

namespace annulus {

namespace {

constexpr long kMaxExponent = 30;  // exact integer binomials up to here

void validate_commuting_tuple(const std::vector<ComplexMatrix>& ops) {
  if (ops.empty()) throw DimensionMismatch("brehmer: empty tuple");
  const Eigen::Index d = ops.front().rows();
  for (const auto& T : ops) {
    require_square_finite(T);
    if (T.rows() != d)
      throw DimensionMismatch("brehmer: component dimensions differ");
  }
}

// C(k, p) in exact integer arithmetic.
double binomial(long k, long p) {
  unsigned long long acc = 1;
  for (long i = 1; i <= p; ++i) acc = acc * (k - p + i) / i;
  return static_cast<double>(acc);
}

}  // namespace

void SubsetMask::validate() const {
  if (n < 1) throw DimensionMismatch("subset mask: n must be >= 1");
  if (members.empty())
    throw DimensionMismatch("subset mask: members must be nonempty");
  for (int m : members)
    if (m < 1 || m > n)
      throw DimensionMismatch("subset mask: member outside {1..n}");
}

void MultiIndex::validate() const {
  if (k.empty()) throw BadMultiIndex("multi-index is empty");
  for (long ki : k) {
    if (ki < 1) throw BadMultiIndex("multi-index entries must be >= 1");
    if (ki > kMaxExponent)
      throw BadMultiIndex("multi-index entry exceeds exact-binomial cap " +
                          std::to_string(kMaxExponent));
  }
}

ComplexMatrix szego_operator(const std::vector<ComplexMatrix>& ops,
                             const SubsetMask& u) {
  validate_commuting_tuple(ops);
  u.validate();
  if (u.n != static_cast<int>(ops.size()))
    throw DimensionMismatch("szego_operator: mask size vs tuple size");
  const Eigen::Index d = ops.front().rows();
  ComplexMatrix S = ComplexMatrix::Zero(d, d);
  const std::size_t m = u.members.size();
  for (std::size_t mask = 0; mask < (1u << m); ++mask) {
    ComplexMatrix prod = ComplexMatrix::Identity(d, d);
    int card = 0;
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (1u << b)) {
        prod = prod * ops[u.members[b] - 1];
        ++card;
      }
    S += (card % 2 == 0 ? 1.0 : -1.0) * prod.adjoint() * prod;
  }
  return S;
}

ComplexMatrix delta_mk(const std::vector<ComplexMatrix>& ops,
                       const SubsetMask& subset, const MultiIndex& k) {
  validate_commuting_tuple(ops);
  subset.validate();
  k.validate();
  const std::size_t m = subset.members.size();
  if (m != k.k.size())
    throw BadMultiIndex("delta_mk: |subset| must equal length of k");
  const Eigen::Index d = ops.front().rows();

  // Enumerate exponent vectors p, accumulating in order of increasing
  // total degree to limit cancellation in the alternating sum.
  std::vector<std::vector<long>> exponents;
  std::vector<long> p(m, 0);
  while (true) {
    exponents.push_back(p);
    std::size_t i = 0;
    while (i < m && p[i] == k.k[i]) p[i++] = 0;
    if (i == m) break;
    ++p[i];
  }
  std::stable_sort(exponents.begin(), exponents.end(),
                   [](const auto& a, const auto& b) {
                     return std::accumulate(a.begin(), a.end(), 0L) <
                            std::accumulate(b.begin(), b.end(), 0L);
                   });

  ComplexMatrix D = ComplexMatrix::Zero(d, d);
  for (const auto& pv : exponents) {
    double coeff = 1.0;
    long total = 0;
    ComplexMatrix prod = ComplexMatrix::Identity(d, d);
    for (std::size_t i = 0; i < m; ++i) {
      coeff *= binomial(k.k[i], pv[i]);
      total += pv[i];
      const ComplexMatrix& V = ops[subset.members[i] - 1];
      for (long e = 0; e < pv[i]; ++e) prod = prod * V;
    }
    if (total % 2 == 1) coeff = -coeff;
    D += coeff * prod.adjoint() * prod;
  }
  return D;
}

BrehmerReport check_brehmer(const std::vector<ComplexMatrix>& ops,
                            const AnnulusParams& p) {
  p.validate();
  validate_commuting_tuple(ops);
  const int n = static_cast<int>(ops.size());
  if (n > kMaxFamilySize)
    throw ExplicitCapError("check_brehmer: tuple size exceeds cap");

  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) members.push_back(b + 1);
    subsets.push_back(std::move(members));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });

  BrehmerReport rep;
  rep.pass = true;
  for (auto& members : subsets) {
    const ComplexMatrix S = szego_operator(ops, SubsetMask{n, members});
    // each summand is Gram-type, so S must already be Hermitian
    if (op_norm(S - S.adjoint()) >
        1e-12 * std::max(1.0, op_norm(S)))
      throw NumericalFailure("S(u) lost Hermitian symmetry");
    const ComplexMatrix H = 0.5 * (S + S.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(H, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw NumericalFailure("Hermitian eigensolver failed on S(u)");
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -p.tol_id) rep.pass = false;
    rep.entries.push_back({std::move(members), min_eig});
  }
  return rep;
}

double check_bp_identity(const std::vector<ComplexMatrix>& ops,
                         const SubsetMask& subset, const MultiIndex& k,
                         const AnnulusParams& p) {
  p.validate();
  validate_commuting_tuple(ops);
  for (const auto& V : ops)
    if (!is_ar_isometry(V, p))
      throw NotArIsometry("check_bp_identity: component is not an "
                          "A_r-isometry");
  subset.validate();
  k.validate();
  const long m = static_cast<long>(subset.members.size());
  const long ksum = std::accumulate(k.k.begin(), k.k.end(), 0L);
  const ComplexMatrix D = delta_mk(ops, subset, k);
  const ComplexMatrix S = szego_operator(ops, subset);
  const double factor = std::pow(1.0 - p.r * p.r, static_cast<double>(ksum - m));
  return op_norm(D - factor * S);
}

}  // namespace annulus
