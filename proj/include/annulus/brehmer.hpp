#ifndef ANNULUS_BREHMER_HPP
#define ANNULUS_BREHMER_HPP

#include <vector>

#include "annulus/core.hpp"

namespace annulus {

// Subset of tuple components, 1-based members of {1..n}.
struct SubsetMask {
  int n;
  std::vector<int> members;

  void validate() const;
};

// Positive integer exponents (k_1..k_m), one per selected component.
struct MultiIndex {
  std::vector<long> k;

  void validate() const;
};

// S(u) = sum over v ⊆ u of (-1)^{|v|} (T^{e(v)})* T^{e(v)}; the empty
// subset contributes +I.
ComplexMatrix szego_operator(const std::vector<ComplexMatrix>& ops,
                             const SubsetMask& u);

// Alternating binomial sum over 0 <= p_i <= k_i of
// prod C(k_i, p_i) (-1)^{sum p} (prod V^p)* (prod V^p).
ComplexMatrix delta_mk(const std::vector<ComplexMatrix>& ops,
                       const SubsetMask& subset, const MultiIndex& k);

struct BrehmerReport {
  struct Entry {
    std::vector<int> members;  // subset u, 1-based
    double min_eigenvalue;     // of the Hermitian part of S(u)
  };
  std::vector<Entry> entries;  // increasing cardinality, then lexicographic
  bool pass;                   // all minima >= -tol_id
};

// Minimum eigenvalue of the Hermitian part of S(u) for every nonempty u.
BrehmerReport check_brehmer(const std::vector<ComplexMatrix>& ops,
                            const AnnulusParams& p);

// || Delta_m^k - (1-r^2)^{sum k - m} S(u) ||. Contract: <= tol_id when
// every component is an A_r-isometry.
double check_bp_identity(const std::vector<ComplexMatrix>& ops,
                         const SubsetMask& subset, const MultiIndex& k,
                         const AnnulusParams& p);

}  // namespace annulus

#endif
