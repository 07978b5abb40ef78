#ifndef ANNULUS_DECOMPOSE_HPP
#define ANNULUS_DECOMPOSE_HPP

#include <string>
#include <vector>

#include "annulus/core.hpp"

namespace annulus {

// Orthogonal decomposition of the ambient space into labeled reducing
// subspaces of one operator.
struct SplitReport {
  struct Part {
    std::string label;
    Subspace space;
    double residual;  // max of ||P_perp T P|| and ||P_perp T* P||
  };
  std::vector<Part> parts;
  double r_used;

  const Part& part(const std::string& label) const;
};

// Unitary / r-times-unitary split of an A_r-unitary. Labels {u, r}.
// H_u = ∩_n Ker(I - T*^n T^n), H_r likewise for rT^{-1}.
SplitReport split_ar_unitary(const ComplexMatrix& T, const AnnulusParams& p);

// Wold split of an A_r-isometry. Labels {u, r, p}.
// H_u = ∩_k Ker(I - V^k V*^k), H_r likewise for rV^{-1},
// H_p = complement of H_u ⊕ H_r.
SplitReport wold_ar_isometry(const ComplexMatrix& V, const AnnulusParams& p);

// Canonical split of an A_r-contraction candidate. Labels {u, r, c}.
// H_u = ∩_k [Ker(I - T*^k T^k) ∩ Ker(I - T^k T*^k)], H_r likewise for
// rT^{-1}, H_c = complement of H_u ⊕ H_r.
SplitReport canonical_ar_contraction(const ComplexMatrix& T,
                                     const AnnulusParams& p);

// Levan split of a c.n.u. A_r-contraction. Labels {iso, cni}.
// H_iso is the largest reducing subspace inside Ker(-T*^2T^2 +
// (1+r^2)T*T - r^2 I); in finite dimensions it is always {0}. The
// operation exists for structural fidelity and truncated-model
// diagnostics.
SplitReport levan_split(const ComplexMatrix& T, const AnnulusParams& p);

}  // namespace annulus

#endif
