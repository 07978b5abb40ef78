#ifndef ANNULUS_FAMILY_HPP
#define ANNULUS_FAMILY_HPP

#include <optional>
#include <string>
#include <vector>

#include "annulus/core.hpp"

namespace annulus {

// One label per tuple component, all drawn from a single alphabet
// ({t_u,t_c}, {u,r} or {t_p,t_cni}).
struct TypeAssignment {
  std::vector<std::string> labels;

  bool operator==(const TypeAssignment&) const = default;
};

// Joint orthogonal decomposition of the ambient space for a finite tuple.
struct FamilyReport {
  struct Part {
    TypeAssignment assignment;
    Subspace space;
    std::vector<double> residuals;  // per-component reduction residuals
  };
  struct Remainder {
    Subspace space;
    std::string tag;  // "strongly_cnu"
    // dim of the largest reducing subspace found by each leave-one-out
    // spot-check; all zeros is the expected outcome
    std::vector<Eigen::Index> spot_check_dims;
  };

  std::vector<Part> parts;
  std::optional<Remainder> remainder;
  std::vector<std::string> notes;
  double r_used;

  const Part& part(const TypeAssignment& a) const;
};

inline constexpr int kMaxFamilySize = 16;

// True iff T_i T_j = T_j T_i and T_i T_j* = T_j* T_i for all i != j,
// relative to ||T_i|| ||T_j||.
bool is_doubly_commuting(const std::vector<ComplexMatrix>& ops,
                         double tol_id = 1e-8);

bool is_pairwise_commuting(const std::vector<ComplexMatrix>& ops,
                           double tol_id = 1e-8);

// 2^n-part joint canonical split over {t_u, t_c}, lexicographic order with
// t_u < t_c and component 1 most significant. Pre: candidates, doubly
// commuting.
FamilyReport canonical_family(const std::vector<ComplexMatrix>& ops,
                              const AnnulusParams& p);

// Same refinement driven by the Wold split; labels {t_u, t_c}. In finite
// dimensions every part with a t_c label is {0} (noted in the report).
// Pre: A_r-isometries, doubly commuting.
FamilyReport wold_family(const std::vector<ComplexMatrix>& ops,
                         const AnnulusParams& p);

// 2^n-part split over {u, r} for commuting A_r-unitaries.
FamilyReport unitary_family(const std::vector<ComplexMatrix>& ops,
                            const AnnulusParams& p);

// 2^n-part split over {t_p, t_cni} for doubly commuting c.n.u.
// A_r-contractions. Finite dimension forces every t_p part to {0}.
FamilyReport levan_family(const std::vector<ComplexMatrix>& ops,
                          const AnnulusParams& p);

// Burdak-style (n+2)-part split for a merely commuting tuple: the maximal
// all-t_u part, the n parts with exactly one t_c, and the strongly c.n.u.
// remainder H(s). Double commutativity is NOT required.
FamilyReport burdak_family(const std::vector<ComplexMatrix>& ops,
                           const AnnulusParams& p);

}  // namespace annulus

#endif
