#ifndef ANNULUS_MODELS_HPP
#define ANNULUS_MODELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "annulus/core.hpp"
#include "annulus/family.hpp"

namespace annulus {

// Truncation window of the weighted-shift model on the annulus Hardy space.
struct HardyModelSpec {
  double alpha;  // in [0,1)
  double r;      // in (0,1)
  long n_min;
  long n_max;

  void validate(long min_len = 3) const;
  long window_len() const { return n_max - n_min + 1; }
};

struct HardyShift {
  ComplexMatrix matrix;          // shift in the orthonormalized basis
  std::vector<double> weights;   // c_n = 1 + r^{2(alpha+n)}, n = n_min..n_max
};

struct SarasonPair {
  ComplexMatrix v1;  // truncated S_alpha
  ComplexMatrix v2;  // its square
  std::vector<double> weights;
  double r_squared;  // the pair lives over the annulus of modulus r^2
};

// Per-component blocks with their expected atom labels; all components of
// one block share a dimension.
struct PlantedSpec {
  struct Block {
    std::vector<ComplexMatrix> component_ops;
    std::vector<std::string> labels;
  };
  std::vector<Block> blocks;
  std::uint64_t seed = 0;
};

struct PlantedInstance {
  std::vector<ComplexMatrix> ops;
  // expected part layout: one entry per distinct assignment that occurs
  std::vector<std::pair<TypeAssignment, Subspace>> expected;
  ComplexMatrix conjugator;
};

// Diagonal A_r-unitary from prescribed boundary eigenvalues.
ComplexMatrix gen_ar_unitary(const std::vector<Complex>& eigs_unit,
                             const std::vector<Complex>& eigs_r,
                             const AnnulusParams& p);

// C_N ⊕ r C_M where C_k is the cyclic shift; exactly normal.
ComplexMatrix gen_cyclic_annulus_unitary(int N, int M, const AnnulusParams& p);

// Matrix of the weighted shift V e_n = a_n e_{n+1}, a_n = sqrt(c_{n+1}/c_n),
// truncated with V e_{n_max} = 0. Not invertible; intended for
// interior-identity diagnostics, not decompositions.
HardyShift gen_hardy_shift(const HardyModelSpec& spec);

// (S_alpha, S_alpha^2) on the truncation window; the pair commutes exactly
// but does not doubly commute.
SarasonPair gen_sarason_pair(const HardyModelSpec& spec);

// Direct-sums the blocks per component and conjugates everything by one
// Haar-random unitary drawn from the seed.
PlantedInstance gen_planted(const PlantedSpec& spec);

// Haar-distributed unitary (QR of a Ginibre sample, phases fixed).
ComplexMatrix haar_unitary(Eigen::Index dim, std::uint64_t seed);

}  // namespace annulus

#endif
