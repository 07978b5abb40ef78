#ifndef ANNULUS_CLASSIFY_HPP
#define ANNULUS_CLASSIFY_HPP

#include <string>

#include "annulus/core.hpp"

namespace annulus {

enum class AtomLabel { t_u, t_c, non_atom };
enum class UnitaryTypeLabel { u, r };
enum class CnuLabel { t_p, t_cni, non_fundamental };

std::string to_string(AtomLabel a);
std::string to_string(UnitaryTypeLabel t);
std::string to_string(CnuLabel c);

// sigma_max(T) <= 1 + tol_id.
bool is_contraction(const ComplexMatrix& T, double tol_id = 1e-8);

// ||T*T - TT*|| <= tol_id * ||T||^2.
bool is_normal(const ComplexMatrix& T, double tol_id = 1e-8);

// Normal and (I - T*T)(T*T - r^2 I) = 0 up to tol_id.
bool is_ar_unitary(const ComplexMatrix& T, const AnnulusParams& p);

// -V*^2 V^2 + (1+r^2) V*V - r^2 I = 0 up to tol_id. Requires V invertible
// to tolerance (sigma_min > tol_rank * sigma_max), else SingularOperator.
bool is_ar_isometry(const ComplexMatrix& V, const AnnulusParams& p);

// Necessary conditions for T to be an A_r-contraction: every eigenvalue
// modulus in [r - tol_spec, 1 + tol_spec], sigma_max <= 1 + tol_id and
// sigma_min >= r - tol_id. Sufficiency (the full spectral-set property)
// is not certified, hence "candidate".
bool is_ar_contraction_candidate(const ComplexMatrix& T,
                                 const AnnulusParams& p);

// t_u if A_r-unitary; t_c if the canonical split leaves no A_r-unitary
// part; non_atom otherwise. Pre: is_ar_contraction_candidate.
AtomLabel classify_atom(const ComplexMatrix& T, const AnnulusParams& p);

// u if U*U = I, r if U*U = r^2 I, both up to tol_id; throws MixedType when
// U carries parts of both kinds (split first). Pre: is_ar_unitary.
UnitaryTypeLabel classify_unitary_type(const ComplexMatrix& U,
                                       const AnnulusParams& p);

}  // namespace annulus

#endif
