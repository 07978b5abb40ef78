#include "annulus/classify.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include "annulus/decompose.hpp"
#include "annulus/linops.hpp"

namespace annulus {

std::string to_string(AtomLabel a) {
  switch (a) {
    case AtomLabel::t_u: return "t_u";
    case AtomLabel::t_c: return "t_c";
    default: return "non_atom";
  }
}

std::string to_string(UnitaryTypeLabel t) {
  return t == UnitaryTypeLabel::u ? "u" : "r";
}

std::string to_string(CnuLabel c) {
  switch (c) {
    case CnuLabel::t_p: return "t_p";
    case CnuLabel::t_cni: return "t_cni";
    default: return "non_fundamental";
  }
}

bool is_contraction(const ComplexMatrix& T, double tol_id) {
  require_square_finite(T);
  return op_norm(T) <= 1.0 + tol_id;
}

bool is_normal(const ComplexMatrix& T, double tol_id) {
  require_square_finite(T);
  const double scale = op_norm(T);
  const ComplexMatrix comm = T.adjoint() * T - T * T.adjoint();
  return op_norm(comm) <= tol_id * scale * scale;
}

bool is_ar_unitary(const ComplexMatrix& T, const AnnulusParams& p) {
  p.validate();
  if (!is_normal(T, p.tol_id)) return false;
  const Eigen::Index d = T.rows();
  const ComplexMatrix I = ComplexMatrix::Identity(d, d);
  const ComplexMatrix G = T.adjoint() * T;
  return op_norm((I - G) * (G - p.r * p.r * I)) <= p.tol_id;
}

bool is_ar_isometry(const ComplexMatrix& V, const AnnulusParams& p) {
  p.validate();
  require_square_finite(V);
  Eigen::JacobiSVD<ComplexMatrix> svd(V);
  const auto& sv = svd.singularValues();
  if (!(sv(sv.size() - 1) > p.tol_rank * sv(0)))
    throw SingularOperator("is_ar_isometry requires an invertible operator");
  const Eigen::Index d = V.rows();
  const ComplexMatrix I = ComplexMatrix::Identity(d, d);
  const ComplexMatrix V2 = V * V;
  const ComplexMatrix R = -V2.adjoint() * V2 +
                          (1.0 + p.r * p.r) * V.adjoint() * V -
                          p.r * p.r * I;
  return op_norm(R) <= p.tol_id;
}

bool is_ar_contraction_candidate(const ComplexMatrix& T,
                                 const AnnulusParams& p) {
  p.validate();
  require_square_finite(T);
  for (const Complex& lam : eigenvalues(T)) {
    const double m = std::abs(lam);
    if (m < p.r - p.tol_spec || m > 1.0 + p.tol_spec) return false;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(T);
  const auto& sv = svd.singularValues();
  if (sv(0) > 1.0 + p.tol_id) return false;
  if (sv(sv.size() - 1) < p.r - p.tol_id) return false;
  return true;
}

AtomLabel classify_atom(const ComplexMatrix& T, const AnnulusParams& p) {
  if (!is_ar_contraction_candidate(T, p))
    throw NotACandidate("classify_atom: input fails the candidate predicate");
  if (is_ar_unitary(T, p)) return AtomLabel::t_u;
  const SplitReport split = canonical_ar_contraction(T, p);
  const Eigen::Index dim_a =
      split.part("u").space.dim() + split.part("r").space.dim();
  return dim_a == 0 ? AtomLabel::t_c : AtomLabel::non_atom;
}

UnitaryTypeLabel classify_unitary_type(const ComplexMatrix& U,
                                       const AnnulusParams& p) {
  if (!is_ar_unitary(U, p))
    throw NotArUnitary("classify_unitary_type: input is not an A_r-unitary");
  const Eigen::Index d = U.rows();
  const ComplexMatrix I = ComplexMatrix::Identity(d, d);
  const ComplexMatrix G = U.adjoint() * U;
  if (op_norm(G - I) <= p.tol_id) return UnitaryTypeLabel::u;
  if (op_norm(G - p.r * p.r * I) <= p.tol_id) return UnitaryTypeLabel::r;
  throw MixedType("operator has both unitary and r-times-unitary parts; "
                  "split it first");
}

}  // namespace annulus
