#include "annulus/decompose.hpp"

#include <Eigen/LU>

#include "annulus/classify.hpp"
#include "annulus/linops.hpp"

namespace annulus {

namespace {

enum class ChainKind {
  iso_in,   // Ker(I - T*^k T^k)
  iso_out,  // Ker(I - T^k T*^k)
  both,     // intersection of the two
};

// Running intersection ∩_k of the defect kernels, truncated at the first k
// where the dimension repeats (dimensions are monotone non-increasing).
Subspace defect_kernel_chain(const ComplexMatrix& T, ChainKind kind,
                             const AnnulusParams& p) {
  const Eigen::Index d = T.rows();
  const ComplexMatrix I = ComplexMatrix::Identity(d, d);
  Subspace M = Subspace::full(d);
  ComplexMatrix Tk = T;  // T^k, k starting at 1; the k = 0 term is trivial
  Eigen::Index prev_dim = d + 1;
  for (Eigen::Index k = 1; k <= d + 1; ++k) {
    Subspace K = Subspace::full(d);
    if (kind != ChainKind::iso_out)
      K = intersect(K, nullspace(I - Tk.adjoint() * Tk, p.tol_rank, 1.0),
                    p.tol_rank);
    if (kind != ChainKind::iso_in)
      K = intersect(K, nullspace(I - Tk * Tk.adjoint(), p.tol_rank, 1.0),
                    p.tol_rank);
    M = intersect(M, K, p.tol_rank);
    if (M.dim() == prev_dim || M.dim() == 0) break;
    prev_dim = M.dim();
    if (Tk.norm() < 1e-300) break;  // powers underflow; chain is settled
    Tk = Tk * T;
  }
  return M;
}

ComplexMatrix scaled_inverse(const ComplexMatrix& T, double r) {
  Eigen::PartialPivLU<ComplexMatrix> lu(T);
  return r * lu.inverse();
}

double reduction_residual(const ComplexMatrix& T, const Subspace& M) {
  if (M.dim() == 0 || M.dim() == M.ambient()) return 0.0;
  const ComplexMatrix P = M.projector();
  const ComplexMatrix Pperp =
      ComplexMatrix::Identity(M.ambient(), M.ambient()) - P;
  return std::max(op_norm(Pperp * T * P), op_norm(Pperp * T.adjoint() * P));
}

SplitReport::Part make_part(const std::string& label, Subspace S,
                            const ComplexMatrix& T) {
  const double res = reduction_residual(T, S);
  return SplitReport::Part{label, std::move(S), res};
}

}  // namespace

const SplitReport::Part& SplitReport::part(const std::string& label) const {
  for (const auto& p : parts)
    if (p.label == label) return p;
  throw InvalidMatrix("split report has no part labeled '" + label + "'");
}

SplitReport split_ar_unitary(const ComplexMatrix& T, const AnnulusParams& p) {
  if (!is_ar_unitary(T, p))
    throw NotArUnitary("split_ar_unitary: input is not an A_r-unitary");
  const ComplexMatrix Tinv = scaled_inverse(T, p.r);
  Subspace Hu = defect_kernel_chain(T, ChainKind::iso_in, p);
  Subspace Hr = defect_kernel_chain(Tinv, ChainKind::iso_in, p);
  SplitReport rep{{}, p.r};
  rep.parts.push_back(make_part("u", std::move(Hu), T));
  rep.parts.push_back(make_part("r", std::move(Hr), T));
  return rep;
}

SplitReport wold_ar_isometry(const ComplexMatrix& V, const AnnulusParams& p) {
  if (!is_ar_isometry(V, p))
    throw NotArIsometry("wold_ar_isometry: input is not an A_r-isometry");
  const ComplexMatrix Vinv = scaled_inverse(V, p.r);
  Subspace Hu = defect_kernel_chain(V, ChainKind::iso_out, p);
  Subspace Hr = defect_kernel_chain(Vinv, ChainKind::iso_out, p);
  Subspace Hp = complement(span_union(Hu, Hr, p.tol_rank), p.tol_rank);
  SplitReport rep{{}, p.r};
  rep.parts.push_back(make_part("u", std::move(Hu), V));
  rep.parts.push_back(make_part("r", std::move(Hr), V));
  rep.parts.push_back(make_part("p", std::move(Hp), V));
  return rep;
}

SplitReport canonical_ar_contraction(const ComplexMatrix& T,
                                     const AnnulusParams& p) {
  if (!is_ar_contraction_candidate(T, p))
    throw NotACandidate(
        "canonical_ar_contraction: input fails the candidate predicate");
  const ComplexMatrix Tinv = scaled_inverse(T, p.r);
  Subspace Hu = defect_kernel_chain(T, ChainKind::both, p);
  Subspace Hr = defect_kernel_chain(Tinv, ChainKind::both, p);
  Subspace Hc = complement(span_union(Hu, Hr, p.tol_rank), p.tol_rank);
  SplitReport rep{{}, p.r};
  rep.parts.push_back(make_part("u", std::move(Hu), T));
  rep.parts.push_back(make_part("r", std::move(Hr), T));
  rep.parts.push_back(make_part("c", std::move(Hc), T));
  return rep;
}

SplitReport levan_split(const ComplexMatrix& T, const AnnulusParams& p) {
  if (classify_atom(T, p) != AtomLabel::t_c)
    throw NotCnu("levan_split: input is not a c.n.u. A_r-contraction");
  const Eigen::Index d = T.rows();
  const ComplexMatrix I = ComplexMatrix::Identity(d, d);
  const ComplexMatrix T2 = T * T;
  const ComplexMatrix Q = -T2.adjoint() * T2 +
                          (1.0 + p.r * p.r) * T.adjoint() * T -
                          p.r * p.r * I;
  const Subspace K = nullspace(Q, p.tol_rank, 1.0);
  Subspace Hiso = largest_reducing_within({T}, K, p.tol_rank);
  Subspace Hcni = complement(Hiso, p.tol_rank);
  SplitReport rep{{}, p.r};
  rep.parts.push_back(make_part("iso", std::move(Hiso), T));
  rep.parts.push_back(make_part("cni", std::move(Hcni), T));
  return rep;
}

}  // namespace annulus
