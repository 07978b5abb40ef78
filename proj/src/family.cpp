#include "annulus/family.hpp"

#include <array>
#include <functional>

#include "annulus/classify.hpp"
#include "annulus/decompose.hpp"
#include "annulus/linops.hpp"

namespace annulus {

namespace {

void validate_tuple(const std::vector<ComplexMatrix>& ops) {
  if (ops.empty()) throw InvalidMatrix("family: empty tuple");
  if (static_cast<int>(ops.size()) > kMaxFamilySize)
    throw ExplicitCapError("family: tuple size exceeds cap of " +
                           std::to_string(kMaxFamilySize));
  const Eigen::Index d = ops.front().rows();
  for (const auto& T : ops) {
    require_square_finite(T);
    if (T.rows() != d)
      throw DimensionMismatch("family: component dimensions differ");
  }
}

double reduction_residual(const ComplexMatrix& T, const Subspace& M) {
  if (M.dim() == 0 || M.dim() == M.ambient()) return 0.0;
  const ComplexMatrix P = M.projector();
  const ComplexMatrix Pperp =
      ComplexMatrix::Identity(M.ambient(), M.ambient()) - P;
  return std::max(op_norm(Pperp * T * P), op_norm(Pperp * T.adjoint() * P));
}

// Splits one compressed operator into the (first-letter, second-letter)
// buckets of the relevant two-way decomposition, in compressed coordinates.
using BucketSplitter = std::function<std::pair<Subspace, Subspace>(
    const ComplexMatrix&, const AnnulusParams&)>;

void refine(const std::vector<ComplexMatrix>& ops, const AnnulusParams& p,
            std::size_t level, const ComplexMatrix& frame,
            const std::array<std::string, 2>& alphabet,
            const BucketSplitter& split, std::vector<std::string>& labels,
            std::vector<FamilyReport::Part>& out) {
  const Eigen::Index d = frame.rows();
  if (level == ops.size()) {
    out.push_back({TypeAssignment{labels}, Subspace{frame}, {}});
    return;
  }
  ComplexMatrix first(d, 0), second(d, 0);
  if (frame.cols() > 0) {
    const ComplexMatrix B = orthonormalize(frame);
    const ComplexMatrix A = B.adjoint() * ops[level] * B;
    auto [f, s] = split(A, p);
    first = B * f.basis;
    second = B * s.basis;
  }
  labels.push_back(alphabet[0]);
  refine(ops, p, level + 1, first, alphabet, split, labels, out);
  labels.back() = alphabet[1];
  refine(ops, p, level + 1, second, alphabet, split, labels, out);
  labels.pop_back();
}

FamilyReport run_refinement(const std::vector<ComplexMatrix>& ops,
                            const AnnulusParams& p,
                            const std::array<std::string, 2>& alphabet,
                            const BucketSplitter& split) {
  const Eigen::Index d = ops.front().rows();
  FamilyReport rep;
  rep.r_used = p.r;
  std::vector<std::string> labels;
  refine(ops, p, 0, ComplexMatrix::Identity(d, d), alphabet, split, labels,
         rep.parts);
  for (auto& part : rep.parts) {
    part.residuals.reserve(ops.size());
    for (const auto& T : ops)
      part.residuals.push_back(reduction_residual(T, part.space));
  }
  return rep;
}

std::pair<Subspace, Subspace> canonical_buckets(const ComplexMatrix& A,
                                                const AnnulusParams& p) {
  const SplitReport s = canonical_ar_contraction(A, p);
  return {span_union(s.part("u").space, s.part("r").space, p.tol_rank),
          s.part("c").space};
}

}  // namespace

const FamilyReport::Part& FamilyReport::part(const TypeAssignment& a) const {
  for (const auto& pt : parts)
    if (pt.assignment == a) return pt;
  throw InvalidMatrix("family report has no part for the given assignment");
}

bool is_doubly_commuting(const std::vector<ComplexMatrix>& ops,
                         double tol_id) {
  validate_tuple(ops);
  if (ops.size() < 2)
    throw DimensionMismatch("is_doubly_commuting needs at least two operators");
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      const double scale = op_norm(ops[i]) * op_norm(ops[j]);
      if (op_norm(ops[i] * ops[j] - ops[j] * ops[i]) > tol_id * scale)
        return false;
      if (op_norm(ops[i] * ops[j].adjoint() - ops[j].adjoint() * ops[i]) >
          tol_id * scale)
        return false;
    }
  return true;
}

bool is_pairwise_commuting(const std::vector<ComplexMatrix>& ops,
                           double tol_id) {
  validate_tuple(ops);
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      const double scale = op_norm(ops[i]) * op_norm(ops[j]);
      if (op_norm(ops[i] * ops[j] - ops[j] * ops[i]) > tol_id * scale)
        return false;
    }
  return true;
}

FamilyReport canonical_family(const std::vector<ComplexMatrix>& ops,
                              const AnnulusParams& p) {
  p.validate();
  validate_tuple(ops);
  for (const auto& T : ops)
    if (!is_ar_contraction_candidate(T, p))
      throw NotACandidate("canonical_family: component fails the candidate "
                          "predicate");
  if (ops.size() >= 2 && !is_doubly_commuting(ops, p.tol_id))
    throw NotDoublyCommuting("canonical_family: tuple is not doubly commuting");
  return run_refinement(ops, p, {"t_u", "t_c"}, canonical_buckets);
}

FamilyReport wold_family(const std::vector<ComplexMatrix>& ops,
                         const AnnulusParams& p) {
  p.validate();
  validate_tuple(ops);
  for (const auto& V : ops)
    if (!is_ar_isometry(V, p))
      throw NotArIsometry("wold_family: component is not an A_r-isometry");
  if (ops.size() >= 2 && !is_doubly_commuting(ops, p.tol_id))
    throw NotDoublyCommuting("wold_family: tuple is not doubly commuting");
  FamilyReport rep =
      run_refinement(ops, p, {"t_u", "t_c"},
                     [](const ComplexMatrix& A, const AnnulusParams& q)
                         -> std::pair<Subspace, Subspace> {
                       const SplitReport s = wold_ar_isometry(A, q);
                       return {span_union(s.part("u").space, s.part("r").space,
                                          q.tol_rank),
                               s.part("p").space};
                     });
  rep.notes.push_back(
      "finite-dimensional input: every part carrying a t_c label is {0}");
  return rep;
}

FamilyReport unitary_family(const std::vector<ComplexMatrix>& ops,
                            const AnnulusParams& p) {
  p.validate();
  validate_tuple(ops);
  for (const auto& U : ops)
    if (!is_ar_unitary(U, p))
      throw NotArUnitary("unitary_family: component is not an A_r-unitary");
  if (ops.size() >= 2 && !is_pairwise_commuting(ops, p.tol_id))
    throw NotCommuting("unitary_family: tuple does not commute");
  return run_refinement(ops, p, {"u", "r"},
                        [](const ComplexMatrix& A, const AnnulusParams& q)
                            -> std::pair<Subspace, Subspace> {
                          const SplitReport s = split_ar_unitary(A, q);
                          return {s.part("u").space, s.part("r").space};
                        });
}

FamilyReport levan_family(const std::vector<ComplexMatrix>& ops,
                          const AnnulusParams& p) {
  p.validate();
  validate_tuple(ops);
  for (const auto& T : ops)
    if (classify_atom(T, p) != AtomLabel::t_c)
      throw NotCnu("levan_family: component is not a c.n.u. A_r-contraction");
  if (ops.size() >= 2 && !is_doubly_commuting(ops, p.tol_id))
    throw NotDoublyCommuting("levan_family: tuple is not doubly commuting");
  FamilyReport rep =
      run_refinement(ops, p, {"t_p", "t_cni"},
                     [](const ComplexMatrix& A, const AnnulusParams& q)
                         -> std::pair<Subspace, Subspace> {
                       const SplitReport s = levan_split(A, q);
                       return {s.part("iso").space, s.part("cni").space};
                     });
  rep.notes.push_back(
      "finite-dimensional input: every part carrying a t_p label is {0}");
  return rep;
}

FamilyReport burdak_family(const std::vector<ComplexMatrix>& ops,
                           const AnnulusParams& p) {
  p.validate();
  validate_tuple(ops);
  const std::size_t n = ops.size();
  const Eigen::Index d = ops.front().rows();
  if (n >= 2 && !is_pairwise_commuting(ops, p.tol_id))
    throw NotCommuting("burdak_family: tuple does not commute");

  // H^dc: largest joint reducing subspace inside the commutator-defect
  // kernel, on which the tuple doubly commutes.
  Subspace K = Subspace::full(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const ComplexMatrix D =
          ops[i] * ops[j].adjoint() - ops[j].adjoint() * ops[i];
      const double scale = op_norm(ops[i]) * op_norm(ops[j]);
      K = intersect(K, nullspace(D, p.tol_rank, std::max(scale, 1.0)),
                    p.tol_rank);
    }
  const Subspace Hdc = largest_reducing_within(ops, K, p.tol_rank);

  // Canonical 2^n refinement of the compressions to H^dc, lifted back.
  std::vector<FamilyReport::Part> dc_parts;
  if (Hdc.dim() > 0) {
    const ComplexMatrix B = orthonormalize(Hdc.basis);
    std::vector<ComplexMatrix> compressed;
    compressed.reserve(n);
    for (const auto& T : ops) compressed.push_back(B.adjoint() * T * B);
    // The candidate predicate is demanded only on the doubly commuting
    // core: truncated shift models are singular on the full space yet
    // still admit the split (everything lands in the remainder).
    for (const auto& A : compressed)
      if (!is_ar_contraction_candidate(A, p))
        throw NotACandidate("burdak_family: component fails the candidate "
                            "predicate on the doubly commuting core");
    std::vector<std::string> labels;
    std::vector<FamilyReport::Part> local;
    refine(compressed, p, 0, ComplexMatrix::Identity(Hdc.dim(), Hdc.dim()),
           {"t_u", "t_c"}, canonical_buckets, labels, local);
    for (auto& part : local) {
      part.space = Subspace{B * part.space.basis};
      dc_parts.push_back(std::move(part));
    }
  }

  auto find_dc = [&](const TypeAssignment& a) -> Subspace {
    for (const auto& part : dc_parts)
      if (part.assignment == a) return part.space;
    return Subspace::zero(d);
  };

  FamilyReport rep;
  rep.r_used = p.r;
  TypeAssignment all_u{std::vector<std::string>(n, "t_u")};
  rep.parts.push_back({all_u, find_dc(all_u), {}});
  Subspace kept = rep.parts.front().space;
  for (std::size_t j = 0; j < n; ++j) {
    TypeAssignment a = all_u;
    a.labels[j] = "t_c";
    Subspace S = find_dc(a);
    kept = span_union(kept, S, p.tol_rank);
    rep.parts.push_back({a, std::move(S), {}});
  }
  for (auto& part : rep.parts) {
    part.residuals.reserve(n);
    for (const auto& T : ops)
      part.residuals.push_back(reduction_residual(T, part.space));
  }

  FamilyReport::Remainder rem;
  rem.space = complement(kept, p.tol_rank);
  rem.tag = "strongly_cnu";
  // Randomized-free spot check: inside H(s), the leave-one-out unitary
  // defect kernels should admit no nonzero joint reducing subspace.
  const ComplexMatrix I = ComplexMatrix::Identity(d, d);
  for (std::size_t j = 0; j < n; ++j) {
    Subspace Kj = rem.space;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const ComplexMatrix G = ops[i].adjoint() * ops[i];
      const ComplexMatrix D = (I - G) * (G - p.r * p.r * I);
      Kj = intersect(Kj, nullspace(D, p.tol_rank, 1.0), p.tol_rank);
    }
    rem.spot_check_dims.push_back(
        largest_reducing_within(ops, Kj, p.tol_rank).dim());
  }
  rep.remainder = std::move(rem);
  return rep;
}

}  // namespace annulus
