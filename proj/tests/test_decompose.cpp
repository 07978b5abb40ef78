#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/LU>

#include "annulus/classify.hpp"
#include "annulus/decompose.hpp"
#include "annulus/linops.hpp"
#include "support.hpp"

using namespace annulus;
using namespace testsupport;

namespace {

const AnnulusParams kP{0.5};

Subspace coord_span(const std::vector<Eigen::Index>& coords, Eigen::Index d) {
  ComplexMatrix B =
      ComplexMatrix::Zero(d, static_cast<Eigen::Index>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j) B(coords[j], j) = 1.0;
  return Subspace{B};
}

void check_split_invariants(const SplitReport& rep, const ComplexMatrix& T) {
  const Eigen::Index d = T.rows();
  Eigen::Index total = 0;
  for (const auto& part : rep.parts) {
    total += part.space.dim();
    CHECK(part.residual <= 1e-8);
  }
  CHECK(total == d);
  for (std::size_t i = 0; i < rep.parts.size(); ++i)
    for (std::size_t j = i + 1; j < rep.parts.size(); ++j) {
      if (rep.parts[i].space.dim() == 0 || rep.parts[j].space.dim() == 0)
        continue;
      CHECK(op_norm(rep.parts[i].space.basis.adjoint() *
                    rep.parts[j].space.basis) <= 1e-8);
    }
}

}  // namespace

TEST_CASE("split_ar_unitary sorts a boundary diagonal by modulus") {
  const ComplexMatrix T =
      diagm({1.0, Complex(0.0, 1.0), 0.5, Complex(0.0, 0.5)});
  const SplitReport rep = split_ar_unitary(T, kP);
  CHECK(projection_distance(rep.part("u").space, coord_span({0, 1}, 4)) <=
        1e-10);
  CHECK(projection_distance(rep.part("r").space, coord_span({2, 3}, 4)) <=
        1e-10);
  check_split_invariants(rep, T);
}

TEST_CASE("split_ar_unitary on a cyclic block sum") {
  const ComplexMatrix T =
      block_diag({cyclic_shift(3), 0.5 * cyclic_shift(2)});
  const SplitReport rep = split_ar_unitary(T, kP);
  CHECK(rep.part("u").space.dim() == 3);
  CHECK(rep.part("r").space.dim() == 2);
  check_split_invariants(rep, T);
}

TEST_CASE("split_ar_unitary is conjugation covariant") {
  const ComplexMatrix D = diagm({1.0, 0.5});
  const ComplexMatrix Q = haar_unitary(2, 77);
  const SplitReport rep = split_ar_unitary(Q * D * Q.adjoint(), kP);
  REQUIRE(rep.part("u").space.dim() == 1);
  REQUIRE(rep.part("r").space.dim() == 1);
  CHECK(projection_distance(rep.part("u").space,
                            Subspace{Q.leftCols(1)}) <= 1e-8);
}

TEST_CASE("split_ar_unitary rejects non-A_r-unitaries") {
  CHECK_THROWS_AS(split_ar_unitary(diagm({1.0, 0.7}), kP), NotArUnitary);
}

TEST_CASE("wold split of a finite A_r-isometry has no pure part") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const ComplexMatrix V = random_ar_unitary(2, 2, 0.5, 400 + seed);
    const SplitReport rep = wold_ar_isometry(V, kP);
    CHECK(rep.part("p").space.dim() == 0);
    check_split_invariants(rep, V);
  }
}

TEST_CASE("wold split of diag(1, 0.5)") {
  const SplitReport rep = wold_ar_isometry(diagm({1.0, 0.5}), kP);
  CHECK(rep.part("u").space.dim() == 1);
  CHECK(rep.part("r").space.dim() == 1);
  CHECK(rep.part("p").space.dim() == 0);
}

TEST_CASE("wold split of a conjugated block sum") {
  const ComplexMatrix D = block_diag({cyclic_shift(2), diagm({0.5})});
  const ComplexMatrix Q = haar_unitary(3, 13);
  const SplitReport rep = wold_ar_isometry(Q * D * Q.adjoint(), kP);
  CHECK(rep.part("u").space.dim() == 2);
  CHECK(rep.part("r").space.dim() == 1);
  CHECK(rep.part("p").space.dim() == 0);
}

TEST_CASE("wold split rejects non-isometries") {
  CHECK_THROWS_AS(wold_ar_isometry(diagm({0.7, 0.7}), kP), NotArIsometry);
}

TEST_CASE("pure part agrees between complement and range-span forms") {
  for (std::uint64_t seed : {1ull, 9ull}) {
    const ComplexMatrix V = random_ar_unitary(2, 1, 0.5, 500 + seed);
    const Eigen::Index d = V.rows();
    const ComplexMatrix I = ComplexMatrix::Identity(d, d);
    const ComplexMatrix W = 0.5 * V.inverse();
    // H_p1 = closed span of Ran(I - V^k V*^k); likewise H_p2 for rV^{-1}
    Subspace p1 = Subspace::zero(d), p2 = Subspace::zero(d);
    ComplexMatrix Vk = V, Wk = W;
    for (int k = 1; k <= d + 1; ++k) {
      p1 = span_union(p1, complement(nullspace(I - Vk * Vk.adjoint(),
                                               kP.tol_rank, 1.0)));
      p2 = span_union(p2, complement(nullspace(I - Wk * Wk.adjoint(),
                                               kP.tol_rank, 1.0)));
      Vk = Vk * V;
      Wk = Wk * W;
    }
    const Subspace range_form = intersect(p1, p2);
    const SplitReport rep = wold_ar_isometry(V, kP);
    CHECK(projection_distance(range_form, rep.part("p").space) <= 1e-8);
  }
}

TEST_CASE("canonical split of diag(1, 0.7)") {
  const SplitReport rep = canonical_ar_contraction(diagm({1.0, 0.7}), kP);
  CHECK(rep.part("u").space.dim() == 1);
  CHECK(rep.part("r").space.dim() == 0);
  CHECK(rep.part("c").space.dim() == 1);
  CHECK(projection_distance(rep.part("u").space, coord_span({0}, 2)) <= 1e-10);
}

TEST_CASE("canonical split recovers a planted block structure") {
  const ComplexMatrix D =
      block_diag({diagm({1.0}), 0.5 * cyclic_shift(2), jordan2(0.7, 0.1)});
  const ComplexMatrix Q = haar_unitary(5, 3);
  const ComplexMatrix T = Q * D * Q.adjoint();
  const SplitReport rep = canonical_ar_contraction(T, kP);
  CHECK(rep.part("u").space.dim() == 1);
  CHECK(rep.part("r").space.dim() == 2);
  CHECK(rep.part("c").space.dim() == 2);
  CHECK(projection_distance(rep.part("u").space, Subspace{Q.leftCols(1)}) <=
        1e-8);
  CHECK(projection_distance(rep.part("r").space, Subspace{Q.middleCols(1, 2)}) <=
        1e-8);
  CHECK(projection_distance(rep.part("c").space, Subspace{Q.rightCols(2)}) <=
        1e-8);
  check_split_invariants(rep, T);
}

TEST_CASE("canonical split of an A_r-unitary has no c.n.u. part") {
  const ComplexMatrix T = random_ar_unitary(2, 2, 0.5, 600);
  CHECK(canonical_ar_contraction(T, kP).part("c").space.dim() == 0);
}

TEST_CASE("canonical split rejects non-candidates") {
  CHECK_THROWS_AS(canonical_ar_contraction(diagm({0.2, 1.0}), kP),
                  NotACandidate);
}

TEST_CASE("canonical split restrictions pass the matching predicates") {
  const ComplexMatrix D =
      block_diag({cyclic_shift(2), diagm({0.5}), jordan2(0.75, 0.05)});
  const ComplexMatrix Q = haar_unitary(5, 8);
  const ComplexMatrix T = Q * D * Q.adjoint();
  const SplitReport rep = canonical_ar_contraction(T, kP);
  const ComplexMatrix u_block = compress(T, rep.part("u").space);
  CHECK(op_norm(u_block.adjoint() * u_block -
                ComplexMatrix::Identity(u_block.rows(), u_block.rows())) <=
        1e-8);
  const ComplexMatrix r_block = compress(T, rep.part("r").space);
  CHECK(op_norm(r_block.adjoint() * r_block -
                0.25 * ComplexMatrix::Identity(r_block.rows(), r_block.rows())) <=
        1e-8);
  CHECK(classify_atom(compress(T, rep.part("c").space), kP) == AtomLabel::t_c);
}

TEST_CASE("levan split collapses in finite dimensions") {
  const SplitReport rep = levan_split(jordan2(0.7, 0.1), kP);
  CHECK(rep.part("iso").space.dim() == 0);
  CHECK(rep.part("cni").space.dim() == 2);
}

TEST_CASE("levan split requires a c.n.u. input") {
  CHECK_THROWS_AS(levan_split(diagm({1.0, 0.5}), kP), NotCnu);
}

TEST_CASE("levan split on random c.n.u. candidates returns no isometric part") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const ComplexMatrix T = random_cnu_candidate(1 + seed % 2, 0.5, 700 + seed);
    REQUIRE(classify_atom(T, kP) == AtomLabel::t_c);
    CHECK(levan_split(T, kP).part("iso").space.dim() == 0);
  }
}

TEST_CASE("inversion duality swaps the u and r subspaces") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const ComplexMatrix T = random_ar_unitary(2, 2, 0.5, 800 + seed);
    const ComplexMatrix S = 0.5 * T.inverse();
    const SplitReport a = split_ar_unitary(T, kP);
    const SplitReport b = split_ar_unitary(S, kP);
    CHECK(projection_distance(a.part("u").space, b.part("r").space) <= 1e-8);
    CHECK(projection_distance(a.part("r").space, b.part("u").space) <= 1e-8);
  }
}

TEST_CASE("one-dimensional inputs produce a single nonzero part") {
  const SplitReport u_case = split_ar_unitary(diagm({Complex(0.0, 1.0)}), kP);
  CHECK(u_case.part("u").space.dim() == 1);
  CHECK(u_case.part("r").space.dim() == 0);
  const SplitReport r_case = split_ar_unitary(diagm({0.5}), kP);
  CHECK(r_case.part("u").space.dim() == 0);
  CHECK(r_case.part("r").space.dim() == 1);
  const SplitReport c_case = canonical_ar_contraction(diagm({0.7}), kP);
  CHECK(c_case.part("c").space.dim() == 1);
}

TEST_CASE("split report label lookup") {
  const SplitReport rep = split_ar_unitary(diagm({1.0}), kP);
  CHECK_THROWS_AS(rep.part("nonexistent"), Error);
}
