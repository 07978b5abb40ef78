#ifndef ANNULUS_CORE_HPP
#define ANNULUS_CORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace annulus {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// All library errors carry a stable machine-readable code alongside the
// human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define ANNULUS_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                             \
  public:                                                                 \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}          \
  }

ANNULUS_DEFINE_ERROR(InvalidMatrix);
ANNULUS_DEFINE_ERROR(DimensionMismatch);
ANNULUS_DEFINE_ERROR(NumericalFailure);
ANNULUS_DEFINE_ERROR(SingularOperator);
ANNULUS_DEFINE_ERROR(StallError);
ANNULUS_DEFINE_ERROR(NotACandidate);
ANNULUS_DEFINE_ERROR(NotArUnitary);
ANNULUS_DEFINE_ERROR(NotArIsometry);
ANNULUS_DEFINE_ERROR(NotCnu);
ANNULUS_DEFINE_ERROR(MixedType);
ANNULUS_DEFINE_ERROR(NotDoublyCommuting);
ANNULUS_DEFINE_ERROR(NotCommuting);
ANNULUS_DEFINE_ERROR(ExplicitCapError);
ANNULUS_DEFINE_ERROR(BadMultiIndex);
ANNULUS_DEFINE_ERROR(EigenvalueOffBoundary);
ANNULUS_DEFINE_ERROR(WindowTooSmall);
ANNULUS_DEFINE_ERROR(InconsistentBlocks);
ANNULUS_DEFINE_ERROR(ParseError);
ANNULUS_DEFINE_ERROR(IoError);

#undef ANNULUS_DEFINE_ERROR

// Modulus r of the annulus {z : r < |z| < 1} plus the numerical tolerances
// used for rank decisions, identity residuals and spectral membership.
struct AnnulusParams {
  double r;
  double tol_rank = 1e-9;
  double tol_id = 1e-8;
  double tol_spec = 1e-8;

  void validate() const {
    if (!(r > 0.0 && r < 1.0))
      throw InvalidMatrix("annulus modulus r must lie in (0,1), got " +
                          std::to_string(r));
    for (double t : {tol_rank, tol_id, tol_spec})
      if (!(t > 0.0 && t < 1.0))
        throw InvalidMatrix("tolerances must lie in (0,1)");
  }

  static AnnulusParams strict_profile(double r) {
    AnnulusParams p{r};
    p.tol_rank = 1e-11;
    p.tol_id = 1e-10;
    p.tol_spec = 1e-10;
    return p;
  }
};

// Closed subspace of C^d, stored as an orthonormal column frame.
// k = 0 (empty frame) is a first-class value, never an error.
struct Subspace {
  ComplexMatrix basis;  // ambient_dim x k, orthonormal columns

  Eigen::Index ambient() const { return basis.rows(); }
  Eigen::Index dim() const { return basis.cols(); }

  static Subspace zero(Eigen::Index ambient_dim) {
    return Subspace{ComplexMatrix::Zero(ambient_dim, 0)};
  }
  static Subspace full(Eigen::Index ambient_dim) {
    return Subspace{ComplexMatrix::Identity(ambient_dim, ambient_dim)};
  }

  // Orthogonal projection onto the subspace.
  ComplexMatrix projector() const { return basis * basis.adjoint(); }
};

inline void require_square_finite(const ComplexMatrix& M) {
  if (M.rows() != M.cols() || M.rows() == 0)
    throw InvalidMatrix("operator matrix must be square and nonempty");
  if (!M.allFinite())
    throw InvalidMatrix("operator matrix has non-finite entries");
}

}  // namespace annulus

#endif
