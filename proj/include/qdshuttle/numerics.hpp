#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qds {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Tolerances used across the kernel, chosen as ~100x double-precision noise
// at dimension 16.
namespace tol {
inline constexpr double kHermiticity = 1e-12;      // relative to max|H|
inline constexpr double kOrthonormality = 1e-10;
inline constexpr double kReconstruction = 1e-9;    // relative
inline constexpr double kNorm = 1e-10;
inline constexpr double kTrace = 1e-10;
}  // namespace tol

class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigendecomposition of a Hermitian matrix: ascending real values and
/// orthonormal eigenvector columns.
struct EigenSystem {
  RealVector values;   // ueV, ascending
  Matrix vectors;      // column k belongs to values[k]

  int dim() const { return static_cast<int>(values.size()); }
};

// max |H(i,j) - conj(H(j,i))| over the matrix, relative to max|H|.
double hermiticity_defect(const Matrix& H);
bool is_hermitian(const Matrix& H, double rtol = tol::kHermiticity);

/// Hermitian eigendecomposition with a deterministic phase gauge: the
/// largest-magnitude component of each eigenvector is made real positive.
/// Throws NumericsError on non-Hermitian input (message carries the measured
/// asymmetry) or solver failure.
EigenSystem eigh(const Matrix& H);

/// psi(dt) = V diag(exp(-i E dt / hbar)) V^dag psi, dt in ns.
Vector evolve_exact(const Matrix& H, double dt_ns, const Vector& psi);
Vector evolve_exact(const EigenSystem& es, double dt_ns, const Vector& psi);

/// Partial trace of rho over the factors not listed in `keep`. `dims` are the
/// subsystem dimensions in tensor order (first factor most significant, as
/// produced by kron); the kept factors stay in their original order.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<int>& keep);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

inline Matrix density(const Vector& psi) { return psi * psi.adjoint(); }

}  // namespace qds
