#include "qdshuttle/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "qdshuttle/units.hpp"

namespace qds {

double hermiticity_defect(const Matrix& H) {
  const double scale = H.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double defect = 0.0;
  for (Eigen::Index i = 0; i < H.rows(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      defect = std::max(defect, std::abs(H(i, j) - std::conj(H(j, i))));
  return defect / scale;
}

bool is_hermitian(const Matrix& H, double rtol) {
  return H.rows() == H.cols() && hermiticity_defect(H) <= rtol;
}

EigenSystem eigh(const Matrix& H) {
  if (H.rows() != H.cols())
    throw NumericsError("eigh: matrix is not square");
  const double defect = hermiticity_defect(H);
  if (defect > tol::kHermiticity) {
    std::ostringstream msg;
    msg << "eigh: matrix is not Hermitian (relative asymmetry " << defect << ")";
    throw NumericsError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(H);
  if (solver.info() != Eigen::Success)
    throw NumericsError("eigh: eigensolver failed to converge");

  EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
  // Fix the gauge: rotate each column so its largest-magnitude entry is real
  // positive. Finite-difference derivatives of eigenvectors stay smooth only
  // with a deterministic phase choice.
  for (int k = 0; k < es.dim(); ++k) {
    Eigen::Index imax = 0;
    es.vectors.col(k).cwiseAbs().maxCoeff(&imax);
    const Complex z = es.vectors(imax, k);
    if (std::abs(z) > 0.0) es.vectors.col(k) *= std::conj(z) / std::abs(z);
  }
  return es;
}

Vector evolve_exact(const EigenSystem& es, double dt_ns, const Vector& psi) {
  if (psi.size() != es.values.size())
    throw NumericsError("evolve_exact: state dimension mismatch");
  Vector amps = es.vectors.adjoint() * psi;
  for (Eigen::Index k = 0; k < amps.size(); ++k)
    amps(k) *= std::polar(1.0, -es.values(k) * dt_ns / kHbar);
  return es.vectors * amps;
}

Vector evolve_exact(const Matrix& H, double dt_ns, const Vector& psi) {
  if (!std::isfinite(dt_ns))
    throw NumericsError("evolve_exact: dt is not finite");
  return evolve_exact(eigh(H), dt_ns, psi);
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  long prod = 1;
  for (int d : dims) prod *= d;
  if (prod != rho.rows() || rho.rows() != rho.cols()) {
    std::ostringstream msg;
    msg << "partial_trace: product of factor dims (" << prod
        << ") does not match matrix dim " << rho.rows();
    throw NumericsError(msg.str());
  }
  if (keep.empty())
    throw NumericsError("partial_trace: keep set is empty");
  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(n, false);
  for (int f : keep) {
    if (f < 0 || f >= n) {
      std::ostringstream msg;
      msg << "partial_trace: keep index " << f << " out of range for " << n
          << " factors";
      throw NumericsError(msg.str());
    }
    kept[f] = true;
  }

  long keep_dim = 1, trace_dim = 1;
  for (int f = 0; f < n; ++f) (kept[f] ? keep_dim : trace_dim) *= dims[f];

  // Strides of each factor in the full index (first factor most significant).
  std::vector<long> stride(n, 1);
  for (int f = n - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  // Full index offsets of every kept and traced multi-index combination.
  const auto offsets = [&](bool want_kept) {
    std::vector<long> out{0};
    for (int f = 0; f < n; ++f) {
      if (kept[f] != want_kept) continue;
      std::vector<long> next;
      next.reserve(out.size() * dims[f]);
      for (long base : out)
        for (int i = 0; i < dims[f]; ++i) next.push_back(base + i * stride[f]);
      out = std::move(next);
    }
    return out;
  };
  const std::vector<long> keep_off = offsets(true);
  const std::vector<long> trace_off = offsets(false);

  Matrix out = Matrix::Zero(keep_dim, keep_dim);
  for (long p = 0; p < keep_dim; ++p)
    for (long q = 0; q < keep_dim; ++q) {
      Complex sum = 0.0;
      for (long t : trace_off) sum += rho(keep_off[p] + t, keep_off[q] + t);
      out(p, q) = sum;
    }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace qds
