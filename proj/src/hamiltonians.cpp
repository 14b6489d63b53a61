#include "qdshuttle/hamiltonians.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qds {

namespace pauli {

Matrix identity() { return Matrix::Identity(2, 2); }

Matrix x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1;
  return m;
}

Matrix proj_left() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1;
  return m;
}

Matrix proj_right() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 1) = 1;
  return m;
}

}  // namespace pauli

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_2pi(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w;
}

void check_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite, got " << value;
    throw NumericsError(msg.str());
  }
}

}  // namespace

double SvoParams::dphi() const { return wrap_2pi(phi_L - phi_R); }

SvoParams SvoParams::from_dphi(double t_c, double E_z, double delta_L,
                               double delta_R, double dphi, double eta1,
                               double eta2) {
  SvoParams p;
  p.t_c = t_c;
  p.E_z = E_z;
  p.delta_L_mag = delta_L;
  p.delta_R_mag = delta_R;
  p.phi_L = 0.0;
  p.phi_R = wrap_2pi(-dphi);
  p.eta1 = eta1;
  p.eta2 = eta2;
  return p;
}

Matrix build_orbital_dqd(const OrbitalDqdParams& p) {
  check_positive(p.dE_L, "dE_L");
  check_positive(p.dE_R, "dE_R");
  check_positive(p.t_c, "t_c");
  Matrix H(4, 4);
  const double t = p.t_c;
  H << p.eps_L, 0, t, t,
       0, p.eps_L + p.dE_L, t, t,
       t, t, p.eps_R, 0,
       t, t, 0, p.eps_R + p.dE_R;
  return H;
}

Matrix build_svo(const SvoParams& p, double eps_L, double eps_R) {
  using namespace pauli;
  const Complex dL = p.delta_L_mag * std::polar(1.0, p.phi_L);
  const Complex dR = p.delta_R_mag * std::polar(1.0, p.phi_R);

  // Shuttled electron: orbital x valley x spin1 (8x8).
  Matrix H8 = eps_L * kron(kron(proj_left(), identity()), identity()) +
              eps_R * kron(kron(proj_right(), identity()), identity()) +
              p.t_c * kron(kron(x(), identity()), identity());
  Matrix valley = dL * kron(kron(proj_left(), plus()), identity()) +
                  dR * kron(kron(proj_right(), plus()), identity());
  H8 += valley + valley.adjoint();
  H8 += p.E_z * kron(kron(identity(), identity()), z());
  H8 += p.eta1 * kron(kron(z(), identity()), x());
  H8 += p.eta2 * kron(kron(y(), identity()), y());

  // Static spin sees only the Zeeman field.
  return kron(H8, identity()) +
         p.E_z * kron(Matrix(Matrix::Identity(8, 8)), z());
}

Matrix build_valley_orbit(double eps, const SvoParams& p) {
  using namespace pauli;
  const Complex dL = p.delta_L_mag * std::polar(1.0, p.phi_L);
  const Complex dR = p.delta_R_mag * std::polar(1.0, p.phi_R);
  Matrix H = (eps / 2) * kron(proj_left(), identity()) +
             (-eps / 2) * kron(proj_right(), identity()) +
             p.t_c * kron(x(), identity());
  Matrix valley = dL * kron(proj_left(), plus()) + dR * kron(proj_right(), plus());
  H += valley + valley.adjoint();
  return H;
}

Matrix build_twovalley_orbital(const OrbitalDqdParams& p, const SvoParams& v) {
  using namespace pauli;
  const Complex dL = v.delta_L_mag * std::polar(1.0, v.phi_L);
  const Complex dR = v.delta_R_mag * std::polar(1.0, v.phi_R);
  Matrix H = kron(build_orbital_dqd(p), identity());
  Matrix valley =
      dL * kron(kron(proj_left(), identity()), plus()) +
      dR * kron(kron(proj_right(), identity()), plus());
  return H + valley + valley.adjoint();
}

Matrix valley_eigenbasis_matrix(int dim, double phi_L, double phi_R) {
  using namespace pauli;
  const auto bd = [](double phi) {
    Matrix b(2, 2);
    const Complex e = std::polar(1.0, -phi);
    // Columns scaled by 1/sqrt(2) to make the transform unitary.
    b << 1, 1, e, -e;
    return Matrix((b / std::sqrt(2.0)).eval());
  };
  Matrix B4 = kron(proj_left(), bd(phi_L)) + kron(proj_right(), bd(phi_R));
  if (dim == 4) return B4;
  if (dim == 16) return kron(B4, Matrix(Matrix::Identity(4, 4)));
  std::ostringstream msg;
  msg << "valley_eigenbasis_transform expects dim 4 or 16, got " << dim;
  throw NumericsError(msg.str());
}

Matrix valley_eigenbasis_transform(const Matrix& H, double phi_L,
                                   double phi_R) {
  const Matrix B = valley_eigenbasis_matrix(static_cast<int>(H.rows()), phi_L, phi_R);
  return B.adjoint() * H * B;
}

DerivedCouplings derived_couplings(double t_c, double eta2, double dphi) {
  if (t_c < 0.0) throw NumericsError("derived_couplings: t_c must be >= 0");
  const Complex e = std::polar(1.0, -dphi);
  return DerivedCouplings{
      0.5 * t_c * (1.0 + e),
      0.5 * t_c * (1.0 - e),
      0.5 * eta2 * (1.0 + e),
      0.5 * eta2 * (1.0 - e),
  };
}

std::optional<double> delta_phi_threshold(double t_c, double E_z) {
  check_positive(t_c, "t_c");
  check_positive(E_z, "E_z");
  if (E_z >= t_c) return std::nullopt;
  return 2.0 * std::acos(E_z / t_c);
}

SpectrumTable spectrum_vs_detuning(const std::function<Matrix(double)>& builder,
                                   const std::vector<double>& eps_grid,
                                   const Matrix& spin_op) {
  SpectrumTable table;
  table.eps = eps_grid;
  const int n = static_cast<int>(eps_grid.size());
  if (n == 0) return table;
  const int dim = static_cast<int>(builder(eps_grid.front()).rows());
  table.energies.resize(n, dim);
  table.spin_z = RealMatrix::Zero(n, dim);
  for (int i = 0; i < n; ++i) {
    const EigenSystem es = eigh(builder(eps_grid[i]));
    table.energies.row(i) = es.values.transpose();
    if (spin_op.size() > 0)
      for (int k = 0; k < dim; ++k)
        table.spin_z(i, k) =
            (es.vectors.col(k).adjoint() * spin_op * es.vectors.col(k))(0).real();
  }
  return table;
}

std::vector<AntiCrossing> find_anti_crossings(const SpectrumTable& table) {
  std::vector<AntiCrossing> out;
  const int n = static_cast<int>(table.eps.size());
  for (int level = 0; level + 1 < table.levels(); ++level) {
    for (int i = 1; i + 1 < n; ++i) {
      const double g0 = table.energies(i - 1, level + 1) - table.energies(i - 1, level);
      const double g1 = table.energies(i, level + 1) - table.energies(i, level);
      const double g2 = table.energies(i + 1, level + 1) - table.energies(i + 1, level);
      if (g1 <= g0 && g1 < g2)
        out.push_back(AntiCrossing{table.eps[i], g1, level});
    }
  }
  return out;
}

void SpectrumTable::write_csv(std::ostream& os) const {
  os << "eps";
  for (int k = 0; k < levels(); ++k) os << ",E_" << k;
  for (int k = 0; k < levels(); ++k) os << ",sz_" << k;
  os << "\n";
  os.precision(12);
  for (size_t i = 0; i < eps.size(); ++i) {
    os << eps[i];
    for (int k = 0; k < levels(); ++k) os << "," << energies(i, k);
    for (int k = 0; k < levels(); ++k) os << "," << spin_z(i, k);
    os << "\n";
  }
}

}  // namespace qds
