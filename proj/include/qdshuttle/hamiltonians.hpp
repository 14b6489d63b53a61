#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "qdshuttle/numerics.hpp"

namespace qds {

// Pauli matrices and the projector / ladder combinations used by the
// effective Hamiltonians. All 2x2, basis index 0 = (L, z, up).
namespace pauli {
Matrix identity();
Matrix x();
Matrix y();
Matrix z();
Matrix plus();        // (x + i y)/2, maps |1> -> |0>
Matrix proj_left();   // (I + z)/2
Matrix proj_right();  // (I - z)/2
}  // namespace pauli

/// Double-dot orbital model with one excited orbital per dot.
/// Basis order (L,0), (L,1), (R,0), (R,1).
struct OrbitalDqdParams {
  double eps_L = 0.0;   // ueV, left dot ground energy
  double eps_R = 0.0;   // ueV
  double dE_L = 1000.0; // ueV, ground to first excited splitting, > 0
  double dE_R = 1000.0; // ueV
  double t_c = 25.0;    // ueV, resonant tunnel coupling, > 0
};

/// Constants of the 16-level spin-valley-orbit model. The valley splitting of
/// dot d is the complex number |Delta_d| e^{i phi_d}.
struct SvoParams {
  double t_c = 75.0;          // ueV
  double E_z = 40.0;          // ueV, Zeeman splitting
  double delta_L_mag = 200.0; // ueV
  double delta_R_mag = 150.0; // ueV
  double phi_L = 0.0;         // rad, stored in [0, 2pi)
  double phi_R = 0.0;         // rad
  double eta1 = 2.0;          // ueV, intra-dot spin-orbit
  double eta2 = 2.0;          // ueV, inter-dot spin-orbit

  // Valley phase difference phi_L - phi_R, reported modulo 2pi.
  double dphi() const;

  // Convention used throughout: phi_L = 0, phi_R = -dphi, so that the stored
  // difference phi_L - phi_R equals dphi.
  static SvoParams from_dphi(double t_c, double E_z, double delta_L,
                             double delta_R, double dphi, double eta1,
                             double eta2);
};

/// Tunnel and spin-orbit couplings in the valley eigenbasis,
/// t_{c,+-} = (t_c/2)(1 -+ e^{-i dphi}) and the analogous eta_2 pair.
struct DerivedCouplings {
  Complex tc_plus;
  Complex tc_minus;
  Complex eta2_plus;
  Complex eta2_minus;
};

/// 4x4 double-dot orbital Hamiltonian with one excited orbital per dot; every
/// left-right pair is coupled by t_c.
Matrix build_orbital_dqd(const OrbitalDqdParams& p);

/// 16x16 spin-valley-orbit Hamiltonian in basis {d, nu, s1, s2} =
/// {L,R} x {z,zt} x {up,down} x {up,down}. The static spin (s2) enters only
/// through its Zeeman term.
Matrix build_svo(const SvoParams& p, double eps_L, double eps_R);

/// 4x4 valley-orbit Hamiltonian in basis {d, nu}, detuning split
/// symmetrically (eps_L = +eps/2, eps_R = -eps/2).
Matrix build_valley_orbit(double eps, const SvoParams& p);

/// 8x8 orbital model extended with valley states, basis {d, n, nu}.
Matrix build_twovalley_orbital(const OrbitalDqdParams& p, const SvoParams& v);

/// Change of basis to the valley eigenbasis, B = sum_d k_d x B_d with the B_d
/// columns normalised to make B unitary. Accepts the 4x4 valley-orbit form or
/// the 16x16 spin-valley-orbit form (B extended by identity on both spins).
Matrix valley_eigenbasis_transform(const Matrix& H, double phi_L, double phi_R);
Matrix valley_eigenbasis_matrix(int dim, double phi_L, double phi_R);

DerivedCouplings derived_couplings(double t_c, double eta2, double dphi);

/// Valley phase difference above which the intra-valley gap closes past the
/// Zeeman energy, 2 acos(E_z / t_c). Empty when E_z >= t_c: no phase keeps
/// the levels separated.
std::optional<double> delta_phi_threshold(double t_c, double E_z);

/// Eigenvalues (and shuttled-spin <s_z> per level, for colouring) on a
/// detuning grid.
struct SpectrumTable {
  std::vector<double> eps;  // ueV, ascending
  RealMatrix energies;      // row per eps, column per level
  RealMatrix spin_z;        // same shape; zero when no spin operator given

  int levels() const { return static_cast<int>(energies.cols()); }
  void write_csv(std::ostream& os) const;
};

SpectrumTable spectrum_vs_detuning(const std::function<Matrix(double)>& builder,
                                   const std::vector<double>& eps_grid,
                                   const Matrix& spin_op = Matrix());

/// A local minimum of the gap between adjacent levels (level, level+1).
struct AntiCrossing {
  double eps;
  double gap;
  int level;
};

/// Interior local minima of adjacent-level gaps over the table's grid.
std::vector<AntiCrossing> find_anti_crossings(const SpectrumTable& table);

}  // namespace qds
