#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <vector>

namespace g4v {

using complexd = std::complex<double>;
using Matrix4cd = Eigen::Matrix4cd;
using Matrix8cd = Eigen::Matrix<complexd, 8, 8>;
using Vector3cd = Eigen::Vector3cd;
using Vector4cd = Eigen::Vector4cd;

enum class Species { SiV, SnV };

std::string species_name(Species s);

/// Static parameters of one defect species. Energies are angular
/// frequencies [rad/s], times are seconds, angles radians.
struct DefectModel {
  Species species = Species::SiV;

  double delta_gs = 0;  // ground manifold splitting
  double delta_es = 0;  // excited manifold splitting
  double theta_g = 0;   // SO/JT mixing angle, ground
  double theta_e = 0;   // SO/JT mixing angle, excited
  double phi_g = 0;     // JT azimuthal phase, ground
  double phi_e = 0;     // JT azimuthal phase, excited

  double tau = 0;       // optical lifetime
  double t1_spin = 0;   // spin relaxation
  double t1_orbit = 0;  // orbital relaxation
  double t2_star = 0;   // dephasing
  double t1_spin_nonzero_field = 0;  // override applied whenever |B| > 0
  double temperature = 0;            // K

  double dipole_scale = 1;   // multiplicative Rabi factor (alpha)
  double r0 = 0;             // dipole length [m]
  double z_enhancement = 2;  // z-dipole enhancement
  double lambda0 = 0;        // central optical wavelength [m]

  double orbital_quench = 0.1;  // orbital Zeeman quenching factor

  void validate() const;  // throws std::invalid_argument on bad parameters

  static DefectModel siv(double temperature_k = 4.0);
  static DefectModel snv(double temperature_k = 6.0);
  static DefectModel make(Species s, double temperature_k);
};

/// Applied field in the lab (cryostat) frame. The sample tilt is the
/// angle between the defect symmetry axis [111] and the (100) surface.
struct MagneticField {
  double b_par = 0;   // along cryostat axis [T]
  double b_perp = 0;  // perpendicular [T]
  double tilt = 54.7 * 3.14159265358979323846 / 180.0;  // [111] vs (100) surface

  bool is_zero() const { return b_par == 0.0 && b_perp == 0.0; }
  void validate() const;
};

/// (B_x, B_y, B_z) in the defect frame; B_y = 0 by construction.
Eigen::Vector3d lab_to_defect_field(const MagneticField& field);

/// Ground/excited transition pair: excited 0..3 = A..D, ground 0..3 = 1..4.
struct Transition {
  int ground = 0;
  int excited = 0;
  std::string label() const;  // "A1", "C4", ...
  static Transition parse(const std::string& label);
  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Diagonalized 8-level system at one magnetic field. Levels 0..3 are the
/// ground manifold, 4..7 the excited manifold, each ascending in energy
/// (energies are manifold-centered; the optical carrier drops out of all
/// intra-manifold differences). At B = 0 the in-doublet order follows the
/// usual SiV/SnV level labeling so that transition names match convention.
struct EigenSystem {
  std::array<double, 8> energies{};
  Matrix8cd states;  // columns
  std::array<std::array<Vector3cd, 4>, 4> dipoles;  // [ground][excited]
  bool zero_field = false;

  const Vector3cd& dipole(const Transition& t) const {
    return dipoles[t.ground][t.excited];
  }
  double ground_energy(int i) const { return energies[i]; }
  double excited_energy(int i) const { return energies[4 + i]; }
  /// intra-manifold part of the transition frequency (excited minus ground)
  double transition_offset(const Transition& t) const {
    return excited_energy(t.excited) - ground_energy(t.ground);
  }
  double max_dipole_norm() const;
  std::vector<Transition> bright_transitions(double rel_threshold = 1e-6) const;
};

/// 8x8 Hermitian Hamiltonian, block-diagonal over the two manifolds:
/// per manifold JT + spin-orbit + Zeeman (spin gamma_s B.S plus quenched
/// orbital q gamma_L B_z L_z).
Matrix8cd build_hamiltonian(const DefectModel& model, const Eigen::Vector3d& b_defect);

EigenSystem solve_eigensystem(const DefectModel& model, const MagneticField& field);

enum class Manifold { Ground, Excited };

/// Closed-form zero-field eigenvectors of one manifold in the
/// (e+ up, e+ dn, e- up, e- dn) product basis, normalized.
/// v[0], v[1] belong to -dE/2 (spin dn, up), v[2], v[3] to +dE/2 (dn, up).
/// theta = 0 or pi is the unmixed limit and returns the product states.
std::array<Vector4cd, 4> jt_eigenvectors(const DefectModel& model, Manifold which);

/// Dipole table <psi_g| p_k |psi_x> for eigenvector columns of `states`;
/// z components carry the z-enhancement factor.
std::array<std::array<Vector3cd, 4>, 4> transition_dipoles(const Matrix8cd& states,
                                                           const DefectModel& model);

/// Closed-form zero-field dipoles of the Lambda set used at B = 0:
/// d1 couples the first leg, d2 its C-type leakage partner, d3 the second leg.
struct AnalyticDipoles {
  Vector3cd d1, d2, d3;
};
AnalyticDipoles analytic_dipoles(const DefectModel& model);

/// Default Lambda-system legs (first, second) per species and field regime.
std::pair<Transition, Transition> default_lambda_legs(Species s, bool zero_field);

}  // namespace g4v
