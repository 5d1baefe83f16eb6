#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>

namespace g4v {

using complexd = std::complex<double>;

/// Sech-pulse CPT gate: rotation angle phi about the axis
/// n = (sin theta cos alpha, sin theta sin alpha, cos theta), realized by a
/// transitionless sech pulse (bandwidth = effective Rabi frequency) with
/// two-photon detuning delta = sigma / tan(phi/2).
struct GateSpec {
  double phi = 0;         // rotation angle [rad]
  double theta_axis = 0;  // axis polar angle
  double alpha_axis = 0;  // axis azimuth
  double sigma = 0;       // bandwidth [rad/s]
  double delta = 0;       // two-photon detuning [rad/s]
  double omega_eff = 0;   // effective Rabi frequency (= sigma)
  double t0 = 0;          // pulse center [s]
  double gate_time = 0;   // T = 2 t0
};

GateSpec design_cpt_gate(double phi, double theta_axis, double alpha_axis, double omega_eff,
                         double sigma_t0 = 6.0);

/// Dark-bright transformation of the qubit pair (Rabi-ratio parameterized
/// by the axis angles). Columns of the adjoint are the dark and bright
/// superpositions in the original basis.
Eigen::Matrix2cd db_transform(double theta_axis, double alpha_axis);

/// Resonant pulse area int_0^t sigma sech(sigma(t'-t0)) dt'.
double theta_resonant(double t, double sigma, double t0);

/// Off-resonant pulse areas theta_pm(t) = int_0^t sigma sech(sigma(t'-t0)) e^{+-i delta t'} dt'
/// evaluated in closed form (Gauss 2F1); the pair is complex conjugate.
struct ThetaPair {
  complexd plus, minus;
  double magnitude;  // |theta_plus| = |theta_minus|
};
ThetaPair theta_offresonant(double t, double sigma, double delta, double t0);

/// Peak field from laser power, Gaussian spot w0 = lambda0 / (pi NA), in diamond.
double power_to_field(double power_w, double lambda0, double numerical_aperture);

/// Omega = alpha e r0 |E0| <p> / hbar, no RWA factor 1/2.
complexd rabi_from_field(double e0, complexd dipole_overlap, double alpha, double r0);

/// alpha e r0 expressed in Debye.
double dipole_moment_debye(double alpha, double r0);

struct SechEnvelope {
  double sigma = 0;
  double t0 = 0;
  double operator()(double t) const { return 1.0 / std::cosh(sigma * (t - t0)); }
};

/// Additive corrective envelopes riding on one laser at its own carrier:
/// in-phase g1(t) cos(w t) and quadrature g2(t) sin(w t).
struct EnvelopeModulation {
  std::function<double(double)> in_phase;
  std::function<double(double)> quadrature;
};

/// One driving laser: polarization, carrier detuning from its Lambda leg,
/// field amplitude and the (possibly corrected) envelope.
struct LaserField {
  Eigen::Vector3cd polarization;
  double detuning = 0;       // [rad/s]
  double amplitude = 0;      // E0 [V/m]
  double carrier_phase = 0;  // [rad]
  SechEnvelope envelope;
  std::optional<EnvelopeModulation> modulation;

  /// rotating-frame complex envelope f(t) + g1(t) - i g2(t)
  complexd complex_envelope(double t) const {
    const double f = envelope(t);
    if (!modulation) return f;
    return complexd(f + modulation->in_phase(t), -modulation->quadrature(t));
  }
};

}  // namespace g4v
