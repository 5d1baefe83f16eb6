#include "g4v/pulse.hpp"

#include <cmath>
#include <stdexcept>

#include "g4v/constants.hpp"
#include "g4v/hyp2f1.hpp"

namespace g4v {

using namespace constants;

GateSpec design_cpt_gate(double phi, double theta_axis, double alpha_axis, double omega_eff,
                         double sigma_t0) {
  if (!(omega_eff > 0)) throw std::invalid_argument("design_cpt_gate: omega_eff must be > 0");
  if (phi == 0.0 || std::abs(phi) >= 2 * pi)
    throw std::invalid_argument("design_cpt_gate: phi must lie in (-2pi, 2pi), phi != 0");
  if (!(sigma_t0 > 0)) throw std::invalid_argument("design_cpt_gate: sigma_t0 must be > 0");

  GateSpec g;
  g.phi = phi;
  g.theta_axis = theta_axis;
  g.alpha_axis = alpha_axis;
  g.omega_eff = omega_eff;
  g.sigma = omega_eff;  // transitionless condition
  const double c = std::cos(0.5 * phi), s = std::sin(0.5 * phi);
  g.delta = std::abs(c) < 1e-12 ? 0.0 : g.sigma * c / s;
  g.t0 = sigma_t0 / g.sigma;
  g.gate_time = 2.0 * g.t0;
  return g;
}

Eigen::Matrix2cd db_transform(double theta_axis, double alpha_axis) {
  const double c = std::cos(0.5 * theta_axis), s = std::sin(0.5 * theta_axis);
  const complexd ea = std::exp(complexd(0.0, alpha_axis));
  Eigen::Matrix2cd r;
  r << c, -std::conj(ea) * s, ea * s, c;
  return r;
}

double theta_resonant(double t, double sigma, double t0) {
  if (!(sigma > 0)) throw std::invalid_argument("theta_resonant: sigma must be > 0");
  return 2.0 * (std::atan(std::exp(sigma * (t - t0))) - std::atan(std::exp(-sigma * t0)));
}

ThetaPair theta_offresonant(double t, double sigma, double delta, double t0) {
  if (!(sigma > 0)) throw std::invalid_argument("theta_offresonant: sigma must be > 0");
  ThetaPair out;
  const complexd phase = std::exp(complexd(0.0, delta * t0));
  for (int s = 0; s < 2; ++s) {
    const double d = s == 0 ? delta : -delta;
    const complexd g1 = sech_osc_antiderivative(sigma, d, t - t0);
    const complexd g0 = sech_osc_antiderivative(sigma, d, -t0);
    const complexd ph = s == 0 ? phase : std::conj(phase);
    (s == 0 ? out.plus : out.minus) = sigma * ph * (g1 - g0);
  }
  out.magnitude = std::abs(out.plus);
  return out;
}

double power_to_field(double power_w, double lambda0, double numerical_aperture) {
  if (power_w < 0) throw std::invalid_argument("power_to_field: power must be >= 0");
  const double w0 = lambda0 / (pi * numerical_aperture);
  return std::sqrt(2.0 * power_w /
                   (pi * w0 * w0 * speed_of_light * diamond_refractive_index *
                    vacuum_permittivity));
}

complexd rabi_from_field(double e0, complexd dipole_overlap, double alpha, double r0) {
  return alpha * elementary_charge * r0 * e0 / hbar * dipole_overlap;
}

double dipole_moment_debye(double alpha, double r0) {
  return alpha * elementary_charge * r0 / debye;
}

}  // namespace g4v
