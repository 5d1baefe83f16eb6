#include "g4v/hyp2f1.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace g4v {

namespace {

constexpr int kMaxTerms = 4000;
constexpr double kTol = 1e-16;

// sum_k b/(b+k) z^k, |z| < 1
complexd series_direct(complexd b, complexd z) {
  complexd sum = 1.0;
  complexd zk = 1.0;
  for (int k = 1; k < kMaxTerms; ++k) {
    zk *= z;
    const complexd term = b / (b + static_cast<double>(k)) * zk;
    sum += term;
    if (std::abs(term) < kTol * std::abs(sum)) return sum;
  }
  throw std::runtime_error("hyp2f1_1b: direct series did not converge");
}

// (1-z)^{-1} sum_k k!/(b+1)_k w^k with w = z/(z-1)
complexd series_pfaff(complexd b, complexd z) {
  const complexd w = z / (z - 1.0);
  complexd term = 1.0;
  complexd sum = 1.0;
  for (int k = 1; k < kMaxTerms; ++k) {
    term *= static_cast<double>(k) / (b + static_cast<double>(k)) * w;
    sum += term;
    if (std::abs(term) < kTol * std::abs(sum)) return sum / (1.0 - z);
  }
  throw std::runtime_error("hyp2f1_1b: Pfaff series did not converge");
}

}  // namespace

complexd hyp2f1_1b(complexd b, double z) {
  if (z > 0) throw std::invalid_argument("hyp2f1_1b: implemented for z <= 0");
  const double az = -z;
  if (az <= 0.5) return series_direct(b, z);
  if (az <= 2.0) return series_pfaff(b, z);
  // inversion: F(b,z) = [b/(b-1)] (-z)^{-1} F(1-b, 1/z) + b pi/sin(pi b) (-z)^{-b}
  const complexd f_inv = series_direct(1.0 - b, 1.0 / z);
  const complexd pole = b * std::numbers::pi / std::sin(std::numbers::pi * b);
  return b / (b - 1.0) / (-z) * f_inv + pole * std::exp(-b * std::log(az));
}

complexd sech_osc_antiderivative(double sigma, double delta, double u) {
  if (!(sigma > 0)) throw std::invalid_argument("sech_osc_antiderivative: sigma must be > 0");
  const complexd b(0.5, 0.5 * delta / sigma);  // (sigma + i delta) / (2 sigma)
  const double x = 2.0 * sigma * u;
  if (u <= 0) {
    // e^{2 sigma b u} F(b, -e^{2 sigma u}) / (sigma b)
    return std::exp(b * x) * hyp2f1_1b(b, -std::exp(x)) / (sigma * b);
  }
  // rewritten through F(1-b, -e^{-2 sigma u}) so the prefactor stays bounded
  const complexd pole = std::numbers::pi / (sigma * std::sin(std::numbers::pi * b));
  return std::exp((b - 1.0) * x) * hyp2f1_1b(1.0 - b, -std::exp(-x)) / (sigma * (b - 1.0)) +
         pole;
}

}  // namespace g4v
