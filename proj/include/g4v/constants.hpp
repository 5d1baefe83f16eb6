#pragma once

#include <numbers>

namespace g4v {

namespace constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double hbar = 1.054571817e-34;               // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double speed_of_light = 2.99792458e8;        // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double boltzmann = 1.380649e-23;             // J/K
inline constexpr double debye = 3.33564e-30;                  // C m

inline constexpr double diamond_refractive_index = 2.4;

// S = 1/2, g = 2 electron spin and (unquenched) orbital moments [rad/s/T]
inline constexpr double gamma_spin = two_pi * 28.0e9;
inline constexpr double gamma_orbital = two_pi * 14.0e9;

}  // namespace constants

namespace units {

// angular frequency [rad/s] from ordinary frequency
inline constexpr double from_ghz(double f) { return constants::two_pi * 1e9 * f; }
inline constexpr double to_ghz(double w) { return w / (constants::two_pi * 1e9); }

inline constexpr double from_ns(double t) { return 1e-9 * t; }
inline constexpr double to_ns(double t) { return 1e9 * t; }
inline constexpr double from_ps(double t) { return 1e-12 * t; }
inline constexpr double to_ps(double t) { return 1e12 * t; }

inline constexpr double from_deg(double a) { return a * constants::pi / 180.0; }

}  // namespace units

}  // namespace g4v
