#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "g4v/defect.hpp"

namespace g4v {

enum class Plane { XZ, YZ };

std::string plane_name(Plane p);

/// Both in-plane components of the constraint dipole vanish; the caller
/// must pick the other plane.
struct DegeneratePlane : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The closed-form leakage-nulling coefficients blow up (c1 -> 0), e.g. at
/// phi_g = phi_e = 0. Fall back to the in-plane cross-talk solution.
struct SingularJTPhase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PolarizationSolution {
  Vector3cd e1, e2;   // unit polarization vectors of the two lasers
  std::string plane;  // "xz", "yz" or "xyz"
  /// (laser index 0/1, transition) pairs with exactly zero coupling
  std::vector<std::pair<int, Transition>> nulled;

  bool is_nulled(int laser, const Transition& t) const;
};

/// Polarization (complex) dot product; couplings are bilinear in e and d.
inline complexd pol_dot(const Vector3cd& e, const Vector3cd& d) {
  return (e.array() * d.array()).sum();
}

/// Each laser polarized in `plane`, orthogonal to the other leg's dipole:
/// cross-talk within the Lambda system vanishes identically.
PolarizationSolution solve_crosstalk_free(const EigenSystem& es,
                                          std::pair<Transition, Transition> legs, Plane plane);

/// Zero-field scheme where each laser is also orthogonal to the C-type
/// leakage partner of its own leg (full 3-vector polarizations). The
/// coefficients (1, c2, c3) of the first laser are reported alongside.
struct LeakageNullingSolution {
  PolarizationSolution pol;
  complexd c2, c3;
};
LeakageNullingSolution solve_leakage_nulling(const EigenSystem& es,
                                             std::pair<Transition, Transition> legs);

/// Selection-rules polarizations: z for the first leg, best circular for
/// the second. No engineered nulls.
PolarizationSolution naive_polarizations(const EigenSystem& es,
                                         std::pair<Transition, Transition> legs);

/// Leakage-nulling solution when available, otherwise the in-plane
/// cross-talk-free solution (the reference SnV model lands here, where the
/// yz solution nulls the C partners automatically).
PolarizationSolution orthogonal_polarizations(const EigenSystem& es,
                                              std::pair<Transition, Transition> legs, Plane plane,
                                              bool try_leakage_nulling);

/// Rabi frequency for every (laser, transition) pair:
/// Omega = alpha e r0 |E0| (e_l . d_t) / hbar, no RWA factor 1/2.
/// Entries for engineered nulls are exactly zero.
struct CouplingTable {
  std::array<std::array<std::array<complexd, 4>, 4>, 2> rabi{};  // [laser][ground][excited]
  complexd get(int laser, const Transition& t) const { return rabi[laser][t.ground][t.excited]; }
};
CouplingTable coupling_table(const PolarizationSolution& sol, const EigenSystem& es,
                             const DefectModel& model, double e01, double e02);

}  // namespace g4v
