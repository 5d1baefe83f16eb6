#include "g4v/polarization.hpp"

#include <cmath>

#include "g4v/constants.hpp"

namespace g4v {

namespace {

void phase_fix_first_nonzero(Vector3cd& v) {
  const double scale = v.norm();
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v[i]) > 1e-12 * scale) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      return;
    }
  }
}

// scan all transitions and record exact nulls of each laser
std::vector<std::pair<int, Transition>> scan_nulls(const Vector3cd& e1, const Vector3cd& e2,
                                                   const EigenSystem& es) {
  std::vector<std::pair<int, Transition>> out;
  const double ref = es.max_dipole_norm();
  for (int l = 0; l < 2; ++l) {
    const Vector3cd& e = l == 0 ? e1 : e2;
    for (int g = 0; g < 4; ++g)
      for (int x = 0; x < 4; ++x) {
        const Vector3cd& d = es.dipoles[g][x];
        if (d.norm() < 1e-12 * ref) continue;  // dark anyway
        if (std::abs(pol_dot(e, d)) < 1e-12 * d.norm()) out.push_back({l, Transition{g, x}});
      }
  }
  return out;
}

// bilinear cross product: (a x b) . a = (a x b) . b = 0 without conjugation
Vector3cd bilinear_cross(const Vector3cd& a, const Vector3cd& b) {
  return Vector3cd(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                   a[0] * b[1] - a[1] * b[0]);
}

Vector3cd in_plane_null(const Vector3cd& d, Plane plane, const char* what) {
  const int i0 = plane == Plane::XZ ? 0 : 1;
  const int i1 = 2;
  if (std::max(std::abs(d[i0]), std::abs(d[i1])) < 1e-12 * d.norm())
    throw DegeneratePlane(std::string("both in-plane components of ") + what +
                          " vanish in the " + (plane == Plane::XZ ? "xz" : "yz") + " plane");
  Vector3cd e = Vector3cd::Zero();
  e[i0] = d[i1];
  e[i1] = -d[i0];
  e.normalize();
  phase_fix_first_nonzero(e);
  return e;
}

}  // namespace

std::string plane_name(Plane p) { return p == Plane::XZ ? "xz" : "yz"; }

bool PolarizationSolution::is_nulled(int laser, const Transition& t) const {
  for (const auto& [l, tr] : nulled)
    if (l == laser && tr == t) return true;
  return false;
}

PolarizationSolution solve_crosstalk_free(const EigenSystem& es,
                                          std::pair<Transition, Transition> legs, Plane plane) {
  const Vector3cd& d1 = es.dipole(legs.first);
  const Vector3cd& d2 = es.dipole(legs.second);
  if (d1.norm() < 1e-14 || d2.norm() < 1e-14)
    throw std::invalid_argument("solve_crosstalk_free: a Lambda leg dipole vanishes");
  PolarizationSolution sol;
  sol.e1 = in_plane_null(d2, plane, legs.second.label().c_str());
  sol.e2 = in_plane_null(d1, plane, legs.first.label().c_str());
  sol.plane = plane_name(plane);
  sol.nulled = scan_nulls(sol.e1, sol.e2, es);
  return sol;
}

LeakageNullingSolution solve_leakage_nulling(const EigenSystem& es,
                                             std::pair<Transition, Transition> legs) {
  if (!es.zero_field)
    throw std::invalid_argument("solve_leakage_nulling: requires the zero-field eigensystem");
  // C partners live in the upper excited doublet (third excited level)
  const Transition c_first{legs.first.ground, 2};
  const Transition c_second{legs.second.ground, 2};

  const Vector3cd n1 = bilinear_cross(es.dipole(c_first), es.dipole(legs.second));
  const Vector3cd n2 = bilinear_cross(es.dipole(c_second), es.dipole(legs.first));
  if (std::abs(n1[0]) < 1e-9 * n1.norm() || std::abs(n2[0]) < 1e-9 * n2.norm())
    throw SingularJTPhase(
        "leakage-nulling coefficients singular (c1 -> 0): the constraints are degenerate, "
        "use the in-plane cross-talk solution");

  LeakageNullingSolution out;
  out.c2 = n1[1] / n1[0];
  out.c3 = n1[2] / n1[0];
  out.pol.e1 = n1.normalized();
  out.pol.e2 = n2.normalized();
  phase_fix_first_nonzero(out.pol.e1);
  phase_fix_first_nonzero(out.pol.e2);
  out.pol.plane = "xyz";
  out.pol.nulled = scan_nulls(out.pol.e1, out.pol.e2, es);
  return out;
}

PolarizationSolution naive_polarizations(const EigenSystem& es,
                                         std::pair<Transition, Transition> legs) {
  PolarizationSolution sol;
  sol.e1 = Vector3cd(0, 0, 1);
  const Vector3cd plus = Vector3cd(1, complexd(0, 1), 0) / std::sqrt(2.0);
  const Vector3cd minus = Vector3cd(1, complexd(0, -1), 0) / std::sqrt(2.0);
  const Vector3cd& d = es.dipole(legs.second);
  sol.e2 = std::abs(pol_dot(plus, d)) >= std::abs(pol_dot(minus, d)) ? plus : minus;
  sol.plane = "selection-rules";
  return sol;
}

PolarizationSolution orthogonal_polarizations(const EigenSystem& es,
                                              std::pair<Transition, Transition> legs, Plane plane,
                                              bool try_leakage_nulling) {
  if (try_leakage_nulling && es.zero_field) {
    try {
      return solve_leakage_nulling(es, legs).pol;
    } catch (const SingularJTPhase&) {
      // degenerate constraints: the in-plane solution already nulls the C
      // partners (reference JT phases)
    }
  }
  return solve_crosstalk_free(es, legs, plane);
}

CouplingTable coupling_table(const PolarizationSolution& sol, const EigenSystem& es,
                             const DefectModel& model, double e01, double e02) {
  CouplingTable table;
  const double prefactor =
      model.dipole_scale * constants::elementary_charge * model.r0 / constants::hbar;
  for (int l = 0; l < 2; ++l) {
    const Vector3cd& e = l == 0 ? sol.e1 : sol.e2;
    const double amp = l == 0 ? e01 : e02;
    for (int g = 0; g < 4; ++g)
      for (int x = 0; x < 4; ++x) {
        if (sol.is_nulled(l, Transition{g, x})) {
          table.rabi[l][g][x] = 0.0;
          continue;
        }
        table.rabi[l][g][x] = prefactor * amp * pol_dot(e, es.dipoles[g][x]);
      }
  }
  return table;
}

}  // namespace g4v
