#include "g4v/defect.hpp"

#include <cmath>
#include <stdexcept>

#include "g4v/constants.hpp"

namespace g4v {

using namespace constants;

std::string species_name(Species s) { return s == Species::SiV ? "SiV" : "SnV"; }

void DefectModel::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0)) throw std::invalid_argument(std::string("DefectModel: ") + name + " must be > 0");
  };
  positive(delta_gs, "delta_gs");
  positive(delta_es, "delta_es");
  positive(tau, "tau");
  positive(t1_spin, "t1_spin");
  positive(t1_orbit, "t1_orbit");
  positive(t2_star, "t2_star");
  positive(temperature, "temperature");
  positive(r0, "r0");
  positive(lambda0, "lambda0");
  if (!(theta_g >= 0 && theta_g <= pi) || !(theta_e >= 0 && theta_e <= pi))
    throw std::invalid_argument("DefectModel: mixing angles must lie in [0, pi]");
}

namespace {

// Default SO/JT decomposition: excited-manifold mixing twice the ground one,
// calibrated so the off-leg dipole ratio |<px>_A1 / <pz>_A1| is 0.1.
// With t = tan(theta_g/2) and tan(theta_e/2) = 2t this solves
// 3t = 0.2 (1 + 2 t^2).
void set_default_jt_angles(DefectModel& m) {
  const double t = (3.0 - std::sqrt(8.68)) / 0.8;
  m.theta_g = 2.0 * std::atan(t);
  m.theta_e = 2.0 * std::atan(2.0 * t);
  m.phi_g = m.phi_e = 0.0;
}

}  // namespace

DefectModel DefectModel::siv(double temperature_k) {
  DefectModel m;
  m.species = Species::SiV;
  m.delta_gs = units::from_ghz(50.0);
  m.delta_es = units::from_ghz(260.0);
  set_default_jt_angles(m);
  m.tau = 4.5e-9;
  m.t1_spin = 2.4e-3;   // 4 K
  m.t1_orbit = 38e-9;
  m.t2_star = 35e-9;
  m.t1_spin_nonzero_field = 300e-9;
  m.temperature = temperature_k;
  m.dipole_scale = 6.663;
  m.r0 = 0.53e-10;
  m.z_enhancement = 2.0;
  m.lambda0 = 736e-9;
  return m;
}

DefectModel DefectModel::snv(double temperature_k) {
  DefectModel m;
  m.species = Species::SnV;
  m.delta_gs = units::from_ghz(825.0);
  m.delta_es = units::from_ghz(3000.0);
  set_default_jt_angles(m);
  m.tau = 4.5e-9;
  if (temperature_k < 4.5) {
    m.t1_spin = 10.2e-3;  // 3 K
    m.t2_star = 540e-9;
  } else {
    m.t1_spin = 1.26e-3;  // 6 K
    m.t2_star = 59e-9;
  }
  m.t1_orbit = 38e-9;
  m.t1_spin_nonzero_field = 150e-9;
  m.temperature = temperature_k;
  m.dipole_scale = 3.3;
  m.r0 = 0.53e-10;
  m.z_enhancement = 2.0;
  m.lambda0 = 620e-9;
  return m;
}

DefectModel DefectModel::make(Species s, double temperature_k) {
  return s == Species::SiV ? siv(temperature_k) : snv(temperature_k);
}

void MagneticField::validate() const {
  if (std::abs(b_par) > 9.0) throw std::invalid_argument("MagneticField: |b_par| > 9 T");
  if (std::abs(b_perp) > 3.0) throw std::invalid_argument("MagneticField: |b_perp| > 3 T");
}

Eigen::Vector3d lab_to_defect_field(const MagneticField& f) {
  const double c = std::cos(f.tilt), s = std::sin(f.tilt);
  return {f.b_par * c + f.b_perp * s, 0.0, f.b_par * s - f.b_perp * c};
}

std::string Transition::label() const {
  std::string out;
  out += static_cast<char>('A' + excited);
  out += static_cast<char>('1' + ground);
  return out;
}

Transition Transition::parse(const std::string& label) {
  if (label.size() != 2 || label[0] < 'A' || label[0] > 'D' || label[1] < '1' || label[1] > '4')
    throw std::invalid_argument("Transition: bad label '" + label + "' (expected e.g. \"A1\")");
  return {label[1] - '1', label[0] - 'A'};
}

namespace {

// Manifold basis: |e+ up>, |e+ dn>, |e- up>, |e- dn>.
Matrix4cd manifold_block(double de, double theta, double phi, const Eigen::Vector3d& b,
                         double quench) {
  const double lam = de * std::cos(theta);
  const double q_jt = 0.5 * de * std::sin(theta);
  Matrix4cd h = Matrix4cd::Zero();

  // spin-orbit -(lam/2) Lz Sz with Lz = diag(1,-1), Sz = diag(1,-1)
  h(0, 0) = -0.5 * lam;
  h(1, 1) = 0.5 * lam;
  h(2, 2) = 0.5 * lam;
  h(3, 3) = -0.5 * lam;

  // JT orbital mixing, spin-diagonal
  const complexd jt = -q_jt * std::exp(complexd(0.0, phi));
  h(0, 2) = jt;
  h(1, 3) = jt;
  h(2, 0) = std::conj(jt);
  h(3, 1) = std::conj(jt);

  // spin Zeeman gamma_s B.S with S = sigma/2
  const double gz = 0.5 * gamma_spin * b.z();
  const complexd gxy = 0.5 * gamma_spin * complexd(b.x(), -b.y());
  h(0, 0) += gz;
  h(1, 1) -= gz;
  h(2, 2) += gz;
  h(3, 3) -= gz;
  h(0, 1) += gxy;
  h(1, 0) += std::conj(gxy);
  h(2, 3) += gxy;
  h(3, 2) += std::conj(gxy);

  // quenched orbital Zeeman q gamma_L Bz Lz
  const double oz = quench * gamma_orbital * b.z();
  h(0, 0) += oz;
  h(1, 1) += oz;
  h(2, 2) -= oz;
  h(3, 3) -= oz;
  return h;
}

void phase_fix(Eigen::Ref<Vector4cd> v) {
  int imax = 0;
  double best = 0;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(v[i]) > best + 1e-15) {
      best = std::abs(v[i]);
      imax = i;
    }
  }
  const complexd c = v[imax];
  if (std::abs(c) > 0) v *= std::conj(c) / std::abs(c);
}

// in-doublet spin order (sign of <sigma_z>) reproducing the conventional
// level labels of the two defects at zero field
std::array<int, 4> spin_order(Species s, Manifold m) {
  if (m == Manifold::Excited) return {-1, +1, -1, +1};  // A..D, both species
  if (s == Species::SiV) return {-1, +1, +1, -1};       // |1>..|4>
  return {+1, -1, +1, -1};
}

}  // namespace

Matrix8cd build_hamiltonian(const DefectModel& model, const Eigen::Vector3d& b_defect) {
  Matrix8cd h = Matrix8cd::Zero();
  h.block<4, 4>(0, 0) =
      manifold_block(model.delta_gs, model.theta_g, model.phi_g, b_defect, model.orbital_quench);
  h.block<4, 4>(4, 4) =
      manifold_block(model.delta_es, model.theta_e, model.phi_e, b_defect, model.orbital_quench);
  return h;
}

std::array<Vector4cd, 4> jt_eigenvectors(const DefectModel& model, Manifold which) {
  const double theta = which == Manifold::Ground ? model.theta_g : model.theta_e;
  const double phi = which == Manifold::Ground ? model.phi_g : model.phi_e;
  std::array<Vector4cd, 4> v;
  const double c2 = std::cos(0.5 * theta), s2 = std::sin(0.5 * theta);
  if (s2 < 1e-9) {  // pure SO limit
    v[0] = Vector4cd(0, 0, 0, 1);   // |e- dn>
    v[1] = Vector4cd(1, 0, 0, 0);   // |e+ up>
    v[2] = Vector4cd(0, 1, 0, 0);   // |e+ dn>
    v[3] = Vector4cd(0, 0, 1, 0);   // |e- up>
    return v;
  }
  if (c2 < 1e-9) {  // inverted SO limit
    v[0] = Vector4cd(0, 1, 0, 0);
    v[1] = Vector4cd(0, 0, 1, 0);
    v[2] = Vector4cd(0, 0, 0, 1);
    v[3] = Vector4cd(1, 0, 0, 0);
    return v;
  }
  const complexd ph = std::exp(complexd(0.0, phi));
  const double t = s2 / c2, ct = c2 / s2;
  v[0] = Vector4cd(0, ph * t, 0, 1);    // -dE/2, spin dn
  v[1] = Vector4cd(ph * ct, 0, 1, 0);   // -dE/2, spin up
  v[2] = Vector4cd(0, -ph * ct, 0, 1);  // +dE/2, spin dn
  v[3] = Vector4cd(-ph * t, 0, 1, 0);   // +dE/2, spin up
  for (auto& x : v) x.normalize();
  return v;
}

std::array<std::array<Vector3cd, 4>, 4> transition_dipoles(const Matrix8cd& states,
                                                           const DefectModel& model) {
  // p_z couples same-helicity orbitals (with the z enhancement), p_x +- i p_y
  // raise/lower the orbital helicity between the manifolds.
  std::array<std::array<Vector3cd, 4>, 4> table;
  const double zeta = model.z_enhancement;
  for (int g = 0; g < 4; ++g) {
    for (int x = 0; x < 4; ++x) {
      const auto& vg = states.col(g);
      const auto& vx = states.col(4 + x);
      complexd dx = 0, dy = 0, dz = 0;
      for (int s = 0; s < 2; ++s) {
        const complexd gp = std::conj(vg[0 + s]);  // <e+ s|
        const complexd gm = std::conj(vg[2 + s]);  // <e- s|
        const complexd up = vx[4 + 0 + s];
        const complexd um = vx[4 + 2 + s];
        dx += gm * up + gp * um;
        dy += complexd(0, 1) * gm * up - complexd(0, 1) * gp * um;
        dz += zeta * (gp * up + gm * um);
      }
      table[g][x] = Vector3cd(dx, dy, dz);
    }
  }
  return table;
}

EigenSystem solve_eigensystem(const DefectModel& model, const MagneticField& field) {
  model.validate();
  field.validate();
  const Eigen::Vector3d bv = lab_to_defect_field(field);
  const Matrix8cd h = build_hamiltonian(model, bv);

  EigenSystem es;
  es.zero_field = field.is_zero();
  es.states.setZero();

  for (int m = 0; m < 2; ++m) {
    const Matrix4cd block = h.block<4, 4>(4 * m, 4 * m);
    Eigen::SelfAdjointEigenSolver<Matrix4cd> solver(block);
    Eigen::Vector4d w = solver.eigenvalues();
    Matrix4cd v = solver.eigenvectors();

    if (es.zero_field) {
      // Kramers doublets: disentangle each degenerate pair into pure spin
      // states ([H, Sz] = 0 at B = 0), then order per the conventional labels.
      const Eigen::Vector4d sz(1, -1, 1, -1);
      const auto order = spin_order(model.species, m == 0 ? Manifold::Ground : Manifold::Excited);
      for (int pair = 0; pair < 2; ++pair) {
        const int i0 = 2 * pair;
        Eigen::Matrix2cd msz;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            msz(a, b) = (v.col(i0 + a).conjugate().array() * sz.array().cast<complexd>() *
                         v.col(i0 + b).array())
                            .sum();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> szsol(msz);
        Eigen::Matrix<complexd, 4, 2> rotated =
            v.block<4, 2>(0, i0) * szsol.eigenvectors();  // columns: spin dn, spin up
        const int want_first = order[i0];                 // -1 dn, +1 up
        if (want_first < 0) {
          v.col(i0) = rotated.col(0);
          v.col(i0 + 1) = rotated.col(1);
        } else {
          v.col(i0) = rotated.col(1);
          v.col(i0 + 1) = rotated.col(0);
        }
      }
    }
    for (int i = 0; i < 4; ++i) {
      Vector4cd col = v.col(i);
      phase_fix(col);
      es.states.block<4, 1>(4 * m, 4 * m + i) = col;
      es.energies[4 * m + i] = w[i];
    }
  }
  es.dipoles = transition_dipoles(es.states, model);
  return es;
}

double EigenSystem::max_dipole_norm() const {
  double best = 0;
  for (const auto& row : dipoles)
    for (const auto& d : row) best = std::max(best, d.norm());
  return best;
}

std::vector<Transition> EigenSystem::bright_transitions(double rel_threshold) const {
  const double cut = rel_threshold * max_dipole_norm();
  std::vector<Transition> out;
  for (int g = 0; g < 4; ++g)
    for (int x = 0; x < 4; ++x)
      if (dipoles[g][x].norm() > cut) out.push_back({g, x});
  return out;
}

AnalyticDipoles analytic_dipoles(const DefectModel& model) {
  // <v1g|p|v1e>, <v1g|p|v3e>, <v3g|p|v1e> evaluated in closed form; these are
  // the first Lambda leg, its C-type leakage partner and the second leg.
  if (std::min({std::sin(0.5 * model.theta_g), std::cos(0.5 * model.theta_g),
                std::sin(0.5 * model.theta_e), std::cos(0.5 * model.theta_e)}) < 1e-9)
    throw std::domain_error("analytic_dipoles: singular at theta = 0 or pi; use the numerical table");
  const double tg = std::tan(0.5 * model.theta_g), te = std::tan(0.5 * model.theta_e);
  const double cg = 1.0 / tg, ce = 1.0 / te;
  const complexd ag = std::exp(complexd(0.0, -model.phi_g));  // conjugated bra phase
  const complexd be = std::exp(complexd(0.0, model.phi_e));
  const double zeta = model.z_enhancement;
  const double n1g = std::cos(0.5 * model.theta_g), n3g = std::sin(0.5 * model.theta_g);
  const double n1e = std::cos(0.5 * model.theta_e), n3e = std::sin(0.5 * model.theta_e);

  AnalyticDipoles out;
  out.d1 = n1g * n1e *
           Vector3cd(be * te + ag * tg, complexd(0, 1) * (be * te - ag * tg),
                     zeta * (1.0 + ag * be * tg * te));
  out.d2 = n1g * n3e *
           Vector3cd(ag * tg - be * ce, complexd(0, -1) * (ag * tg + be * ce),
                     zeta * (1.0 - ag * be * tg * ce));
  out.d3 = n3g * n1e *
           Vector3cd(be * te - ag * cg, complexd(0, 1) * (be * te + ag * cg),
                     zeta * (1.0 - ag * be * cg * te));
  return out;
}

std::pair<Transition, Transition> default_lambda_legs(Species s, bool zero_field) {
  if (zero_field) {
    if (s == Species::SiV) return {Transition::parse("A1"), Transition::parse("A4")};
    return {Transition::parse("A2"), Transition::parse("A4")};
  }
  if (s == Species::SiV) return {Transition::parse("A1"), Transition::parse("A2")};
  return {Transition::parse("A1"), Transition::parse("A3")};
}

}  // namespace g4v
