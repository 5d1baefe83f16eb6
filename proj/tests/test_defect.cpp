#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "g4v/constants.hpp"
#include "g4v/defect.hpp"

using namespace g4v;

namespace {

std::set<std::string> label_set(const std::vector<Transition>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.label());
  return out;
}

// smallest max-norm difference over a global phase, scanned on the unit circle
double phase_aligned_distance(const Vector3cd& a, const Vector3cd& b) {
  int imax = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(b[i]) > std::abs(b[imax])) imax = i;
  if (std::abs(a[imax]) < 1e-300) return (a - b).norm();
  complexd ph = b[imax] / a[imax];
  ph /= std::abs(ph);
  return (a * ph - b).norm();
}

}  // namespace

TEST_CASE("lab to defect frame field") {
  CHECK(lab_to_defect_field({0, 0}).norm() == 0.0);

  auto b = lab_to_defect_field({1, 0});
  CHECK(b.x() == doctest::Approx(std::cos(units::from_deg(54.7))).epsilon(1e-3));
  CHECK(b.y() == 0.0);
  CHECK(b.z() == doctest::Approx(std::sin(units::from_deg(54.7))).epsilon(1e-3));
  CHECK(b.x() == doctest::Approx(0.5779).epsilon(1e-3));
  CHECK(b.z() == doctest::Approx(0.8161).epsilon(1e-3));

  auto b2 = lab_to_defect_field({0, 1});
  CHECK(b2.x() == doctest::Approx(std::sin(units::from_deg(54.7))).epsilon(1e-12));
  CHECK(b2.y() == 0.0);
  CHECK(b2.z() == doctest::Approx(-std::cos(units::from_deg(54.7))).epsilon(1e-12));
}

TEST_CASE("hamiltonian blocks: hermiticity and zero-field spectrum") {
  for (auto model : {DefectModel::siv(), DefectModel::snv()}) {
    const Matrix8cd h = build_hamiltonian(model, {0, 0, 0});
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-14 * model.delta_es);

    auto es = solve_eigensystem(model, {});
    // each manifold pairwise degenerate, split by delta
    CHECK(std::abs(es.energies[1] - es.energies[0]) < 1e-9 * model.delta_gs);
    CHECK(std::abs(es.energies[3] - es.energies[2]) < 1e-9 * model.delta_gs);
    CHECK(std::abs(es.energies[2] - es.energies[0] - model.delta_gs) < 1e-9 * model.delta_gs);
    CHECK(std::abs(es.energies[6] - es.energies[4] - model.delta_es) < 1e-9 * model.delta_es);
    // block eigenvalues +- dE/2
    CHECK(es.energies[0] == doctest::Approx(-0.5 * model.delta_gs).epsilon(1e-12));
    CHECK(es.energies[7] == doctest::Approx(0.5 * model.delta_es).epsilon(1e-12));
    // eigenvectors orthonormal within manifolds
    for (int m = 0; m < 2; ++m) {
      Matrix4cd blk = es.states.block<4, 4>(4 * m, 4 * m);
      CHECK((blk.adjoint() * blk - Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("pure spin-orbit limit gives product eigenvectors") {
  auto model = DefectModel::siv();
  model.theta_g = model.theta_e = 0.0;
  const Matrix8cd h = build_hamiltonian(model, {0, 0, 0});
  // diagonal at B = 0 without JT
  Matrix8cd off = h;
  for (int i = 0; i < 8; ++i) off(i, i) = 0;
  CHECK(off.cwiseAbs().maxCoeff() == 0.0);
  auto v = jt_eigenvectors(model, Manifold::Ground);
  for (const auto& x : v) {
    double mx = 0;
    for (int i = 0; i < 4; ++i) mx = std::max(mx, std::abs(x[i]));
    CHECK(mx == doctest::Approx(1.0));  // a single basis component
  }
}

TEST_CASE("analytic JT eigenvectors") {
  auto model = DefectModel::snv();
  SUBCASE("theta = pi/2, phi = 0") {
    model.theta_g = constants::pi / 2;
    model.phi_g = 0;
    auto v = jt_eigenvectors(model, Manifold::Ground);
    Vector4cd expect(0, 1 / std::sqrt(2.0), 0, 1 / std::sqrt(2.0));
    CHECK((v[0] - expect).norm() < 1e-12);
  }
  SUBCASE("orthogonality and eigenvalue pairing for random angles") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ang(0.05, constants::pi - 0.05);
    std::uniform_real_distribution<double> ph(-constants::pi, constants::pi);
    for (int it = 0; it < 20; ++it) {
      model.theta_g = ang(rng);
      model.phi_g = ph(rng);
      auto v = jt_eigenvectors(model, Manifold::Ground);
      CHECK(std::abs(v[0].adjoint().dot(v[2].conjugate())) < 1e-12);
      const Matrix8cd h = build_hamiltonian(model, {0, 0, 0});
      const Matrix4cd hg = h.block<4, 4>(0, 0);
      for (int i : {0, 1})
        CHECK((hg * v[i] + 0.5 * model.delta_gs * v[i]).norm() < 1e-10 * model.delta_gs);
      for (int i : {2, 3})
        CHECK((hg * v[i] - 0.5 * model.delta_gs * v[i]).norm() < 1e-10 * model.delta_gs);
    }
  }
  SUBCASE("matches numerical diagonalization up to per-vector phase") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ang(0.05, constants::pi - 0.05);
    std::uniform_real_distribution<double> ph(-constants::pi, constants::pi);
    for (int it = 0; it < 10; ++it) {
      model.theta_g = ang(rng);
      model.theta_e = ang(rng);
      model.phi_g = ph(rng);
      model.phi_e = ph(rng);
      auto es = solve_eigensystem(model, {});
      for (int m = 0; m < 2; ++m) {
        auto v = jt_eigenvectors(model, m == 0 ? Manifold::Ground : Manifold::Excited);
        // each analytic vector must appear in the degenerate numerical pair span
        for (int i = 0; i < 4; ++i) {
          const int lo = i < 2 ? 0 : 2;
          Eigen::Matrix<complexd, 4, 2> pair = es.states.block<4, 2>(4 * m, 4 * m + lo);
          const Vector4cd proj = pair * (pair.adjoint() * v[i]);
          CHECK((proj - v[i]).norm() < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("bright transition sets at zero field") {
  SUBCASE("SiV") {
    auto es = solve_eigensystem(DefectModel::siv(), {});
    auto bright = label_set(es.bright_transitions(1e-12 / es.max_dipole_norm()));
    std::set<std::string> expect{"A1", "C1", "B2", "D2", "B3", "D3", "A4", "C4"};
    CHECK(bright == expect);
  }
  SUBCASE("SnV") {
    auto es = solve_eigensystem(DefectModel::snv(), {});
    auto bright = label_set(es.bright_transitions(1e-12 / es.max_dipole_norm()));
    std::set<std::string> expect{"A2", "C2", "B1", "D1", "B3", "D3", "A4", "C4"};
    CHECK(bright == expect);
  }
}

TEST_CASE("SnV reference dipoles: real x/z, imaginary y") {
  auto es = solve_eigensystem(DefectModel::snv(), {});
  for (const auto& t : es.bright_transitions()) {
    const auto& d = es.dipole(t);
    CHECK(std::abs(d[0].imag()) < 1e-12);
    CHECK(std::abs(d[1].real()) < 1e-12);
    CHECK(std::abs(d[2].imag()) < 1e-12);
  }
}

TEST_CASE("unmixed selection rules: pure z or pure circular") {
  auto model = DefectModel::siv();
  model.theta_g = model.theta_e = 1e-12;  // effectively no JT
  auto es = solve_eigensystem(model, {});
  for (const auto& t : es.bright_transitions(1e-9)) {
    const auto& d = es.dipole(t);
    const double zpart = std::abs(d[2]);
    const double cpart = std::hypot(std::abs(d[0]), std::abs(d[1]));
    CHECK((zpart < 1e-9 * cpart || cpart < 1e-9 * zpart));
  }
}

TEST_CASE("analytic dipoles match the numerical table") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> ang(0.05, constants::pi - 0.05);
  std::uniform_real_distribution<double> ph(-constants::pi, constants::pi);
  for (auto species : {Species::SiV, Species::SnV}) {
    for (int it = 0; it < 12; ++it) {
      auto model = DefectModel::make(species, 4.0);
      model.theta_g = ang(rng);
      model.theta_e = ang(rng);
      model.phi_g = ph(rng);
      model.phi_e = ph(rng);
      auto es = solve_eigensystem(model, {});
      auto ad = analytic_dipoles(model);
      const auto [leg1, leg2] = default_lambda_legs(species, true);
      const Transition c1{leg1.ground, 2};  // C partner of the first leg
      CHECK(phase_aligned_distance(es.dipole(leg1), ad.d1) < 1e-10);
      CHECK(phase_aligned_distance(es.dipole(c1), ad.d2) < 1e-10);
      CHECK(phase_aligned_distance(es.dipole(leg2), ad.d3) < 1e-10);
      CHECK(ad.d1.norm() > 1e-6);
      CHECK(ad.d2.norm() > 1e-6);
      CHECK(ad.d3.norm() > 1e-6);
    }
  }
}

TEST_CASE("zeeman limit continuity") {
  auto model = DefectModel::siv();
  auto es0 = solve_eigensystem(model, {});
  const MagneticField small{1e-6, 0.5e-6};
  auto es1 = solve_eigensystem(model, small);
  const Eigen::Vector3d bv = lab_to_defect_field(small);
  const Matrix8cd hz =
      build_hamiltonian(model, bv) - build_hamiltonian(model, {0, 0, 0});
  const double bound = hz.cwiseAbs().maxCoeff() * 8;
  for (int i = 0; i < 8; ++i) CHECK(std::abs(es1.energies[i] - es0.energies[i]) <= bound);
}

TEST_CASE("nonzero field lifts degeneracies and brightens all transitions") {
  auto model = DefectModel::snv();
  auto es = solve_eigensystem(model, {0.4, 0.3});
  CHECK(std::abs(es.energies[1] - es.energies[0]) > units::from_ghz(0.5));
  CHECK(es.bright_transitions(1e-6).size() == 16);
}

TEST_CASE("transition label round trip") {
  CHECK(Transition::parse("A1").label() == "A1");
  CHECK(Transition::parse("D4").label() == "D4");
  CHECK(Transition::parse("C2").ground == 1);
  CHECK(Transition::parse("C2").excited == 2);
  CHECK_THROWS(Transition::parse("E1"));
  CHECK_THROWS(Transition::parse("A5"));
}

TEST_CASE("model validation") {
  auto model = DefectModel::siv();
  model.tau = -1;
  CHECK_THROWS(model.validate());
  MagneticField f{10.0, 0};
  CHECK_THROWS(f.validate());
}
