#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fwlab/dirac_basis.hpp"
#include "fwlab/errors.hpp"
#include "fwlab/spin_dynamics.hpp"
#include "support/oracles.hpp"

using namespace fwlab;

namespace {
bool near(const Vec3& a, const Vec3& b, double tol) { return (a - b).norm() <= tol; }
}

TEST_SUITE("spin_dynamics") {

TEST_CASE("magnetic_moment_at_rest") {
  FieldConfig f;
  f.B = {0, 0, 0.7};
  f.a_mm = 0.00116;
  f.charge = -1.0;
  const Vec3 w = omega_total(Vec3::Zero(), 2.0, f);
  CHECK(near(w, Vec3{0, 0, -(-1.0 / 2.0) * (1 + 0.00116) * 0.7}, 1e-15));
}

TEST_CASE("electric_dipole_at_rest") {
  FieldConfig f;
  f.E = {0.4, 0, 0};
  f.eta = 0.3;
  CHECK(near(omega_edm(Vec3::Zero(), 1.5, f), Vec3{-0.3 * 0.4 / 3.0, 0, 0}, 1e-15));
  CHECK(near(omega_mdm(Vec3::Zero(), 1.5, f), Vec3::Zero(), 1e-15));
}

TEST_CASE("moving_particle_in_electric_field") {
  FieldConfig f;
  f.E = {0, 1.0, 0};
  CHECK(near(omega_total(Vec3{3, 0, 0}, 4.0, f), Vec3{0, 0, 1.0 / 15.0}, 1e-15));
}

TEST_CASE("spin_zero_has_no_precession_and_mass_must_be_positive") {
  FieldConfig f;
  f.B = {1, 2, 3};
  f.spin = SpinKind::spin0;
  CHECK(omega_total(Vec3{1, 0, 0}, 1.0, f).norm() == 0.0);
  f.spin = SpinKind::spin1;
  FieldConfig g = f;
  g.spin = SpinKind::spin_half;
  CHECK(near(omega_total(Vec3{1, 0, 0}, 1.0, f), omega_total(Vec3{1, 0, 0}, 1.0, g), 0.0));
  CHECK_THROWS_AS(omega_total(Vec3{1, 0, 0}, 0.0, g), DomainError);
  g.E(0) = std::nan("");
  CHECK_THROWS_AS(g.validate(), DomainError);
}

TEST_CASE("operator_block_reproduces_the_omega_vector") {
  std::mt19937_64 rng(37);
  for (int n = 0; n < 10; ++n) {
    FieldConfig f;
    f.E = test::random_vec(rng, 1.0);
    f.B = test::random_vec(rng, 1.0);
    f.a_mm = test::uniform(rng, -0.5, 2.0);
    f.eta = test::uniform(rng, -0.5, 0.5);
    const Vec3 p = test::random_vec(rng, 3.0);
    const ComplexMatrix h = spin_hamiltonian_fw(p, 1.3, f);
    CHECK(near(omega_from_block(h.topLeftCorner(2, 2)), omega_total(p, 1.3, f), 1e-13));
    CHECK((h * gammas().beta - gammas().beta * h).norm() < 1e-14);
  }
}

TEST_CASE("noninertial_examples") {
  FieldConfig f;
  f.frame_omega = {0.1, -0.2, 0.3};
  CHECK(near(omega_noninertial(Vec3::Zero(), 1.0, f), -f.frame_omega, 1e-15));
  f.frame_accel = {2, 0, 0};
  CHECK(near(omega_noninertial(Vec3{0.5, 0, 0}, 1.0, f), -f.frame_omega, 1e-15));
  f.frame_omega.setZero();
  const double q = 0.75, m = 1.0, eps = std::sqrt(m * m + q * q);
  CHECK(near(omega_noninertial(Vec3{0, q, 0}, m, f), Vec3{0, 0, 2 * q / (eps + m)}, 1e-15));
}

TEST_CASE("noninertial_operator_matches_classical") {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 20; ++n) {
    FieldConfig f;
    f.frame_accel = test::random_vec(rng, 2.0);
    f.frame_omega = test::random_vec(rng, 1.0);
    const Vec3 p = test::random_vec(rng, 4.0);
    const ComplexMatrix h = noninertial_spin_hamiltonian_fw(p, 0.8, f);
    CHECK(near(omega_from_block(h.topLeftCorner(2, 2)), omega_noninertial_classical(p, 0.8, f), 1e-12));
    CHECK(near(omega_noninertial(p, 0.8, f), omega_noninertial_classical(p, 0.8, f), 1e-13));
  }
}

TEST_CASE("classical_rotation_examples") {
  const Vec3 s0{1, 0, 0};
  CHECK(near(propagate_classical(s0, Vec3::Zero(), 3.0), s0, 0.0));
  CHECK(near(propagate_classical(Vec3{0, 0, 2}, Vec3{0, 0, 5}, 7.0), Vec3{0, 0, 2}, 1e-15));
  const double w0 = 1.7;
  CHECK(near(propagate_classical(s0, Vec3{0, 0, w0}, std::numbers::pi / (2 * w0)), Vec3{0, 1, 0}, 1e-15));
}

TEST_CASE("quantum_spinor_tracks_classical_rotation") {
  std::mt19937_64 rng(43);
  const Spinor up = spinor_along(Vec3{0, 0, 1});
  CHECK((propagate_quantum(up, Vec3::Zero(), 2.0) - up).norm() == 0.0);
  CHECK(near(spin_expectation(propagate_quantum(up, Vec3{0, 0, 3.0}, 2.0)), Vec3{0, 0, 1}, 1e-15));
  for (int n = 0; n < 20; ++n) {
    const Vec3 dir = test::random_vec(rng, 1.0).normalized();
    const Vec3 w = test::random_vec(rng, 2.0);
    const double t = test::uniform(rng, 0.0, 10.0);
    const Spinor chi = spinor_along(dir);
    CHECK(near(spin_expectation(chi), dir, 1e-15));
    CHECK(near(spin_expectation(propagate_quantum(chi, w, t)), propagate_classical(dir, w, t), 1e-12));
  }
  CHECK_THROWS_AS(propagate_quantum(Spinor(1.0, 1.0), Vec3{1, 0, 0}, 1.0), DomainError);
}

}
