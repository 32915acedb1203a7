#include <doctest.h>

#include "fwlab/errors.hpp"
#include "fwlab/linalg.hpp"

using namespace fwlab;

TEST_SUITE("linalg") {

TEST_CASE("commutator_of_pauli_like_matrices") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 0, 1, 1, 0;
  b << 0, -kI, kI, 0;
  ComplexMatrix c(2, 2);
  c << 1, 0, 0, -1;
  CHECK((linalg::commutator(a, b) - 2.0 * kI * c).norm() == doctest::Approx(0.0));
  CHECK(linalg::anticommutator(a, b).norm() == doctest::Approx(0.0));
  CHECK_THROWS_AS(linalg::commutator(a, ComplexMatrix::Identity(3, 3)), DimensionError);
}

TEST_CASE("hermitian_function_uses_real_spectrum") {
  ComplexMatrix m(2, 2);
  m << 5, 3, 3, 5;  // eigenvalues 2, 8
  const ComplexMatrix r = linalg::sqrt_psd(m);
  CHECK((r * r - m).norm() < 1e-13);
  CHECK(linalg::is_hermitian(r));
  const ComplexMatrix ir = linalg::inv_sqrt_pd(m);
  CHECK((ir * m * ir - ComplexMatrix::Identity(2, 2)).norm() < 1e-13);
}

TEST_CASE("sqrt_of_negative_matrix_is_a_branch_error") {
  ComplexMatrix m = -ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(linalg::sqrt_psd(m), BranchError);
}

TEST_CASE("non_normal_input_is_rejected") {
  ComplexMatrix n(2, 2);
  n << 0, 1, 0, 0;
  CHECK_THROWS_AS(linalg::mat_fn(n, [](Complex z) { return z * z; }), NonNormalError);
}

TEST_CASE("unitary_normal_matrix_function") {
  ComplexMatrix u(2, 2);
  u << 0, 1, -1, 0;  // eigenvalues +-i
  const ComplexMatrix sq = linalg::mat_fn(u, [](Complex z) { return z * z; });
  CHECK((sq + ComplexMatrix::Identity(2, 2)).norm() < 1e-13);
}

TEST_CASE("mat_exp_spectral_and_pade_routes_agree") {
  ComplexMatrix h(3, 3);
  h << 1, 0.5, 0, 0.5, -2, kI, 0, -kI, 0.3;
  const ComplexMatrix e1 = linalg::mat_exp(h, 0.7);
  CHECK(linalg::is_unitary(e1));
  // A tiny anti-Hermitian perturbation sends the call down the general route.
  ComplexMatrix g = h;
  g(0, 2) += 1e-6;
  const ComplexMatrix e2 = linalg::mat_exp(g, 0.7);
  CHECK((e1 - e2).norm() < 1e-5);
  CHECK(linalg::mat_exp(h, 0.0).isIdentity(1e-14));
}

TEST_CASE("mat_exp_refuses_huge_phases") {
  ComplexMatrix h = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(linalg::mat_exp(h, 1e9), OverflowError);
}

TEST_CASE("spectral_norm_and_eigenvalues") {
  ComplexMatrix m(2, 2);
  m << 2, 0, 0, -3;
  CHECK(linalg::spectral_norm(m) == doctest::Approx(3.0));
  const auto ev = linalg::hermitian_eigenvalues(m);
  CHECK(ev(0) == doctest::Approx(-3.0));
  CHECK(ev(1) == doctest::Approx(2.0));
}

TEST_CASE("power_law_fit_recovers_exponent") {
  std::vector<double> x{1e-3, 1e-2, 1e-1}, y;
  for (double v : x) y.push_back(3.0 * v * v);
  const auto fit = linalg::fit_power_law(x, y);
  CHECK(fit.exponent == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.prefactor == doctest::Approx(3.0).epsilon(1e-10));
  CHECK_THROWS_AS(linalg::fit_power_law({1.0}, {1.0}), DimensionError);
  CHECK_THROWS_AS(linalg::fit_power_law({1.0, -1.0}, {1.0, 1.0}), DomainError);
}

}
