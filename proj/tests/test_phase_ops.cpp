#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fwlab/dirac_basis.hpp"
#include "fwlab/errors.hpp"
#include "fwlab/phase_ops.hpp"
#include "support/oracles.hpp"

using namespace fwlab;

namespace {
ComplexMatrix I4() { return ComplexMatrix::Identity(4, 4); }
}

TEST_SUITE("phase_ops") {

TEST_CASE("canonical_commutator_of_position_and_momentum") {
  const Vec3 p{0.3, -1.2, 2.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto x = build_operator(Family::fw_position, Rep::fw, 1.0, i);
      const auto q = build_operator(Family::momentum, Rep::fw, 1.0, j);
      const PhaseOpValue v = op_commutator(x, q, p);
      const Complex expect = i == j ? kI : Complex(0.0);
      CHECK((v.a - expect * I4()).norm() < 1e-15);
      for (int k = 0; k < 3; ++k) CHECK(v.b[k].norm() < 1e-15);
    }
}

TEST_CASE("jet_commutator_agrees_with_finite_difference_oracle") {
  std::mt19937_64 rng(3);
  const double m = 0.8;
  const auto h = build_operator(Family::dirac_hamiltonian, Rep::dirac, m);
  for (int n = 0; n < 10; ++n) {
    const Vec3 p = test::random_vec(rng, 3.0);
    for (int k = 0; k < 3; ++k) {
      const auto x = build_operator(Family::nw_position_dirac, Rep::dirac, m, k);
      const auto kb = build_operator(Family::boost_dirac, Rep::dirac, m, k);
      const auto ad = op_commutator(x, h, p);
      CHECK((ad.a - test::fd_commutator_a(x, h, p)).norm() < 1e-7);
      const auto ad2 = op_commutator(kb, h, p);
      CHECK((ad2.a - test::fd_commutator_a(kb, h, p)).norm() < 1e-7);
    }
  }
}

TEST_CASE("free_fw_unitary_operator_matches_matrix") {
  const Vec3 p{1.0, 0.5, -0.25};
  const auto u = evaluate(fw_unitary_free(1.5), p).a;
  const auto ui = evaluate(fw_unitary_free_inverse(1.5), p).a;
  CHECK((u - free_fw_unitary(p, 1.5)).norm() < 1e-14);
  CHECK((u * ui - I4()).norm() < 1e-14);
}

TEST_CASE("conjugate_rejects_a_wrong_inverse") {
  const auto u = fw_unitary_free(1.0);
  const auto op = conjugate(build_operator(Family::fw_spin, Rep::fw, 1.0, 2), u, u);
  CHECK_THROWS_AS(evaluate(op, Vec3{1.0, 0.0, 0.0}), NotUnitaryError);
}

TEST_CASE("hermitian_operators_have_zero_residual") {
  std::mt19937_64 rng(5);
  const Vec3 p = test::random_vec(rng, 2.0);
  for (Family f : {Family::nw_position_dirac, Family::boost_dirac, Family::com_position_dirac,
                   Family::projected_position_dirac, Family::mean_spin_dirac})
    for (int k = 0; k < 3; ++k)
      CHECK(hermiticity_residual(build_operator(f, Rep::dirac, 1.0, k), p) < 1e-12);
  for (int k = 0; k < 3; ++k) {
    CHECK(hermiticity_residual(build_operator(Family::boost_fw, Rep::fw, 1.0, k), p) < 1e-12);
    CHECK(hermiticity_residual(build_operator(Family::com_position_fw, Rep::fw, 1.0, k), p) < 1e-12);
  }
}

TEST_CASE("non_hermitian_first_order_operator_is_detected") {
  const auto x = build_operator(Family::fw_position, Rep::fw, 1.0, 0);
  const auto bad = Complex(kI) * x;
  CHECK(hermiticity_residual(bad, Vec3{0.2, 0.1, 0.0}) > 1.0);
}

TEST_CASE("family_names_round_trip") {
  int count = 0;
  for (int i = 0; i <= static_cast<int>(Family::fv_velocity); ++i) {
    const auto f = static_cast<Family>(i);
    const auto back = family_from_string(to_string(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
    ++count;
  }
  CHECK(count == 31);
  CHECK_FALSE(family_from_string("no_such_family").has_value());
}

TEST_CASE("unsupported_and_massless_requests_fail") {
  CHECK_THROWS_AS(build_operator(Family::fw_hamiltonian, Rep::dirac, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_operator(Family::com_position_fw, Rep::fw, 0.0, 0), DomainError);
  CHECK_THROWS_AS(build_operator(Family::dirac_hamiltonian, Rep::dirac, -1.0), DomainError);
  CHECK_THROWS(build_operator(Family::fw_position, Rep::fw, 1.0, 3));
  const auto sx = build_operator(Family::dirac_spin, Rep::dirac, 1.0, 0) *
                  build_operator(Family::fw_position, Rep::dirac, 1.0, 0);
  const auto sy = build_operator(Family::dirac_spin, Rep::dirac, 1.0, 1) *
                  build_operator(Family::fw_position, Rep::dirac, 1.0, 1);
  const Vec3 p{0.1, 0.2, 0.3};
  CHECK(op_commutator(sx, sy, p).second[0][1].norm() > 0.1);
  CHECK_THROWS_AS(commutator(sx, sy).expand(p), NumericalError);
}

}
