#include <doctest.h>

#include <cmath>

#include "fwlab/errors.hpp"
#include "fwlab/jet.hpp"

using namespace fwlab;
using namespace fwlab::jet;

TEST_SUITE("jet") {

TEST_CASE("monomial_table_has_twenty_terms") {
  CHECK(monomials().size() == 20);
  CHECK(index_of(0, 0, 0) == 0);
  CHECK(index_of(1, 0, 0) == unit_index(0));
  CHECK(index_of(2, 2, 0) == -1);
  for (int i = 0; i < kTerms; ++i) {
    const auto& m = monomials()[i];
    CHECK(index_of(m.exp[0], m.exp[1], m.exp[2]) == i);
  }
}

TEST_CASE("energy_jet_matches_closed_derivatives") {
  const double px = 0.7, py = -1.3, pz = 0.4, m = 1.1;
  const auto p = momentum_jets({px, py, pz});
  const ScalarJet e = sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  const double eps = std::sqrt(m * m + px * px + py * py + pz * pz);
  CHECK(e.value() == doctest::Approx(eps).epsilon(1e-15));
  CHECK(e.slope(0) == doctest::Approx(px / eps).epsilon(1e-14));
  const ScalarJet dxx = derivative(derivative(e, 0), 0);
  CHECK(dxx.value() == doctest::Approx((eps * eps - px * px) / (eps * eps * eps)).epsilon(1e-13));
  const ScalarJet dxyz = derivative(derivative(derivative(e, 0), 1), 2);
  CHECK(dxyz.value() == doctest::Approx(3.0 * px * py * pz / std::pow(eps, 5)).epsilon(1e-12));
  CHECK(dxyz.order == 0);
}

TEST_CASE("reciprocal_times_argument_is_one_to_all_orders") {
  const auto p = momentum_jets({0.3, 0.2, -0.5});
  const ScalarJet f = 2.0 + p[0] * p[1] + p[2];
  const ScalarJet one = f * reciprocal(f);
  CHECK(one.value() == doctest::Approx(1.0));
  for (int i = 1; i < kTerms; ++i) CHECK(std::abs(one.c[i]) < 1e-14);
}

TEST_CASE("matrix_inverse_jet") {
  const auto p = momentum_jets({0.5, -0.1, 0.9});
  ComplexMatrix a(2, 2), b(2, 2);
  a << 3, 1, 0, 2;
  b << 0, kI, -kI, 1;
  const MatJet m = mat_constant(a) + p[0] * b + (p[1] * p[2]) * ComplexMatrix(ComplexMatrix::Identity(2, 2));
  const MatJet prod = inverse(m) * m;
  CHECK((prod.value() - SmallMatrix::Identity(2, 2)).norm() < 1e-14);
  for (int i = 1; i < kTerms; ++i) CHECK(prod.c[i].norm() < 1e-13);
}

TEST_CASE("jet_domain_errors") {
  CHECK_THROWS_AS(sqrt(constant(-1.0)), DomainError);
  CHECK_THROWS_AS(reciprocal(constant(0.0)), DomainError);
  CHECK_THROWS_AS(inverse(mat_constant(ComplexMatrix::Zero(2, 2))), DomainError);
  CHECK_THROWS_AS(derivative(constant(1.0), 3), DimensionError);
}

}
