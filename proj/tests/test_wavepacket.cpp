#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "fwlab/errors.hpp"
#include "fwlab/linalg.hpp"
#include "fwlab/wavepacket.hpp"

using namespace fwlab;

namespace {
Grid1D grid() { return Grid1D{256, 64.0}; }
PacketSpec relativistic() {
  PacketSpec s;
  s.p0 = 2.0;
  s.sigma_p = 0.5;
  return s;
}
}

TEST_SUITE("wavepacket") {

TEST_CASE("fw_packet_is_normalized_with_empty_lower_spinor") {
  const WavePacket1D w = make_gaussian_packet(grid(), relativistic());
  CHECK(w.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.psi.rightCols(2).norm() == 0.0);
  const WavePacket1D d = to_picture(w, Picture::dirac);
  CHECK(d.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.psi.rightCols(2).norm() > 0.1);
  CHECK((to_picture(d, Picture::fw).psi - w.psi).norm() < 1e-12);
}

TEST_CASE("momentum_moments_of_the_gaussian") {
  const WavePacket1D w = make_gaussian_packet(grid(), relativistic());
  const double pm = expectation(w, Observable::of(ObservableKind::momentum), Convention::fw_picture);
  CHECK(pm == doctest::Approx(2.0).epsilon(1e-10));
  double var = 0.0;
  for (int j = 0; j < w.grid.n; ++j) var += std::pow(w.grid.p(j) - pm, 2) * w.psi.row(j).squaredNorm() * w.grid.dp();
  CHECK(std::sqrt(var) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("factory_rejects_bad_requests") {
  PacketSpec s = relativistic();
  s.p0 = 14.0;
  CHECK_THROWS_AS(make_gaussian_packet(Grid1D{64, 32.0}, s), DomainError);
  s = relativistic();
  s.sigma_p = 0.01;
  CHECK_THROWS_AS(make_gaussian_packet(grid(), s), DomainError);
  s = relativistic();
  s.positive_energy = false;
  CHECK_THROWS_AS(make_gaussian_packet(grid(), s), DomainError);
}

TEST_CASE("position_transform_round_trip_and_density_normalization") {
  const WavePacket1D w = to_picture(make_gaussian_packet(grid(), relativistic()), Picture::dirac);
  const Eigen::MatrixXcd x = to_position(w);
  CHECK((to_momentum(w.grid, x) - w.psi).norm() < 1e-12);
  CHECK(density(w).sum() * w.grid.dx() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(density(to_picture(w, Picture::fw)).sum() * w.grid.dx() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("shifted_packet_is_centered_at_x0") {
  PacketSpec s = relativistic();
  s.x0 = 3.0;
  const WavePacket1D w = make_gaussian_packet(grid(), s);
  CHECK(expectation(w, Observable::of(ObservableKind::position), Convention::fw_picture) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("free_evolution_preserves_norm_and_drifts_with_group_velocity") {
  const WavePacket1D w = make_gaussian_packet(grid(), relativistic());
  const WavePacket1D w0 = evolve_free(w, 0.0);
  CHECK((w0.psi - w.psi).norm() == 0.0);
  double vg = 0.0;
  for (int j = 0; j < w.grid.n; ++j) {
    const double p = w.grid.p(j);
    vg += p / std::sqrt(1 + p * p) * w.psi.row(j).squaredNorm() * w.grid.dp();
  }
  const double x0 = expectation(w, Observable::of(ObservableKind::position), Convention::fw_picture);
  for (double t : {1.0, 10.0}) {
    const WavePacket1D wt = evolve_free(w, t);
    CHECK(wt.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const double xt = expectation(wt, Observable::of(ObservableKind::position), Convention::fw_picture);
    CHECK(std::abs(xt - x0 - vg * t) < 1e-8);
  }
  CHECK(evolve_free(w, 100.0).norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("trivial_picture_change_errors") {
  const WavePacket1D w = make_gaussian_packet(grid(), relativistic());
  CHECK(expectation(w, Observable::of(ObservableKind::identity), Convention::dirac_picture) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(picture_change_error(w, Observable::of(ObservableKind::identity))) < 1e-12);
  CHECK(std::abs(picture_change_error(w, Observable::of(ObservableKind::momentum))) < 1e-12);
  CHECK(std::abs(expectation(w, Observable::of(ObservableKind::position), Convention::dirac_picture)) < 1e-10);
}

TEST_CASE("second_moment_picture_change_error_is_visible") {
  const WavePacket1D w = make_gaussian_packet(grid(), relativistic());
  const double x2 = expectation(w, Observable::of(ObservableKind::position_sq), Convention::fw_picture);
  const double pce = picture_change_error(w, Observable::of(ObservableKind::position_sq));
  CHECK(std::abs(pce) > 1e-4 * x2);
  CHECK(picture_change_error(w, Observable::of(ObservableKind::quadrupole_1d)) == doctest::Approx(2 * pce).epsilon(1e-12));
}

TEST_CASE("custom_observables") {
  const WavePacket1D w = make_gaussian_packet(grid(), relativistic());
  const auto z = Observable::custom(build_operator(Family::fw_position, Rep::fw, 1.0, 2));
  CHECK(expectation(w, z, Convention::fw_picture) ==
        doctest::Approx(expectation(w, Observable::of(ObservableKind::position), Convention::fw_picture)).epsilon(1e-10));
  const auto bad = Observable::custom(Complex(kI) * build_operator(Family::fw_spin, Rep::fw, 1.0, 2));
  CHECK_THROWS_AS(expectation(w, bad, Convention::fw_picture), DomainError);
}

TEST_CASE("csv_writers") {
  const WavePacket1D w = make_gaussian_packet(Grid1D{64, 32.0}, relativistic());
  std::ostringstream d, m;
  write_density_csv(w, d);
  write_moments_csv(w, {0.0, 1.0}, m);
  CHECK(d.str().rfind("x,rho_dirac,rho_fw\n", 0) == 0);
  CHECK(m.str().rfind("t,x_mean,x2_mean,pce_x2\n", 0) == 0);
  const std::string ms = m.str();
  CHECK(std::count(ms.begin(), ms.end(), '\n') == 3);
}

}
