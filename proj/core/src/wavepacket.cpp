#include "fwlab/wavepacket.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include <unsupported/Eigen/FFT>

#include "fwlab/dirac_basis.hpp"
#include "fwlab/errors.hpp"
#include "fwlab/spin_dynamics.hpp"

namespace fwlab {

namespace {

constexpr double kTailTol = 1e-8;
constexpr double kHermitianObsTol = 1e-8;

double sign_alt(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

Picture picture_of(Convention c) { return c == Convention::fw_picture ? Picture::fw : Picture::dirac; }

double weighted_sum(const Grid1D& g, const Eigen::MatrixXcd& psi, const ComplexMatrix& mat) {
  double acc = 0.0;
  for (int j = 0; j < g.n; ++j) {
    const ComplexVector row = psi.row(j).transpose();
    acc += row.dot(mat * row).real();
  }
  return acc * g.dp();
}

double moment(const Grid1D& g, const Eigen::MatrixXcd& psi_x, int power) {
  double acc = 0.0;
  for (int l = 0; l < g.n; ++l) acc += std::pow(g.x(l), power) * psi_x.row(l).squaredNorm();
  return acc * g.dx();
}

}  // namespace

double WavePacket1D::norm() const { return psi.squaredNorm() * grid.dp(); }

Eigen::MatrixXcd to_position(const WavePacket1D& packet) {
  const Grid1D& g = packet.grid;
  const int n = g.n;
  Eigen::FFT<double> fft;
  Eigen::MatrixXcd out(n, packet.psi.cols());
  const double pre = g.dp() / std::sqrt(2.0 * std::numbers::pi) * n;
  std::vector<Complex> in(n), res(n);
  for (Eigen::Index c = 0; c < packet.psi.cols(); ++c) {
    for (int j = 0; j < n; ++j) in[j] = sign_alt(j) * packet.psi(j, c);
    fft.inv(res, in);
    for (int l = 0; l < n; ++l) out(l, c) = pre * sign_alt(l + n / 2) * res[l];
  }
  return out;
}

Eigen::MatrixXcd to_momentum(const Grid1D& grid, const Eigen::MatrixXcd& psi_x) {
  grid.validate();
  const int n = grid.n;
  if (psi_x.rows() != n) throw DimensionError("position amplitudes do not match the grid");
  Eigen::FFT<double> fft;
  Eigen::MatrixXcd out(n, psi_x.cols());
  const double pre = std::sqrt(2.0 * std::numbers::pi) / (grid.dp() * n);
  std::vector<Complex> in(n), res(n);
  for (Eigen::Index c = 0; c < psi_x.cols(); ++c) {
    for (int l = 0; l < n; ++l) in[l] = sign_alt(l + n / 2) * psi_x(l, c);
    fft.fwd(res, in);
    for (int j = 0; j < n; ++j) out(j, c) = pre * sign_alt(j) * res[j];
  }
  return out;
}

WavePacket1D make_gaussian_packet(const Grid1D& grid, const PacketSpec& s) {
  grid.validate();
  if (!(s.sigma_p > 0.0) || !std::isfinite(s.sigma_p)) throw DomainError("sigma_p must be positive");
  if (!(s.m > 0.0) || !std::isfinite(s.m)) throw DomainError("packet mass must be positive");
  if (!std::isfinite(s.p0) || !std::isfinite(s.x0)) throw DomainError("packet center must be finite");
  if (!s.positive_energy && s.picture == Picture::fw)
    throw DomainError("a mixed-energy packet can only be built in the Dirac picture");

  const double lo = grid.p(0), hi = grid.p(grid.n - 1);
  const double tail = 0.5 * std::erfc((hi - s.p0) / (s.sigma_p * std::sqrt(2.0))) +
                      0.5 * std::erfc((s.p0 - lo) / (s.sigma_p * std::sqrt(2.0)));
  if (tail > kTailTol)
    throw DomainError("momentum grid does not resolve the packet: tail mass " + std::to_string(tail) +
                      " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  if (std::abs(s.x0) + 3.0 / s.sigma_p > 0.5 * grid.L)
    throw DomainError("box too short for the packet: need |x0| + 3/sigma_p <= L/2");

  const Spinor chi = spinor_along(s.spin_dir);
  WavePacket1D w;
  w.grid = grid;
  w.m = s.m;
  w.picture = s.picture;
  w.positive_energy = s.positive_energy;
  w.psi = Eigen::MatrixXcd::Zero(grid.n, 4);
  for (int j = 0; j < grid.n; ++j) {
    const double p = grid.p(j);
    const Complex amp = std::exp(-(p - s.p0) * (p - s.p0) / (4.0 * s.sigma_p * s.sigma_p) - kI * p * s.x0);
    ComplexVector spinor = ComplexVector::Zero(4);
    spinor.head<2>() = amp * chi;
    if (s.picture == Picture::dirac && s.positive_energy)
      spinor = free_fw_unitary(w.momentum(j), s.m).adjoint() * spinor;
    w.psi.row(j) = spinor.transpose();
  }
  w.psi /= std::sqrt(w.norm());
  return w;
}

WavePacket1D to_picture(const WavePacket1D& packet, Picture target) {
  if (packet.picture == target) return packet;
  WavePacket1D out = packet;
  out.picture = target;
  for (int j = 0; j < packet.grid.n; ++j) {
    const ComplexMatrix u = free_fw_unitary(packet.momentum(j), packet.m);
    const ComplexVector row = packet.psi.row(j).transpose();
    out.psi.row(j) = (target == Picture::fw ? ComplexVector(u * row) : ComplexVector(u.adjoint() * row)).transpose();
  }
  return out;
}

WavePacket1D evolve_free(const WavePacket1D& packet, double t) {
  if (!std::isfinite(t)) throw DomainError("time must be finite");
  WavePacket1D out = packet;
  if (t == 0.0) return out;
  for (int j = 0; j < packet.grid.n; ++j) {
    const Vec3 p = packet.momentum(j);
    const double eps = energy(p, packet.m);
    if (packet.picture == Picture::fw) {
      const Complex up = std::exp(-kI * eps * t), down = std::conj(up);
      out.psi.row(j).head<2>() *= up;
      out.psi.row(j).tail<2>() *= down;
    } else {
      const ComplexMatrix u = std::cos(eps * t) * ComplexMatrix::Identity(4, 4) -
                              kI * (std::sin(eps * t) / eps) * dirac_hamiltonian(p, packet.m);
      out.psi.row(j) = (u * packet.psi.row(j).transpose()).transpose();
    }
  }
  return out;
}

Eigen::VectorXd density(const WavePacket1D& packet) {
  return to_position(packet).rowwise().squaredNorm();
}

double expectation(const WavePacket1D& packet, const Observable& obs, Convention conv) {
  const WavePacket1D w = to_picture(packet, picture_of(conv));
  const Grid1D& g = w.grid;
  const GammaSet& gs = gammas();
  switch (obs.kind) {
    case ObservableKind::identity:
      return w.norm();
    case ObservableKind::momentum: {
      double acc = 0.0;
      for (int j = 0; j < g.n; ++j) acc += g.p(j) * w.psi.row(j).squaredNorm();
      return acc * g.dp();
    }
    case ObservableKind::spin_z:
      return weighted_sum(g, w.psi, 0.5 * gs.Sigma[2]);
    case ObservableKind::alpha_z:
      return weighted_sum(g, w.psi, gs.alpha[2]);
    case ObservableKind::position:
      return moment(g, to_position(w), 1);
    case ObservableKind::position_sq:
      return moment(g, to_position(w), 2);
    case ObservableKind::quadrupole_1d:
      return 2.0 * moment(g, to_position(w), 2);
    case ObservableKind::custom:
      break;
  }

  if (!obs.op) throw DomainError("custom observable without an operator");
  const PhaseSpaceOperator& op = *obs.op;
  if (op.dim() != 4) throw DimensionError("custom observable must act on four-component spinors");

  Eigen::MatrixXcd x_psi = to_position(w);
  for (int l = 0; l < g.n; ++l) x_psi.row(l) *= -kI * g.x(l);
  const Eigen::MatrixXcd dpsi = to_momentum(g, x_psi);

  Complex acc = 0.0;
  for (int j = 0; j < g.n; ++j) {
    const Vec3 p = w.momentum(j);
    const double herm = hermiticity_residual(op, p);
    if (herm > kHermitianObsTol)
      throw DomainError("observable is not Hermitian (residual " + std::to_string(herm) + ")");
    const PhaseOpValue v = evaluate(op, p);
    if (v.b[0].norm() > 0.0 || v.b[1].norm() > 0.0)
      throw DomainError("only d/dp_z derivative parts are supported on a 1D packet");
    const ComplexVector row = w.psi.row(j).transpose();
    const ComplexVector drow = dpsi.row(j).transpose();
    acc += row.dot(v.a * row + v.b[2] * drow);
  }
  return acc.real() * g.dp();
}

double picture_change_error(const WavePacket1D& packet, const Observable& obs) {
  return expectation(packet, obs, Convention::dirac_picture) - expectation(packet, obs, Convention::fw_picture);
}

double relative_density_gap(const WavePacket1D& packet) {
  const Eigen::VectorXd rd = density(to_picture(packet, Picture::dirac));
  const Eigen::VectorXd rf = density(to_picture(packet, Picture::fw));
  return (rd - rf).cwiseAbs().maxCoeff() / rf.maxCoeff();
}

void write_density_csv(const WavePacket1D& packet, std::ostream& out) {
  const Eigen::VectorXd rd = density(to_picture(packet, Picture::dirac));
  const Eigen::VectorXd rf = density(to_picture(packet, Picture::fw));
  char buf[96];
  out << "x,rho_dirac,rho_fw\n";
  for (int l = 0; l < packet.grid.n; ++l) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", packet.grid.x(l), rd(l), rf(l));
    out << buf;
  }
}

void write_moments_csv(const WavePacket1D& packet, const std::vector<double>& times, std::ostream& out) {
  const Observable x = Observable::of(ObservableKind::position);
  const Observable x2 = Observable::of(ObservableKind::position_sq);
  char buf[128];
  out << "t,x_mean,x2_mean,pce_x2\n";
  for (double t : times) {
    const WavePacket1D w = evolve_free(packet, t);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", t, expectation(w, x, Convention::fw_picture),
                  expectation(w, x2, Convention::fw_picture), picture_change_error(w, x2));
    out << buf;
  }
}

}  // namespace fwlab
