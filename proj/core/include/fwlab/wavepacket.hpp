#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "fwlab/grid.hpp"
#include "fwlab/phase_ops.hpp"
#include "fwlab/types.hpp"

namespace fwlab {

enum class Picture { dirac, fw };

/// Four-component spinor on a 1D momentum grid, momentum along z. Row j of psi
/// is the spinor at p = (0, 0, p_j). Normalization: sum_j |psi_j|^2 dp = 1.
struct WavePacket1D {
  Grid1D grid;
  Eigen::MatrixXcd psi;  // n x 4
  double m = 1.0;
  Picture picture = Picture::fw;
  bool positive_energy = true;

  double norm() const;
  Vec3 momentum(int j) const { return {0.0, 0.0, grid.p(j)}; }
};

struct PacketSpec {
  double p0 = 0.0;
  double sigma_p = 0.5;
  double m = 1.0;
  Vec3 spin_dir = Vec3::UnitZ();
  Picture picture = Picture::fw;
  double x0 = 0.0;
  /// false places the Pauli spinor straight into the upper Dirac components,
  /// which mixes both energy signs (only meaningful with Picture::dirac).
  bool positive_energy = true;
};

/// Gaussian |psi(p)|^2 with standard deviation sigma_p. Throws DomainError when
/// more than 1e-8 of the probability lies outside the momentum box, or when the
/// position-space width 1/(2 sigma_p) does not fit six times into L/2.
WavePacket1D make_gaussian_packet(const Grid1D& grid, const PacketSpec& spec);

/// Nodewise U_FW(p) or its inverse; a no-op when already in the target picture.
/// Only positive_energy packets can be moved to the FW picture meaningfully,
/// but the transform itself is applied regardless.
WavePacket1D to_picture(const WavePacket1D& packet, Picture target);

/// Nodewise exp(-i H(p) t) with H = beta eps (FW) or the Dirac Hamiltonian.
WavePacket1D evolve_free(const WavePacket1D& packet, double t);

/// Position-space amplitudes psi(x_l) = sum_j psi(p_j) e^{i p_j x_l} dp / sqrt(2 pi), n x 4.
Eigen::MatrixXcd to_position(const WavePacket1D& packet);
/// Inverse of to_position on the same grid.
Eigen::MatrixXcd to_momentum(const Grid1D& grid, const Eigen::MatrixXcd& psi_x);

/// rho(x_l) of the packet in its own picture; sum_l rho_l dx = norm.
Eigen::VectorXd density(const WavePacket1D& packet);

enum class ObservableKind { identity, position, position_sq, quadrupole_1d, momentum, spin_z, alpha_z, custom };

/// position acts as i d/dp (multiplication by x in position space).
/// quadrupole_1d is the one-dimensional reduction Q_zz = 3z^2 - r^2 = 2 z^2.
/// custom wraps a 4x4 phase-space operator evaluated at (0, 0, p_j); only its
/// d/dp_z part may be nonzero.
struct Observable {
  ObservableKind kind = ObservableKind::identity;
  std::optional<PhaseSpaceOperator> op;

  static Observable of(ObservableKind k) { return {k, std::nullopt}; }
  static Observable custom(PhaseSpaceOperator o) { return {ObservableKind::custom, std::move(o)}; }
};

enum class Convention { fw_picture, dirac_picture };

/// <psi|A|psi> dp with psi taken in the picture named by the convention
/// (the packet is converted first if needed). Throws DomainError for a
/// non-Hermitian custom operator.
double expectation(const WavePacket1D& packet, const Observable& obs, Convention conv);

/// <A> with Dirac-picture wave functions minus <A> with FW-picture wave functions.
double picture_change_error(const WavePacket1D& packet, const Observable& obs);

/// max_x |rho_D - rho_FW| / max_x rho_FW.
double relative_density_gap(const WavePacket1D& packet);

/// Columns x, rho_dirac, rho_fw.
void write_density_csv(const WavePacket1D& packet, std::ostream& out);
/// Columns t, x_mean, x2_mean, pce_x2 for the packet evolved to each time.
void write_moments_csv(const WavePacket1D& packet, const std::vector<double>& times, std::ostream& out);

}  // namespace fwlab
