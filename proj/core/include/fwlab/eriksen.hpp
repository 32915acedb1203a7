#pragma once

#include <functional>
#include <optional>

#include "fwlab/grid.hpp"
#include "fwlab/types.hpp"

namespace fwlab {

/// Hermitian H = beta M + E + O with beta = diag(I_half, -I_half). The mass
/// operator M is stored explicitly since beta M and E are both even.
class BlockedHamiltonian {
 public:
  /// Throws DimensionError / NonNormalError / DomainError when H is not Hermitian,
  /// dims disagree, or M does not commute with beta.
  BlockedHamiltonian(ComplexMatrix h, ComplexMatrix mass);
  /// Mass operator m * I.
  BlockedHamiltonian(ComplexMatrix h, double m);

  const ComplexMatrix& H() const { return h_; }
  const ComplexMatrix& beta() const { return beta_; }
  const ComplexMatrix& mass() const { return mass_; }
  Eigen::Index half() const { return h_.rows() / 2; }
  Eigen::Index dim() const { return h_.rows(); }

  /// (H + beta H beta)/2 - beta M
  ComplexMatrix even_potential() const;
  /// (H - beta H beta)/2
  ComplexMatrix odd() const;

 private:
  ComplexMatrix h_, beta_, mass_;
};

ComplexMatrix block_beta(Eigen::Index half);
/// Frobenius norm of the off-diagonal blocks with respect to beta.
double off_block_norm(const ComplexMatrix& m);
/// Block-diagonal part of m.
ComplexMatrix even_part(const ComplexMatrix& m);

/// lambda = H (H^2)^{-1/2}. Throws DomainError when an eigenvalue of H lies within 1e-8 of zero.
ComplexMatrix sign_operator(const ComplexMatrix& h);

/// Exact transformation (1 + beta lambda)(2 + beta lambda + lambda beta)^{-1/2}.
ComplexMatrix eriksen_unitary(const BlockedHamiltonian& h);

struct EriksenDiagnostics {
  double unitarity = 0.0;        // ||U U^dagger - I||
  double beta_condition = 0.0;   // ||beta U - U^dagger beta||
  double lambda_squared = 0.0;   // ||lambda^2 - I||
  double lambda_commutator = 0.0;  // ||[beta lambda, lambda beta]||
  double beta_commutator = 0.0;  // ||[beta, beta lambda + lambda beta]||
  double off_block = 0.0;        // off-block norm of U H U^dagger
};

EriksenDiagnostics eriksen_diagnostics(const BlockedHamiltonian& h, const ComplexMatrix& u);

struct ApproxFW {
  ComplexMatrix U;
  ComplexMatrix H_fw;         // closed-form relativistic FW Hamiltonian
  ComplexMatrix transformed;  // U H U^dagger
};

/// Approximate relativistic FW transformation with X = {1/(2M), O}. The even
/// operator F in the double-commutator term defaults to E.
ApproxFW approx_fw(const BlockedHamiltonian& h, const std::optional<ComplexMatrix>& f = std::nullopt);

/// Spectral momentum operator on the grid: P = sum_j p_j |phi_j><phi_j| with
/// plane waves phi_j(x_l) = exp(i p_j x_l)/sqrt(n).
ComplexMatrix momentum_matrix(const Grid1D& grid);

/// 1D Dirac Hamiltonian beta m + V(x) + alpha_1 p on a 4n basis ordered as
/// (block, spin, site), so beta = diag(I_2n, -I_2n).
BlockedHamiltonian discretize_dirac_1d(const Grid1D& grid, double m, const std::function<double(double)>& potential);

}  // namespace fwlab

namespace fwlab {

/// Max distance between the sorted spectra of the block-diagonal parts of a and b.
/// Two FW-type transforms may differ by an even unitary, so even blocks are
/// compared through their spectra rather than entrywise.
double even_spectrum_distance(const ComplexMatrix& a, const ComplexMatrix& b);

struct EriksenComparison {
  double off_block_exact = 0.0;
  double off_block_approx = 0.0;
  double even_matrix_diff = 0.0;    // ||even(U_a H U_a^dagger) - U_E H U_E^dagger||_F
  double even_spectrum_diff = 0.0;  // even_spectrum_distance of the same pair
  double hfw_spectrum_diff = 0.0;   // closed-form H_FW against the exact even block
};

EriksenComparison compare_exact_approx(const BlockedHamiltonian& h);

}  // namespace fwlab
