#pragma once

#include "fwlab/types.hpp"

namespace fwlab {

enum class SpinKind { spin0, spin_half, spin1 };

/// Uniform fields in natural units. The electromagnetic and noninertial parts
/// are independent; each Omega function reads only the fields it needs.
struct FieldConfig {
  Vec3 E = Vec3::Zero();
  Vec3 B = Vec3::Zero();
  double a_mm = 0.0;  // (g - 2) / 2
  double eta = 0.0;   // EDM factor
  double charge = 1.0;
  Vec3 frame_accel = Vec3::Zero();
  Vec3 frame_omega = Vec3::Zero();
  SpinKind spin = SpinKind::spin_half;

  /// Throws DomainError on non-finite entries.
  void validate() const;
};

using Spinor = Eigen::Vector2cd;

/// Positive-energy precession frequencies. Spin-1 reuses the spin-1/2 formulas;
/// spin-0 has no spin term and returns zero. Throw DomainError unless m > 0.
Vec3 omega_mdm(const Vec3& p, double m, const FieldConfig& f);
Vec3 omega_edm(const Vec3& p, double m, const FieldConfig& f);
Vec3 omega_total(const Vec3& p, double m, const FieldConfig& f);

/// 4x4 spin part Omega . Sigma / 2 of the FW Hamiltonian with beta kept as a matrix.
ComplexMatrix spin_hamiltonian_fw(const Vec3& p, double m, const FieldConfig& f);

/// a x p / (eps + m) - omega on the positive block (m >= 0).
Vec3 omega_noninertial(const Vec3& p, double m, const FieldConfig& f);
/// Classical counterpart written in terms of P and the classical energy.
Vec3 omega_noninertial_classical(const Vec3& P, double m, const FieldConfig& f);
/// 4x4 Omega . Sigma / 2 with Omega = beta a x p/(eps + m) - omega.
ComplexMatrix noninertial_spin_hamiltonian_fw(const Vec3& p, double m, const FieldConfig& f);

/// Omega from a 2x2 block h = Omega . sigma / 2 + c I: Omega_k = Tr(h sigma_k).
Vec3 omega_from_block(const ComplexMatrix& h2);

/// Rotation of S0 about Omega by |Omega| t.
Vec3 propagate_classical(const Vec3& S0, const Vec3& omega, double t);
/// exp(-i Omega . sigma t / 2) chi0. Throws DomainError if |chi0| differs from 1 by more than 1e-12.
Spinor propagate_quantum(const Spinor& chi0, const Vec3& omega, double t);
/// <sigma> for a normalized spinor.
Vec3 spin_expectation(const Spinor& chi);
/// Normalized spinor whose <sigma> points along dir.
Spinor spinor_along(const Vec3& dir);

}  // namespace fwlab
