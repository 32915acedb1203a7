#pragma once

#include <array>

#include "fwlab/types.hpp"

namespace fwlab {

/// Standard (Dirac-Pauli) representation. gamma[k] = beta * alpha[k],
/// Sigma[k] = diag(sigma_k, sigma_k), Pi[k] = beta * Sigma[k]. rho holds the
/// 2x2 Pauli set used for two-component Feshbach-Villars states.
struct GammaSet {
  ComplexMatrix beta;
  std::array<ComplexMatrix, 3> alpha;
  std::array<ComplexMatrix, 3> gamma;
  std::array<ComplexMatrix, 3> Sigma;
  std::array<ComplexMatrix, 3> Pi;
  std::array<ComplexMatrix, 3> rho;
};

GammaSet build_gamma_set();
/// Process-wide immutable instance of build_gamma_set().
const GammaSet& gammas();

/// Pauli matrix sigma_{k+1} for k = 0, 1, 2.
ComplexMatrix pauli(int k);

struct Kinematics {
  Vec3 p = Vec3::Zero();
  double m = 0.0;
  double eps = 0.0;

  static Kinematics make(const Vec3& p, double m);
};

/// sqrt(m^2 + |p|^2). Throws DomainError for m < 0.
double energy(const Vec3& p, double m);

/// beta m + alpha . p
ComplexMatrix dirac_hamiltonian(const Vec3& p, double m);
/// beta * sqrt(m^2 + p^2)
ComplexMatrix fw_hamiltonian_matrix(const Vec3& p, double m);
/// Free-particle FW unitary (eps + m + gamma . p) / sqrt(2 eps (eps + m)).
ComplexMatrix free_fw_unitary(const Vec3& p, double m);

/// sum_k v_k * mats[k]
ComplexMatrix dot(const Vec3& v, const std::array<ComplexMatrix, 3>& mats);
/// Component k of the matrix-valued cross product (mats x v).
ComplexMatrix cross_mv(const std::array<ComplexMatrix, 3>& mats, const Vec3& v, int k);

}  // namespace fwlab
