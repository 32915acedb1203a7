#include "fwlab/dirac_basis.hpp"

#include <cmath>

#include "fwlab/errors.hpp"

namespace fwlab {

ComplexMatrix pauli(int k) {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  switch (k) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, -kI, kI, 0; break;
    case 2: s << 1, 0, 0, -1; break;
    default: throw DimensionError("pauli: index must be 0, 1 or 2");
  }
  return s;
}

GammaSet build_gamma_set() {
  GammaSet g;
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix z2 = ComplexMatrix::Zero(2, 2);
  g.beta = ComplexMatrix::Zero(4, 4);
  g.beta << i2, z2, z2, -i2;
  for (int k = 0; k < 3; ++k) {
    const ComplexMatrix s = pauli(k);
    g.alpha[k] = ComplexMatrix::Zero(4, 4);
    g.alpha[k] << z2, s, s, z2;
    g.Sigma[k] = ComplexMatrix::Zero(4, 4);
    g.Sigma[k] << s, z2, z2, s;
    g.gamma[k] = g.beta * g.alpha[k];
    g.Pi[k] = g.beta * g.Sigma[k];
    g.rho[k] = s;
  }
  return g;
}

const GammaSet& gammas() {
  static const GammaSet g = build_gamma_set();
  return g;
}

double energy(const Vec3& p, double m) {
  if (!(m >= 0.0)) throw DomainError("energy: mass must be non-negative");
  return std::sqrt(m * m + p.squaredNorm());
}

Kinematics Kinematics::make(const Vec3& p, double m) { return {p, m, energy(p, m)}; }

ComplexMatrix dot(const Vec3& v, const std::array<ComplexMatrix, 3>& mats) {
  return v(0) * mats[0] + v(1) * mats[1] + v(2) * mats[2];
}

ComplexMatrix cross_mv(const std::array<ComplexMatrix, 3>& mats, const Vec3& v, int k) {
  const int i = (k + 1) % 3;
  const int j = (k + 2) % 3;
  return mats[i] * v(j) - mats[j] * v(i);
}

ComplexMatrix dirac_hamiltonian(const Vec3& p, double m) {
  if (!(m >= 0.0)) throw DomainError("dirac_hamiltonian: mass must be non-negative");
  return m * gammas().beta + dot(p, gammas().alpha);
}

ComplexMatrix fw_hamiltonian_matrix(const Vec3& p, double m) {
  return energy(p, m) * gammas().beta;
}

ComplexMatrix free_fw_unitary(const Vec3& p, double m) {
  const double eps = energy(p, m);
  if (eps == 0.0) throw DomainError("free_fw_unitary: undefined at m = 0, p = 0");
  const ComplexMatrix num = (eps + m) * ComplexMatrix::Identity(4, 4) + dot(p, gammas().gamma);
  return num / std::sqrt(2.0 * eps * (eps + m));
}

}  // namespace fwlab
