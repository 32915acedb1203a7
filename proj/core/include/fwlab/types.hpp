#pragma once

#include <complex>

#include <Eigen/Dense>

namespace fwlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

inline constexpr Complex kI{0.0, 1.0};

/// Levi-Civita symbol on 0-based indices.
constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((i + 1) % 3 == j) ? 1 : -1;
}

}  // namespace fwlab
