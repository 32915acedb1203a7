#pragma once

#include "fwlab/types.hpp"

namespace fwlab {

/// Periodic 1D grid with n nodes on a box of length L. Nodes and momenta are
/// centered: x_l = (l - n/2) dx, p_j = (j - n/2) dp with dp = 2 pi / L, so
/// dx * dp = 2 pi / n.
struct Grid1D {
  int n = 64;
  double L = 32.0;

  /// Throws DomainError unless n is a power of two (>= 2) and L > 0.
  void validate() const;
  double dx() const;
  double dp() const;
  double x(int l) const;
  double p(int j) const;
  Eigen::VectorXd xs() const;
  Eigen::VectorXd ps() const;
};

}  // namespace fwlab
