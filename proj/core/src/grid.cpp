#include "fwlab/grid.hpp"

#include <numbers>
#include <string>

#include "fwlab/errors.hpp"

namespace fwlab {

void Grid1D::validate() const {
  if (n < 2 || (n & (n - 1)) != 0)
    throw DomainError("grid size must be a power of two >= 2, got " + std::to_string(n));
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("grid length must be positive and finite");
}

double Grid1D::dx() const { return L / n; }
double Grid1D::dp() const { return 2.0 * std::numbers::pi / L; }
double Grid1D::x(int l) const { return (l - n / 2) * dx(); }
double Grid1D::p(int j) const { return (j - n / 2) * dp(); }

Eigen::VectorXd Grid1D::xs() const {
  Eigen::VectorXd v(n);
  for (int l = 0; l < n; ++l) v(l) = x(l);
  return v;
}

Eigen::VectorXd Grid1D::ps() const {
  Eigen::VectorXd v(n);
  for (int j = 0; j < n; ++j) v(j) = p(j);
  return v;
}

}  // namespace fwlab
