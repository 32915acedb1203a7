#include "fwlab/spin_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fwlab/dirac_basis.hpp"
#include "fwlab/errors.hpp"

namespace fwlab {

namespace {

void require_massive(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("precession frequencies need m > 0");
}

void require_finite(const Vec3& v, const char* what) {
  if (!v.allFinite()) throw DomainError(std::string(what) + " has non-finite entries");
}

// Omega = beta * even + odd, split by whether beta multiplies the term.
struct OmegaParts {
  Vec3 with_beta = Vec3::Zero();
  Vec3 without_beta = Vec3::Zero();
};

OmegaParts mdm_parts(const Vec3& p, double m, const FieldConfig& f) {
  const double eps = energy(p, m);
  const double e = f.charge, a = f.a_mm;
  OmegaParts o;
  o.with_beta = (e / m) * (-(m / eps + a) * f.B + a * p.dot(f.B) / (eps * (eps + m)) * p);
  o.without_beta = (e / m) * ((m / (eps + m) + a) / eps) * p.cross(f.E);
  return o;
}

OmegaParts edm_parts(const Vec3& p, double m, const FieldConfig& f) {
  const double eps = energy(p, m);
  const double k = -f.charge * f.eta / (2.0 * m);
  OmegaParts o;
  o.with_beta = k * (f.E - p.dot(f.E) / (eps * (eps + m)) * p);
  o.without_beta = k * p.cross(f.B) / eps;
  return o;
}

ComplexMatrix spin_matrix(const OmegaParts& o) {
  const GammaSet& g = gammas();
  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < 3; ++k)
    h += 0.5 * (o.with_beta(k) * g.beta + o.without_beta(k) * ComplexMatrix::Identity(4, 4)) * g.Sigma[k];
  return h;
}

}  // namespace

void FieldConfig::validate() const {
  require_finite(E, "E");
  require_finite(B, "B");
  require_finite(frame_accel, "frame acceleration");
  require_finite(frame_omega, "frame rotation");
  if (!std::isfinite(a_mm) || !std::isfinite(eta) || !std::isfinite(charge))
    throw DomainError("field constants must be finite");
}

Vec3 omega_mdm(const Vec3& p, double m, const FieldConfig& f) {
  require_massive(m);
  require_finite(p, "momentum");
  f.validate();
  if (f.spin == SpinKind::spin0) return Vec3::Zero();
  const OmegaParts o = mdm_parts(p, m, f);
  return o.with_beta + o.without_beta;
}

Vec3 omega_edm(const Vec3& p, double m, const FieldConfig& f) {
  require_massive(m);
  require_finite(p, "momentum");
  f.validate();
  if (f.spin == SpinKind::spin0) return Vec3::Zero();
  const OmegaParts o = edm_parts(p, m, f);
  return o.with_beta + o.without_beta;
}

Vec3 omega_total(const Vec3& p, double m, const FieldConfig& f) {
  return omega_mdm(p, m, f) + omega_edm(p, m, f);
}

ComplexMatrix spin_hamiltonian_fw(const Vec3& p, double m, const FieldConfig& f) {
  require_massive(m);
  require_finite(p, "momentum");
  f.validate();
  if (f.spin == SpinKind::spin0) return ComplexMatrix::Zero(4, 4);
  const OmegaParts a = mdm_parts(p, m, f), b = edm_parts(p, m, f);
  return spin_matrix({a.with_beta + b.with_beta, a.without_beta + b.without_beta});
}

Vec3 omega_noninertial(const Vec3& p, double m, const FieldConfig& f) {
  require_finite(p, "momentum");
  f.validate();
  if (f.spin == SpinKind::spin0) return Vec3::Zero();
  const double eps = energy(p, m);
  if (eps + m == 0.0) return -f.frame_omega;
  return f.frame_accel.cross(p) / (eps + m) - f.frame_omega;
}

Vec3 omega_noninertial_classical(const Vec3& P, double m, const FieldConfig& f) {
  require_finite(P, "momentum");
  f.validate();
  if (f.spin == SpinKind::spin0) return Vec3::Zero();
  if (m < 0.0) throw DomainError("mass must be non-negative");
  const double varepsilon = std::sqrt(m * m + P.squaredNorm());
  Vec3 cross;
  cross << f.frame_accel.y() * P.z() - f.frame_accel.z() * P.y(),
      f.frame_accel.z() * P.x() - f.frame_accel.x() * P.z(),
      f.frame_accel.x() * P.y() - f.frame_accel.y() * P.x();
  if (varepsilon + m == 0.0) return -f.frame_omega;
  return cross / (varepsilon + m) - f.frame_omega;
}

ComplexMatrix noninertial_spin_hamiltonian_fw(const Vec3& p, double m, const FieldConfig& f) {
  require_finite(p, "momentum");
  f.validate();
  if (f.spin == SpinKind::spin0) return ComplexMatrix::Zero(4, 4);
  const double eps = energy(p, m);
  OmegaParts o;
  if (eps + m > 0.0) o.with_beta = f.frame_accel.cross(p) / (eps + m);
  o.without_beta = -f.frame_omega;
  return spin_matrix(o);
}

Vec3 omega_from_block(const ComplexMatrix& h2) {
  if (h2.rows() != 2 || h2.cols() != 2) throw DimensionError("omega_from_block expects a 2x2 matrix");
  Vec3 w;
  for (int k = 0; k < 3; ++k) w(k) = (h2 * pauli(k)).trace().real();
  return w;
}

Vec3 propagate_classical(const Vec3& S0, const Vec3& omega, double t) {
  const double w = omega.norm();
  if (w == 0.0 || t == 0.0) return S0;
  const Vec3 n = omega / w;
  const double th = w * t;
  const double c = std::cos(th), s = std::sin(th);
  return c * S0 + s * n.cross(S0) + (1.0 - c) * n.dot(S0) * n;
}

Spinor propagate_quantum(const Spinor& chi0, const Vec3& omega, double t) {
  if (!chi0.allFinite()) throw DomainError("spinor has non-finite entries");
  if (std::abs(chi0.squaredNorm() - 1.0) > 1e-12) throw DomainError("spinor is not normalized");
  const double w = omega.norm();
  if (w == 0.0 || t == 0.0) return chi0;
  const Vec3 n = omega / w;
  const double half = 0.5 * w * t;
  Eigen::Matrix2cd u = std::cos(half) * Eigen::Matrix2cd::Identity();
  for (int k = 0; k < 3; ++k) u -= kI * std::sin(half) * n(k) * pauli(k);
  return u * chi0;
}

Vec3 spin_expectation(const Spinor& chi) {
  Vec3 s;
  for (int k = 0; k < 3; ++k) {
    const ComplexVector v = pauli(k) * chi;
    s(k) = chi.dot(v).real();
  }
  return s;
}

Spinor spinor_along(const Vec3& dir) {
  const double r = dir.norm();
  if (!(r > 0.0) || !dir.allFinite()) throw DomainError("spin direction must be nonzero and finite");
  const Vec3 n = dir / r;
  const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const double phi = std::atan2(n.y(), n.x());
  Spinor chi;
  chi << std::cos(0.5 * theta), std::exp(kI * phi) * std::sin(0.5 * theta);
  return chi;
}

}  // namespace fwlab
