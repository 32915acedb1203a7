#include "fwlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace fwlab::linalg {

namespace {

void require_square(const ComplexMatrix& m, const char* where) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << where << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << where << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
       << b.cols();
    throw DimensionError(os.str());
  }
}

}  // namespace

bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m, "hermiticity_residual");
  const double n = m.norm();
  if (n == 0.0) return 0.0;
  return (m - m.adjoint()).norm() / n;
}

double normality_residual(const ComplexMatrix& m) {
  require_square(m, "normality_residual");
  const double n = m.squaredNorm();
  if (n == 0.0) return 0.0;
  return (m * m.adjoint() - m.adjoint() * m).norm() / n;
}

double unitarity_residual(const ComplexMatrix& u) {
  require_square(u, "unitarity_residual");
  return (u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_residual(m) <= tol; }

bool is_unitary(const ComplexMatrix& u, double tol) { return unitarity_residual(u) <= tol; }

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator");
  require_same_shape(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "anticommutator");
  require_same_shape(a, b, "anticommutator");
  return a * b + b * a;
}

ComplexMatrix mat_fn(const ComplexMatrix& m, const std::function<Complex(Complex)>& f) {
  require_square(m, "mat_fn");
  if (!all_finite(m)) throw NumericalError("mat_fn: non-finite input");
  if (is_hermitian(m)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
    Eigen::VectorXcd fl(m.rows());
    for (Eigen::Index i = 0; i < fl.size(); ++i) fl(i) = f(Complex(es.eigenvalues()(i), 0.0));
    if (!fl.allFinite()) throw BranchError("mat_fn: function undefined on the spectrum");
    return es.eigenvectors() * fl.asDiagonal() * es.eigenvectors().adjoint();
  }
  const double res = normality_residual(m);
  if (res > kNormalTol) {
    std::ostringstream os;
    os << "mat_fn: matrix is not normal (residual " << res << ")";
    throw NonNormalError(os.str(), res);
  }
  // For a normal matrix the Schur form is diagonal up to roundoff.
  Eigen::ComplexSchur<ComplexMatrix> schur(m);
  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& u = schur.matrixU();
  Eigen::VectorXcd fl(m.rows());
  for (Eigen::Index i = 0; i < fl.size(); ++i) fl(i) = f(t(i, i));
  if (!fl.allFinite()) throw BranchError("mat_fn: function undefined on the spectrum");
  return u * fl.asDiagonal() * u.adjoint();
}

ComplexMatrix mat_fn_hermitian(const ComplexMatrix& m, const std::function<double(double)>& f) {
  require_square(m, "mat_fn_hermitian");
  const double res = hermiticity_residual(m);
  if (res > kHermitianTol) {
    std::ostringstream os;
    os << "mat_fn_hermitian: matrix is not Hermitian (residual " << res << ")";
    throw NonNormalError(os.str(), res);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
  Eigen::VectorXd fl(m.rows());
  for (Eigen::Index i = 0; i < fl.size(); ++i) {
    fl(i) = f(es.eigenvalues()(i));
    if (!std::isfinite(fl(i))) {
      std::ostringstream os;
      os << "mat_fn_hermitian: function undefined at eigenvalue " << es.eigenvalues()(i);
      throw BranchError(os.str());
    }
  }
  return es.eigenvectors() * fl.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
  const double clamp = 1e-12 * std::max(1.0, m.norm());
  return mat_fn_hermitian(m, [clamp](double x) {
    if (x < 0.0 && x >= -clamp) return 0.0;
    return std::sqrt(x);
  });
}

ComplexMatrix inv_sqrt_pd(const ComplexMatrix& m) {
  return mat_fn_hermitian(m, [](double x) {
    if (x <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return 1.0 / std::sqrt(x);
  });
}

ComplexMatrix mat_exp(const ComplexMatrix& m, double t) {
  require_square(m, "mat_exp");
  if (!all_finite(m) || !std::isfinite(t)) throw NumericalError("mat_exp: non-finite input");
  if (is_hermitian(m)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
    const double scale = std::abs(t) * es.eigenvalues().cwiseAbs().maxCoeff();
    if (scale > kMaxHermitianPhase) throw OverflowError("mat_exp: |t|*||M|| exceeds 1e8");
    Eigen::VectorXcd ph(m.rows());
    for (Eigen::Index i = 0; i < ph.size(); ++i) ph(i) = std::exp(kI * es.eigenvalues()(i) * t);
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  }
  // Frobenius norm bounds the spectral norm from above.
  if (std::abs(t) * m.norm() > kMaxGeneralExponent) throw OverflowError("mat_exp: |t|*||M|| exceeds 1e4");
  const ComplexMatrix arg = (kI * t) * m;
  return arg.exp();
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DimensionError("fit_power_law: need >= 2 paired points");
  Eigen::MatrixXd a(x.size(), 2);
  Eigen::VectorXd b(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("fit_power_law: points must be positive");
    a(i, 0) = 1.0;
    a(i, 1) = std::log(x[i]);
    b(i) = std::log(y[i]);
  }
  const Eigen::Vector2d coef = a.colPivHouseholderQr().solve(b);
  return {coef(1), std::exp(coef(0))};
}

}  // namespace fwlab::linalg
