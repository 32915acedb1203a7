#include "fwlab/eriksen.hpp"

#include <cmath>
#include <string>

#include "fwlab/dirac_basis.hpp"
#include "fwlab/errors.hpp"
#include "fwlab/linalg.hpp"

namespace fwlab {

namespace {

constexpr double kZeroModeTol = 1e-8;

void require_square_even(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0)
    throw DimensionError(std::string(what) + " must be square with even nonzero dimension");
}

}  // namespace

ComplexMatrix block_beta(Eigen::Index half) {
  ComplexMatrix b = ComplexMatrix::Zero(2 * half, 2 * half);
  b.topLeftCorner(half, half).setIdentity();
  b.bottomRightCorner(half, half) = -ComplexMatrix::Identity(half, half);
  return b;
}

double off_block_norm(const ComplexMatrix& m) {
  const Eigen::Index h = m.rows() / 2;
  return std::hypot(m.topRightCorner(h, h).norm(), m.bottomLeftCorner(h, h).norm());
}

ComplexMatrix even_part(const ComplexMatrix& m) {
  const Eigen::Index h = m.rows() / 2;
  ComplexMatrix e = m;
  e.topRightCorner(h, h).setZero();
  e.bottomLeftCorner(h, h).setZero();
  return e;
}

BlockedHamiltonian::BlockedHamiltonian(ComplexMatrix h, ComplexMatrix mass)
    : h_(std::move(h)), mass_(std::move(mass)) {
  require_square_even(h_, "Hamiltonian");
  if (mass_.rows() != h_.rows() || mass_.cols() != h_.cols())
    throw DimensionError("mass operator dimension does not match the Hamiltonian");
  if (!linalg::all_finite(h_) || !linalg::all_finite(mass_))
    throw DomainError("Hamiltonian has non-finite entries");
  const double herm = linalg::hermiticity_residual(h_);
  if (herm > linalg::kHermitianTol) throw NonNormalError("Hamiltonian is not Hermitian", herm);
  if (linalg::hermiticity_residual(mass_) > linalg::kHermitianTol)
    throw NonNormalError("mass operator is not Hermitian", linalg::hermiticity_residual(mass_));
  beta_ = block_beta(half());
  if (off_block_norm(mass_) > 1e-12 * (1.0 + mass_.norm()))
    throw DomainError("mass operator must be even (commute with beta)");
}

BlockedHamiltonian::BlockedHamiltonian(ComplexMatrix h, double m)
    : BlockedHamiltonian(h, m * linalg::identity(h.rows())) {}

ComplexMatrix BlockedHamiltonian::even_potential() const {
  return even_part(h_) - beta_ * mass_;
}

ComplexMatrix BlockedHamiltonian::odd() const { return h_ - even_part(h_); }

ComplexMatrix sign_operator(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double gap = ev.cwiseAbs().minCoeff();
  if (gap < kZeroModeTol)
    throw DomainError("Hamiltonian has an eigenvalue within 1e-8 of zero (|lambda| = " +
                      std::to_string(gap) + "), sign operator undefined");
  const Eigen::VectorXd s = ev.unaryExpr([](double x) { return x > 0.0 ? 1.0 : -1.0; });
  return es.eigenvectors() * s.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

ComplexMatrix eriksen_from_lambda(const ComplexMatrix& beta, const ComplexMatrix& lambda) {
  const ComplexMatrix bl = beta * lambda;
  const ComplexMatrix num = linalg::identity(beta.rows()) + bl;
  ComplexMatrix den = 2.0 * linalg::identity(beta.rows()) + bl + bl.adjoint();
  den = 0.5 * (den + den.adjoint()).eval();
  return num * linalg::inv_sqrt_pd(den);
}

}  // namespace

ComplexMatrix eriksen_unitary(const BlockedHamiltonian& h) {
  return eriksen_from_lambda(h.beta(), sign_operator(h.H()));
}

EriksenDiagnostics eriksen_diagnostics(const BlockedHamiltonian& h, const ComplexMatrix& u) {
  const ComplexMatrix& b = h.beta();
  const ComplexMatrix lambda = sign_operator(h.H());
  const ComplexMatrix id = linalg::identity(h.dim());
  EriksenDiagnostics d;
  d.unitarity = linalg::unitarity_residual(u);
  d.beta_condition = (b * u - u.adjoint() * b).norm();
  d.lambda_squared = (lambda * lambda - id).norm();
  d.lambda_commutator = linalg::commutator(b * lambda, lambda * b).norm();
  d.beta_commutator = linalg::commutator(b, b * lambda + lambda * b).norm();
  d.off_block = off_block_norm(u * h.H() * u.adjoint());
  return d;
}

ApproxFW approx_fw(const BlockedHamiltonian& h, const std::optional<ComplexMatrix>& f) {
  const ComplexMatrix& b = h.beta();
  const ComplexMatrix& mass = h.mass();
  const ComplexMatrix odd = h.odd();
  const ComplexMatrix even = h.even_potential();
  const ComplexMatrix id = linalg::identity(h.dim());

  Eigen::FullPivLU<ComplexMatrix> lu(mass);
  if (!lu.isInvertible()) throw DomainError("mass operator is not invertible");
  const ComplexMatrix half_inv_mass = 0.5 * lu.inverse();

  const ComplexMatrix x = linalg::anticommutator(half_inv_mass, odd);
  ComplexMatrix one_plus_x2 = id + x * x;
  one_plus_x2 = 0.5 * (one_plus_x2 + one_plus_x2.adjoint()).eval();
  const ComplexMatrix s = linalg::sqrt_psd(one_plus_x2);
  ComplexMatrix den = 2.0 * s * (id + s);
  den = 0.5 * (den + den.adjoint()).eval();

  ApproxFW out;
  out.U = (id + s + b * x) * linalg::inv_sqrt_pd(den);

  ComplexMatrix eps2 = mass * mass + odd * odd;
  eps2 = 0.5 * (eps2 + eps2.adjoint()).eval();
  const ComplexMatrix eps = linalg::sqrt_psd(eps2);
  const ComplexMatrix d = 2.0 * eps * eps + linalg::anticommutator(eps, mass);
  Eigen::FullPivLU<ComplexMatrix> dlu(d);
  if (!dlu.isInvertible()) throw DomainError("2 eps^2 + {eps, M} is singular");

  const ComplexMatrix& ff = f ? *f : even;
  if (ff.rows() != h.dim() || ff.cols() != h.dim())
    throw DimensionError("F operator dimension does not match the Hamiltonian");
  const ComplexMatrix t = b * linalg::commutator(odd, linalg::commutator(odd, mass)) -
                          linalg::commutator(odd, linalg::commutator(odd, ff));
  out.H_fw = b * eps + even + 0.25 * linalg::anticommutator(dlu.inverse(), t);
  out.transformed = out.U * h.H() * out.U.adjoint();
  return out;
}

ComplexMatrix momentum_matrix(const Grid1D& grid) {
  grid.validate();
  const int n = grid.n;
  // P depends only on a - b, so build the first column and fill the Toeplitz pattern.
  ComplexVector col(2 * n - 1);
  for (int d = -(n - 1); d <= n - 1; ++d) {
    Complex acc = 0.0;
    for (int j = 0; j < n; ++j) acc += grid.p(j) * std::exp(kI * (grid.p(j) * d * grid.dx()));
    col(d + n - 1) = acc / static_cast<double>(n);
  }
  ComplexMatrix p(n, n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) p(a, c) = col(a - c + n - 1);
  return p;
}

BlockedHamiltonian discretize_dirac_1d(const Grid1D& grid, double m,
                                       const std::function<double(double)>& potential) {
  grid.validate();
  if (!(m >= 0.0)) throw DomainError("mass must be non-negative");
  const int n = grid.n;
  const GammaSet& g = gammas();
  const ComplexMatrix p = momentum_matrix(grid);

  Eigen::VectorXd v(n);
  for (int l = 0; l < n; ++l) {
    v(l) = potential ? potential(grid.x(l)) : 0.0;
    if (!std::isfinite(v(l))) throw DomainError("potential is not finite on the grid");
  }

  ComplexMatrix h = ComplexMatrix::Zero(4 * n, 4 * n);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      auto blk = h.block(r * n, c * n, n, n);
      if (g.alpha[0](r, c) != 0.0) blk += g.alpha[0](r, c) * p;
      if (r == c) {
        blk.diagonal() += (g.beta(r, r) * m + v.cast<Complex>().array()).matrix();
      }
    }
  }
  h = 0.5 * (h + h.adjoint()).eval();
  return BlockedHamiltonian(std::move(h), m);
}

}  // namespace fwlab

namespace fwlab {

double even_spectrum_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("spectrum comparison needs equal dims");
  auto herm = [](const ComplexMatrix& m) {
    ComplexMatrix e = even_part(m);
    return ComplexMatrix(0.5 * (e + e.adjoint()));
  };
  const Eigen::VectorXd sa = linalg::hermitian_eigenvalues(herm(a));
  const Eigen::VectorXd sb = linalg::hermitian_eigenvalues(herm(b));
  return (sa - sb).cwiseAbs().maxCoeff();
}

EriksenComparison compare_exact_approx(const BlockedHamiltonian& h) {
  const ComplexMatrix ue = eriksen_unitary(h);
  const ComplexMatrix exact = ue * h.H() * ue.adjoint();
  const ApproxFW ap = approx_fw(h);
  EriksenComparison c;
  c.off_block_exact = off_block_norm(exact);
  c.off_block_approx = off_block_norm(ap.transformed);
  c.even_matrix_diff = (even_part(ap.transformed) - even_part(exact)).norm();
  c.even_spectrum_diff = even_spectrum_distance(ap.transformed, exact);
  c.hfw_spectrum_diff = even_spectrum_distance(ap.H_fw, exact);
  return c;
}

}  // namespace fwlab
