#pragma once

#include <functional>
#include <vector>

#include "fwlab/errors.hpp"
#include "fwlab/types.hpp"

namespace fwlab::linalg {

/// Relative tolerance ‖M − M†‖/‖M‖ under which a matrix counts as Hermitian.
inline constexpr double kHermitianTol = 1e-10;
/// Relative tolerance ‖MM† − M†M‖/‖M‖² under which a matrix counts as normal.
inline constexpr double kNormalTol = 1e-10;
/// Largest |t|·‖M‖ accepted by mat_exp for Hermitian M. Beyond this the phase
/// e^{iλt} carries more than ~1e-8 absolute roundoff.
inline constexpr double kMaxHermitianPhase = 1e8;
/// Largest |t|·‖M‖ accepted by mat_exp for non-Hermitian M (scaling and
/// squaring loses accuracy, and may overflow, past this point).
inline constexpr double kMaxGeneralExponent = 1e4;

bool all_finite(const ComplexMatrix& m);

/// ‖M − M†‖_F / ‖M‖_F (0 for the zero matrix).
double hermiticity_residual(const ComplexMatrix& m);
/// ‖MM† − M†M‖_F / ‖M‖_F².
double normality_residual(const ComplexMatrix& m);
/// ‖UU† − I‖_F.
double unitarity_residual(const ComplexMatrix& u);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

ComplexMatrix identity(Eigen::Index dim);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// f(M) = V f(Λ) V† for a normal matrix, computed from a complex Schur form.
/// Throws NonNormalError when M is not normal within kNormalTol.
ComplexMatrix mat_fn(const ComplexMatrix& m, const std::function<Complex(Complex)>& f);

/// f(M) for Hermitian M and a real function of the (real) spectrum. A NaN
/// returned by f marks an eigenvalue outside the branch and raises BranchError,
/// so passing std::sqrt demands a positive semidefinite input.
ComplexMatrix mat_fn_hermitian(const ComplexMatrix& m, const std::function<double(double)>& f);

/// Principal square root of a Hermitian positive semidefinite matrix
/// (sqrt(I) = I). Eigenvalues down to -1e-12·‖M‖ are clamped to zero.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);
/// Inverse principal square root of a Hermitian positive definite matrix.
ComplexMatrix inv_sqrt_pd(const ComplexMatrix& m);

/// exp(i·M·t). Spectral route for Hermitian M, Padé scaling-and-squaring
/// otherwise. Throws OverflowError above kMaxHermitianPhase / kMaxGeneralExponent.
ComplexMatrix mat_exp(const ComplexMatrix& m, double t);

/// Spectral (largest singular value) norm.
double spectral_norm(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;
};

/// Least-squares fit of log y = log c + k log x. Needs at least two positive points.
PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace fwlab::linalg
