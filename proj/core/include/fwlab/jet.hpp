#pragma once

// Truncated multivariate Taylor polynomials in the three momentum components.
// A jet stores the coefficients of f(p0 + d) = sum_a c_a d^a for total degree
// |a| <= order. Leaves are exact to kMaxDegree; each differentiation lowers
// the order by one and a product keeps the smaller order of its factors.

#include <array>
#include <cstddef>

#include "fwlab/types.hpp"

namespace fwlab::jet {

inline constexpr int kVars = 3;
inline constexpr int kMaxDegree = 3;
inline constexpr int kTerms = 20;  // monomials of degree <= 3 in 3 variables

using SmallMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;

struct Monomial {
  std::array<int, kVars> exp;
  int degree;
};

const std::array<Monomial, kTerms>& monomials();
/// Index of x^a y^b z^c, or -1 when a + b + c > kMaxDegree.
int index_of(int a, int b, int c);
inline int unit_index(int k) { return 1 + k; }

template <class T>
struct Jet {
  std::array<T, kTerms> c;
  int order = kMaxDegree;

  const T& value() const { return c[0]; }
  /// First partial derivative at the expansion point.
  const T& slope(int k) const { return c[unit_index(k)]; }
};

using ScalarJet = Jet<double>;
using MatJet = Jet<SmallMatrix>;

// ---- construction ---------------------------------------------------------

ScalarJet constant(double v);
/// The coordinate p_k expanded around p_k = at.
ScalarJet variable(int k, double at);
std::array<ScalarJet, 3> momentum_jets(const Vec3& p);

MatJet mat_zero(int dim);
MatJet mat_constant(const ComplexMatrix& m);
int dim(const MatJet& m);

// ---- scalar arithmetic ----------------------------------------------------

ScalarJet operator+(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator-(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator-(const ScalarJet& a);
ScalarJet operator*(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator*(double s, const ScalarJet& a);
ScalarJet operator+(double s, const ScalarJet& a);
ScalarJet operator/(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator/(double s, const ScalarJet& a);

/// f(a) from the Taylor coefficients f^(n)(a0)/n!, n = 0..kMaxDegree.
ScalarJet compose(const ScalarJet& a, const std::array<double, kMaxDegree + 1>& taylor);
ScalarJet sqrt(const ScalarJet& a);
ScalarJet reciprocal(const ScalarJet& a);

// ---- matrix arithmetic ----------------------------------------------------

MatJet operator+(const MatJet& a, const MatJet& b);
MatJet operator-(const MatJet& a, const MatJet& b);
MatJet operator-(const MatJet& a);
MatJet operator*(const MatJet& a, const MatJet& b);
MatJet operator*(const ScalarJet& s, const MatJet& m);
MatJet operator*(const MatJet& m, const ScalarJet& s);
MatJet operator*(Complex s, const MatJet& m);
MatJet operator*(const ScalarJet& s, const ComplexMatrix& m);
MatJet operator*(const ComplexMatrix& m, const MatJet& a);
MatJet operator*(const MatJet& a, const ComplexMatrix& m);

MatJet adjoint(const MatJet& m);
/// Matrix inverse via the Neumann series around the expansion point.
MatJet inverse(const MatJet& m);
MatJet commutator(const MatJet& a, const MatJet& b);

// ---- calculus -------------------------------------------------------------

template <class T>
Jet<T> derivative(const Jet<T>& f, int k);

extern template ScalarJet derivative(const ScalarJet&, int);
extern template MatJet derivative(const MatJet&, int);

/// Throws NumericalError when the jet does not carry `needed` derivative orders.
void require_order(int order, int needed, const char* where);

bool all_finite(const MatJet& m);

}  // namespace fwlab::jet
