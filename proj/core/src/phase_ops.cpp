#include "fwlab/phase_ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "fwlab/errors.hpp"

namespace fwlab {

using jet::MatJet;
using jet::SmallMatrix;

namespace {

double max_coeff(const MatJet& m) {
  double r = 0.0;
  for (int i = 0; i < jet::kTerms; ++i)
    if (jet::monomials()[i].degree <= m.order) r = std::max(r, m.c[i].cwiseAbs().maxCoeff());
  return r;
}

double scale_of(const OpJet& x) {
  double s = x.a.value().norm();
  if (x.first_order)
    for (const auto& b : x.b) s = std::max(s, b.value().norm());
  return s;
}

void require_same_dim(const OpJet& x, const OpJet& y, const char* where) {
  if (x.dim() != y.dim()) {
    std::ostringstream os;
    os << where << ": dimension mismatch " << x.dim() << " vs " << y.dim();
    throw DimensionError(os.str());
  }
}

ComplexMatrix to_dense(const SmallMatrix& m) { return m; }

}  // namespace

int OpJet::order() const {
  int o = a.order;
  if (first_order)
    for (const auto& bk : b) o = std::min(o, bk.order);
  return o;
}

OpJet multiplicative(const MatJet& a) {
  OpJet r;
  r.a = a;
  const int d = jet::dim(a);
  r.b = {jet::mat_zero(d), jet::mat_zero(d), jet::mat_zero(d)};
  r.first_order = false;
  return r;
}

OpJet position_like(const MatJet& a, int k) {
  OpJet r = multiplicative(a);
  const int d = jet::dim(a);
  r.b[k] = jet::mat_constant(kI * ComplexMatrix::Identity(d, d));
  r.first_order = true;
  return r;
}

// ---- PhaseOpValue ---------------------------------------------------------

PhaseOpValue PhaseOpValue::zero(int dim) {
  PhaseOpValue v;
  const ComplexMatrix z = ComplexMatrix::Zero(dim, dim);
  v.a = z;
  for (auto& b : v.b) b = z;
  for (auto& row : v.second)
    for (auto& s : row) s = z;
  return v;
}

double PhaseOpValue::norm() const {
  double s = a.squaredNorm();
  for (const auto& bk : b) s += bk.squaredNorm();
  for (const auto& row : second)
    for (const auto& x : row) s += x.squaredNorm();
  return std::sqrt(s);
}

PhaseOpValue& PhaseOpValue::operator+=(const PhaseOpValue& o) {
  a += o.a;
  for (int k = 0; k < 3; ++k) b[k] += o.b[k];
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) second[k][l] += o.second[k][l];
  return *this;
}

PhaseOpValue& PhaseOpValue::operator-=(const PhaseOpValue& o) {
  a -= o.a;
  for (int k = 0; k < 3; ++k) b[k] -= o.b[k];
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) second[k][l] -= o.second[k][l];
  return *this;
}

PhaseOpValue& PhaseOpValue::operator*=(Complex s) {
  a *= s;
  for (auto& bk : b) bk *= s;
  for (auto& row : second)
    for (auto& x : row) x *= s;
  return *this;
}

PhaseOpValue operator+(PhaseOpValue a, const PhaseOpValue& b) { return a += b; }
PhaseOpValue operator-(PhaseOpValue a, const PhaseOpValue& b) { return a -= b; }
PhaseOpValue operator*(Complex s, PhaseOpValue a) { return a *= s; }

// ---- jet-level algebra ----------------------------------------------------

OpJet operator+(const OpJet& x, const OpJet& y) {
  require_same_dim(x, y, "operator +");
  OpJet r;
  r.a = x.a + y.a;
  for (int k = 0; k < 3; ++k) r.b[k] = x.b[k] + y.b[k];
  r.first_order = x.first_order || y.first_order;
  return r;
}

OpJet operator-(const OpJet& x, const OpJet& y) { return x + Complex(-1.0) * y; }

OpJet operator*(Complex s, const OpJet& x) {
  OpJet r;
  r.a = s * x.a;
  for (int k = 0; k < 3; ++k) r.b[k] = s * x.b[k];
  r.first_order = x.first_order;
  return r;
}

OpJet operator*(const OpJet& x, const OpJet& y) {
  require_same_dim(x, y, "operator product");
  if (x.first_order && y.first_order)
    throw NumericalError("operator product: both factors carry derivative parts");
  OpJet r;
  if (!x.first_order) {
    r.a = x.a * y.a;
    for (int k = 0; k < 3; ++k) r.b[k] = x.a * y.b[k];
    r.first_order = y.first_order;
    return r;
  }
  // (A + B_k d_k) C = A C + B_k (d_k C) + B_k C d_k
  r.a = x.a * y.a;
  for (int k = 0; k < 3; ++k) {
    r.a = r.a + x.b[k] * jet::derivative(y.a, k);
    r.b[k] = x.b[k] * y.a;
  }
  r.first_order = true;
  return r;
}

OpJet commutator(const OpJet& x, const OpJet& y) {
  require_same_dim(x, y, "commutator");
  const int d = x.dim();
  OpJet r;
  r.a = jet::commutator(x.a, y.a);
  for (int k = 0; k < 3; ++k) r.b[k] = jet::mat_zero(d);
  if (!x.first_order && !y.first_order) {
    r.first_order = false;
    return r;
  }
  for (int k = 0; k < 3; ++k) {
    if (x.first_order) r.a = r.a + x.b[k] * jet::derivative(y.a, k);
    if (y.first_order) r.a = r.a - y.b[k] * jet::derivative(x.a, k);
  }
  for (int l = 0; l < 3; ++l) {
    MatJet bl = jet::commutator(x.a, y.b[l]) + jet::commutator(x.b[l], y.a);
    for (int k = 0; k < 3; ++k) {
      if (x.first_order) bl = bl + x.b[k] * jet::derivative(y.b[l], k);
      if (y.first_order) bl = bl - y.b[k] * jet::derivative(x.b[l], k);
    }
    r.b[l] = bl;
  }
  const double tol = 1e-12 * (1.0 + scale_of(x)) * (1.0 + scale_of(y));
  if (x.first_order && y.first_order) {
    for (int k = 0; k < 3; ++k)
      for (int l = k; l < 3; ++l) {
        const MatJet s = x.b[k] * y.b[l] + x.b[l] * y.b[k] - y.b[k] * x.b[l] - y.b[l] * x.b[k];
        if (max_coeff(s) > tol)
          throw NumericalError("commutator: second-order part does not vanish");
      }
  }
  double bmax = 0.0;
  for (const auto& bl : r.b) bmax = std::max(bmax, max_coeff(bl));
  r.first_order = bmax > tol;
  if (!r.first_order)
    for (auto& bl : r.b) bl = jet::mat_zero(d);
  return r;
}

OpJet anticommutator(const OpJet& x, const OpJet& y) { return x * y + y * x; }

PhaseOpValue value(const OpJet& x) {
  jet::require_order(x.order(), 0, "value");
  PhaseOpValue v = PhaseOpValue::zero(x.dim());
  v.a = to_dense(x.a.value());
  if (x.first_order)
    for (int k = 0; k < 3; ++k) v.b[k] = to_dense(x.b[k].value());
  return v;
}

PhaseOpValue commutator_value(const OpJet& x, const OpJet& y) {
  require_same_dim(x, y, "commutator_value");
  const bool any_first = x.first_order || y.first_order;
  jet::require_order(std::min(x.order(), y.order()), any_first ? 1 : 0, "commutator_value");
  PhaseOpValue v = PhaseOpValue::zero(x.dim());
  const SmallMatrix& A = x.a.value();
  const SmallMatrix& C = y.a.value();
  v.a = A * C - C * A;
  if (!any_first) return v;
  std::array<SmallMatrix, 3> B, D;
  for (int k = 0; k < 3; ++k) {
    B[k] = x.b[k].value();
    D[k] = y.b[k].value();
  }
  for (int k = 0; k < 3; ++k) v.a += B[k] * y.a.slope(k) - D[k] * x.a.slope(k);
  for (int l = 0; l < 3; ++l) {
    SmallMatrix bl = A * D[l] - D[l] * A + B[l] * C - C * B[l];
    for (int k = 0; k < 3; ++k) {
      const SmallMatrix dDl = jet::derivative(y.b[l], k).value();
      const SmallMatrix dBl = jet::derivative(x.b[l], k).value();
      bl += B[k] * dDl - D[k] * dBl;
    }
    v.b[l] = bl;
  }
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      v.second[k][l] = 0.5 * (B[k] * D[l] + B[l] * D[k] - D[k] * B[l] - D[l] * B[k]);
  return v;
}

// ---- operator-level API ---------------------------------------------------

PhaseSpaceOperator::PhaseSpaceOperator(int dim, OperatorLabel label, bool first_order,
                                       Expansion expansion)
    : dim_(dim), label_(std::move(label)), first_order_(first_order), expansion_(std::move(expansion)) {
  if (dim_ < 1 || dim_ > 4) throw DimensionError("PhaseSpaceOperator: dimension must be 1..4");
}

OpJet PhaseSpaceOperator::expand(const Vec3& p) const {
  if (!p.allFinite()) throw DomainError("expand: non-finite momentum");
  OpJet j = expansion_(p);
  if (j.dim() != dim_) throw DimensionError("expand: coefficient dimension mismatch for " + label_.name);
  bool finite = jet::all_finite(j.a);
  for (const auto& bk : j.b) finite = finite && jet::all_finite(bk);
  if (!finite) throw NumericalError("expand: non-finite coefficients for " + label_.name);
  return j;
}

PhaseSpaceOperator PhaseSpaceOperator::renamed(std::string name) const {
  PhaseSpaceOperator r = *this;
  r.label_.name = std::move(name);
  return r;
}

namespace {

OperatorLabel combined(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y, const char* op) {
  return {"(" + x.label().name + op + y.label().name + ")", x.label().rep, -1};
}

}  // namespace

PhaseSpaceOperator operator+(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y) {
  return {x.dim(), combined(x, y, " + "), !x.is_multiplicative() || !y.is_multiplicative(),
          [x, y](const Vec3& p) { return x.expand(p) + y.expand(p); }};
}

PhaseSpaceOperator operator-(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y) {
  return {x.dim(), combined(x, y, " - "), !x.is_multiplicative() || !y.is_multiplicative(),
          [x, y](const Vec3& p) { return x.expand(p) - y.expand(p); }};
}

PhaseSpaceOperator operator*(Complex s, const PhaseSpaceOperator& x) {
  std::ostringstream os;
  os << s << "*" << x.label().name;
  return {x.dim(), {os.str(), x.label().rep, x.label().component}, !x.is_multiplicative(),
          [s, x](const Vec3& p) { return s * x.expand(p); }};
}

PhaseSpaceOperator operator*(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y) {
  return {x.dim(), combined(x, y, " * "), !x.is_multiplicative() || !y.is_multiplicative(),
          [x, y](const Vec3& p) { return x.expand(p) * y.expand(p); }};
}

PhaseSpaceOperator commutator(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y) {
  OperatorLabel l{"[" + x.label().name + ", " + y.label().name + "]", x.label().rep, -1};
  return {x.dim(), std::move(l), !x.is_multiplicative() || !y.is_multiplicative(),
          [x, y](const Vec3& p) { return commutator(x.expand(p), y.expand(p)); }};
}

PhaseSpaceOperator anticommutator(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y) {
  OperatorLabel l{"{" + x.label().name + ", " + y.label().name + "}", x.label().rep, -1};
  return {x.dim(), std::move(l), !x.is_multiplicative() || !y.is_multiplicative(),
          [x, y](const Vec3& p) { return anticommutator(x.expand(p), y.expand(p)); }};
}

PhaseSpaceOperator cross(const std::array<PhaseSpaceOperator, 3>& u,
                         const std::array<PhaseSpaceOperator, 3>& v, int k) {
  const int i = (k + 1) % 3;
  const int j = (k + 2) % 3;
  return u[i] * v[j] - u[j] * v[i];
}

PhaseOpValue evaluate(const PhaseSpaceOperator& op, const Vec3& p) { return value(op.expand(p)); }

PhaseOpValue op_commutator(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y, const Vec3& p) {
  return commutator_value(x.expand(p), y.expand(p));
}

PhaseSpaceOperator conjugate(const PhaseSpaceOperator& op, const PhaseSpaceOperator& u,
                             const PhaseSpaceOperator& u_inv) {
  if (!u.is_multiplicative() || !u_inv.is_multiplicative())
    throw std::invalid_argument("conjugate: U must be multiplicative");
  if (u.dim() != op.dim() || u_inv.dim() != op.dim())
    throw DimensionError("conjugate: dimension mismatch");
  OperatorLabel l{u.label().name + " " + op.label().name + " " + u_inv.label().name, op.label().rep,
                  op.label().component};
  return {op.dim(), std::move(l), !op.is_multiplicative(), [op, u, u_inv](const Vec3& p) {
            const OpJet uj = u.expand(p);
            const OpJet vj = u_inv.expand(p);
            const SmallMatrix prod = uj.a.value() * vj.a.value();
            const double res = (prod - SmallMatrix::Identity(prod.rows(), prod.cols())).norm();
            if (res > 1e-10) {
              std::ostringstream os;
              os << "conjugate: U * U_inv deviates from identity by " << res;
              throw NotUnitaryError(os.str(), res);
            }
            return (uj * op.expand(p)) * vj;
          }};
}

double hermiticity_residual(const PhaseSpaceOperator& op, const Vec3& p) {
  const OpJet j = op.expand(p);
  SmallMatrix div = SmallMatrix::Zero(j.dim(), j.dim());
  double r = 0.0;
  if (j.first_order) {
    jet::require_order(j.order(), 1, "hermiticity_residual");
    for (int k = 0; k < 3; ++k) {
      const SmallMatrix& bk = j.b[k].value();
      r += (bk + bk.adjoint()).squaredNorm();
      div += j.b[k].slope(k);
    }
  }
  const SmallMatrix& a = j.a.value();
  r += (a - a.adjoint() - div).squaredNorm();
  return std::sqrt(r);
}

}  // namespace fwlab
