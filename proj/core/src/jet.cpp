#include "fwlab/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fwlab/errors.hpp"

namespace fwlab::jet {

namespace {

struct Tables {
  std::array<Monomial, kTerms> mono{};
  int lookup[kMaxDegree + 1][kMaxDegree + 1][kMaxDegree + 1];
  struct Pair {
    int i, j, k, degree;
  };
  std::vector<Pair> pairs;  // ordered by target degree
  struct Shift {
    int from, to;
    double factor;
  };
  std::array<std::vector<Shift>, kVars> shifts;

  Tables() {
    int n = 0;
    for (auto& row : lookup)
      for (auto& col : row)
        for (int& v : col) v = -1;
    for (int d = 0; d <= kMaxDegree; ++d)
      for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) {
          const int c = d - a - b;
          mono[n] = {{a, b, c}, d};
          lookup[a][b][c] = n++;
        }
    for (int i = 0; i < kTerms; ++i)
      for (int j = 0; j < kTerms; ++j) {
        const auto& x = mono[i].exp;
        const auto& y = mono[j].exp;
        const int d = mono[i].degree + mono[j].degree;
        if (d > kMaxDegree) continue;
        pairs.push_back({i, j, lookup[x[0] + y[0]][x[1] + y[1]][x[2] + y[2]], d});
      }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& l, const Pair& r) { return l.degree < r.degree; });
    for (int k = 0; k < kVars; ++k)
      for (int i = 0; i < kTerms; ++i) {
        auto e = mono[i].exp;
        if (e[k] == 0) continue;
        const double f = e[k];
        --e[k];
        shifts[k].push_back({i, lookup[e[0]][e[1]][e[2]], f});
      }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

template <class R, class A, class B>
Jet<R> product(const Jet<A>& a, const Jet<B>& b, const R& zero) {
  Jet<R> r;
  r.order = std::min(a.order, b.order);
  r.c.fill(zero);
  if (r.order < 0) return r;
  for (const auto& t : tables().pairs) {
    if (t.degree > r.order) break;
    r.c[t.k] += a.c[t.i] * b.c[t.j];
  }
  return r;
}

template <class T, class Op>
Jet<T> zip(const Jet<T>& a, const Jet<T>& b, Op op) {
  Jet<T> r;
  r.order = std::min(a.order, b.order);
  for (int i = 0; i < kTerms; ++i) r.c[i] = op(a.c[i], b.c[i]);
  return r;
}

template <class T, class Op>
Jet<T> map(const Jet<T>& a, Op op) {
  Jet<T> r;
  r.order = a.order;
  for (int i = 0; i < kTerms; ++i) r.c[i] = op(a.c[i]);
  return r;
}

SmallMatrix zero_like(const MatJet& m) { return SmallMatrix::Zero(dim(m), dim(m)); }

void require_same_dim(const MatJet& a, const MatJet& b, const char* where) {
  if (dim(a) != dim(b)) throw DimensionError(std::string(where) + ": matrix jet dimension mismatch");
}

}  // namespace

const std::array<Monomial, kTerms>& monomials() { return tables().mono; }

int index_of(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c > kMaxDegree) return -1;
  return tables().lookup[a][b][c];
}

ScalarJet constant(double v) {
  ScalarJet r;
  r.c.fill(0.0);
  r.c[0] = v;
  return r;
}

ScalarJet variable(int k, double at) {
  ScalarJet r = constant(at);
  r.c[unit_index(k)] = 1.0;
  return r;
}

std::array<ScalarJet, 3> momentum_jets(const Vec3& p) {
  return {variable(0, p(0)), variable(1, p(1)), variable(2, p(2))};
}

MatJet mat_zero(int d) {
  MatJet r;
  r.c.fill(SmallMatrix::Zero(d, d));
  return r;
}

MatJet mat_constant(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > 4)
    throw DimensionError("mat_constant: matrix jets hold square matrices up to 4x4");
  MatJet r = mat_zero(static_cast<int>(m.rows()));
  r.c[0] = m;
  return r;
}

int dim(const MatJet& m) { return static_cast<int>(m.c[0].rows()); }

ScalarJet operator+(const ScalarJet& a, const ScalarJet& b) {
  return zip(a, b, [](double x, double y) { return x + y; });
}
ScalarJet operator-(const ScalarJet& a, const ScalarJet& b) {
  return zip(a, b, [](double x, double y) { return x - y; });
}
ScalarJet operator-(const ScalarJet& a) {
  return map(a, [](double x) { return -x; });
}
ScalarJet operator*(const ScalarJet& a, const ScalarJet& b) { return product(a, b, 0.0); }
ScalarJet operator*(double s, const ScalarJet& a) {
  return map(a, [s](double x) { return s * x; });
}
ScalarJet operator+(double s, const ScalarJet& a) {
  ScalarJet r = a;
  r.c[0] += s;
  return r;
}
ScalarJet operator/(const ScalarJet& a, const ScalarJet& b) { return a * reciprocal(b); }
ScalarJet operator/(double s, const ScalarJet& a) { return s * reciprocal(a); }

ScalarJet compose(const ScalarJet& a, const std::array<double, kMaxDegree + 1>& taylor) {
  ScalarJet delta = a;
  delta.c[0] = 0.0;
  ScalarJet r = constant(taylor[0]);
  r.order = a.order;
  ScalarJet power = delta;
  for (int n = 1; n <= kMaxDegree; ++n) {
    r = r + taylor[n] * power;
    if (n < kMaxDegree) power = power * delta;
  }
  return r;
}

ScalarJet sqrt(const ScalarJet& a) {
  const double x = a.value();
  if (!(x > 0.0)) throw DomainError("jet sqrt: argument must be positive at the expansion point");
  const double s = std::sqrt(x);
  return compose(a, {s, 0.5 / s, -0.125 / (s * x), 0.0625 / (s * x * x)});
}

ScalarJet reciprocal(const ScalarJet& a) {
  const double x = a.value();
  if (x == 0.0 || !std::isfinite(x)) throw DomainError("jet reciprocal: singular argument");
  const double r = 1.0 / x;
  return compose(a, {r, -r * r, r * r * r, -r * r * r * r});
}

MatJet operator+(const MatJet& a, const MatJet& b) {
  require_same_dim(a, b, "matjet +");
  return zip(a, b, [](const SmallMatrix& x, const SmallMatrix& y) -> SmallMatrix { return x + y; });
}
MatJet operator-(const MatJet& a, const MatJet& b) {
  require_same_dim(a, b, "matjet -");
  return zip(a, b, [](const SmallMatrix& x, const SmallMatrix& y) -> SmallMatrix { return x - y; });
}
MatJet operator-(const MatJet& a) {
  return map(a, [](const SmallMatrix& x) -> SmallMatrix { return -x; });
}
MatJet operator*(const MatJet& a, const MatJet& b) {
  require_same_dim(a, b, "matjet *");
  return product(a, b, zero_like(a));
}
MatJet operator*(const ScalarJet& s, const MatJet& m) { return product(s, m, zero_like(m)); }
MatJet operator*(const MatJet& m, const ScalarJet& s) { return s * m; }
MatJet operator*(Complex s, const MatJet& m) {
  return map(m, [s](const SmallMatrix& x) -> SmallMatrix { return s * x; });
}
MatJet operator*(const ScalarJet& s, const ComplexMatrix& m) {
  MatJet r = mat_constant(m);
  r.order = s.order;
  for (int i = 0; i < kTerms; ++i) r.c[i] = s.c[i] * m;
  return r;
}
MatJet operator*(const ComplexMatrix& m, const MatJet& a) {
  const SmallMatrix mm = m;
  return map(a, [&mm](const SmallMatrix& x) -> SmallMatrix { return mm * x; });
}
MatJet operator*(const MatJet& a, const ComplexMatrix& m) {
  const SmallMatrix mm = m;
  return map(a, [&mm](const SmallMatrix& x) -> SmallMatrix { return x * mm; });
}

MatJet adjoint(const MatJet& m) {
  return map(m, [](const SmallMatrix& x) -> SmallMatrix { return x.adjoint(); });
}

MatJet inverse(const MatJet& m) {
  const SmallMatrix m0 = m.value();
  Eigen::FullPivLU<SmallMatrix> lu(m0);
  if (!lu.isInvertible()) throw DomainError("jet inverse: singular matrix at the expansion point");
  const SmallMatrix inv0 = lu.inverse();
  MatJet delta = m;
  delta.c[0].setZero();
  const MatJet n = -(ComplexMatrix(inv0) * delta);
  MatJet sum = mat_constant(ComplexMatrix::Identity(dim(m), dim(m)));
  sum.order = m.order;
  MatJet power = n;
  for (int k = 1; k <= kMaxDegree; ++k) {
    sum = sum + power;
    if (k < kMaxDegree) power = power * n;
  }
  return sum * ComplexMatrix(inv0);
}

MatJet commutator(const MatJet& a, const MatJet& b) { return a * b - b * a; }

template <class T>
Jet<T> derivative(const Jet<T>& f, int k) {
  if (k < 0 || k >= kVars) throw DimensionError("jet derivative: variable index out of range");
  Jet<T> r = map(f, [](const T& x) -> T { return T(x * 0.0); });
  r.order = f.order - 1;
  for (const auto& s : tables().shifts[k]) r.c[s.to] = s.factor * f.c[s.from];
  return r;
}

template ScalarJet derivative(const ScalarJet&, int);
template MatJet derivative(const MatJet&, int);

void require_order(int order, int needed, const char* where) {
  if (order < needed)
    throw NumericalError(std::string(where) + ": jet carries too few derivative orders (have " +
                         std::to_string(order) + ", need " + std::to_string(needed) + ")");
}

bool all_finite(const MatJet& m) {
  for (const auto& x : m.c)
    if (!x.real().allFinite() || !x.imag().allFinite()) return false;
  return true;
}

}  // namespace fwlab::jet
