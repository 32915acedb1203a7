#include "fwlab/classical.hpp"

#include <array>
#include <cmath>

#include "fwlab/errors.hpp"

namespace fwlab::classical {

namespace {

constexpr double kStep = 1e-6;

enum class Slot { Q, P, S };

double& coord(ClassicalState& s, Slot slot, int i) {
  switch (slot) {
    case Slot::Q: return s.Q(i);
    case Slot::P: return s.P(i);
    case Slot::S: return s.S(i);
  }
  return s.Q(i);
}

double partial(const Observable& f, const ClassicalState& state, Slot slot, int i) {
  ClassicalState s = state;
  double& x = coord(s, slot, i);
  const double x0 = x;
  const double h = kStep * std::max(1.0, std::abs(x0));
  auto central = [&](double step) {
    x = x0 + step;
    const double fp = f(s);
    x = x0 - step;
    const double fm = f(s);
    x = x0;
    return (fp - fm) / (2.0 * step);
  };
  const double coarse = central(h);
  const double fine = central(0.5 * h);
  const double d = (4.0 * fine - coarse) / 3.0;
  if (!std::isfinite(d)) throw NumericalError("poisson_bracket: non-finite gradient");
  return d;
}

std::array<double, 3> gradient(const Observable& f, const ClassicalState& s, Slot slot) {
  return {partial(f, s, slot, 0), partial(f, s, slot, 1), partial(f, s, slot, 2)};
}

double energy(const ClassicalState& s) { return std::sqrt(s.m * s.m + s.P.squaredNorm()); }

}  // namespace

double poisson_bracket(const Observable& f, const Observable& g, const ClassicalState& state) {
  const auto fq = gradient(f, state, Slot::Q);
  const auto fp = gradient(f, state, Slot::P);
  const auto fs = gradient(f, state, Slot::S);
  const auto gq = gradient(g, state, Slot::Q);
  const auto gp = gradient(g, state, Slot::P);
  const auto gs = gradient(g, state, Slot::S);
  double r = 0.0;
  for (int i = 0; i < 3; ++i) r += fq[i] * gp[i] - fp[i] * gq[i];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (const int e = levi_civita(i, j, k)) r += e * state.S(k) * fs[i] * gs[j];
  return r;
}

Observable position(int i) {
  return [i](const ClassicalState& s) { return s.Q(i); };
}
Observable momentum(int i) {
  return [i](const ClassicalState& s) { return s.P(i); };
}
Observable spin(int i) {
  return [i](const ClassicalState& s) { return s.S(i); };
}
Observable hamiltonian() { return energy; }
Observable orbital(int i) {
  return [i](const ClassicalState& s) { return s.Q.cross(s.P)(i); };
}
Observable total_j(int i) {
  return [i](const ClassicalState& s) { return s.Q.cross(s.P)(i) + s.S(i); };
}
Observable boost(int i) {
  return [i](const ClassicalState& s) {
    const double h = energy(s);
    return s.Q(i) * h - s.S.cross(s.P)(i) / (s.m + h) - s.t * s.P(i);
  };
}
Observable com_position(int i) {
  return [i](const ClassicalState& s) {
    const double h = energy(s);
    return s.Q(i) + s.S.cross(s.P)(i) / (s.m * (h + s.m));
  };
}
Observable lab_spin(int i) {
  return [i](const ClassicalState& s) {
    const double h = energy(s);
    return s.S(i) - s.P.cross(s.P.cross(s.S))(i) / (s.m * (h + s.m));
  };
}
Observable projected_position(int i) {
  return [i](const ClassicalState& s) {
    const double h = energy(s);
    return s.Q(i) - s.S.cross(s.P)(i) / (h * (h + s.m));
  };
}
Observable projected_position_from_boost(int i) {
  return [i](const ClassicalState& s) { return (s.t * s.P(i) + boost(i)(s)) / energy(s); };
}

}  // namespace fwlab::classical
