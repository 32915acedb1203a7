#include "fwlab/zitter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "fwlab/dirac_basis.hpp"
#include "fwlab/errors.hpp"
#include "fwlab/linalg.hpp"

namespace fwlab {

namespace {

void require_component(int k) {
  if (k < 0 || k > 2) throw DomainError("component index must be 0, 1 or 2");
}

struct Setup {
  ComplexMatrix h, v0, id;
  double pk = 0.0, eps = 0.0;
};

Setup setup(Rep rep, const Vec3& p, double m, int component) {
  require_component(component);
  if (!p.allFinite()) throw DomainError("momentum has non-finite entries");
  Setup s;
  s.pk = p(component);
  switch (rep) {
    case Rep::dirac:
      s.eps = energy(p, m);
      if (s.eps == 0.0) throw DomainError("m = 0 and p = 0: H is singular");
      s.h = dirac_hamiltonian(p, m);
      s.v0 = gammas().alpha[component];
      break;
    case Rep::fv: {
      if (!(m > 0.0)) throw DomainError("Feshbach-Villars form needs m > 0");
      s.eps = energy(p, m);
      s.h = fv_hamiltonian_matrix(p, m);
      const GammaSet& g = gammas();
      s.v0 = (g.rho[2] + kI * g.rho[1]) * (p(component) / m);
      break;
    }
    case Rep::fw:
      throw DomainError("FW velocity has no oscillating part; use fw_velocity");
  }
  s.id = linalg::identity(s.h.rows());
  return s;
}

// exp(-2iHt) for H^2 = eps^2.
ComplexMatrix oscillator(const Setup& s, double t) {
  const double w = 2.0 * s.eps * t;
  return std::cos(w) * s.id - kI * (std::sin(w) / s.eps) * s.h;
}

ComplexMatrix h_inverse(const Setup& s) { return s.h / (s.eps * s.eps); }

ComplexMatrix velocity_from(const Setup& s, double t) {
  const ComplexMatrix drift = s.pk * h_inverse(s);
  return (s.v0 - drift) * oscillator(s, t) + drift;
}

ComplexMatrix position_from(const Setup& s, double t) {
  const ComplexMatrix hinv = h_inverse(s);
  const ComplexMatrix a = s.v0 - s.pk * hinv;
  return (s.pk * t) * hinv + (0.5 * kI) * a * hinv * (oscillator(s, t) - s.id);
}

}  // namespace

ComplexMatrix fv_hamiltonian_matrix(const Vec3& p, double m) {
  if (!(m > 0.0)) throw DomainError("Feshbach-Villars form needs m > 0");
  const GammaSet& g = gammas();
  return m * g.rho[2] + (g.rho[2] + kI * g.rho[1]) * (p.squaredNorm() / (2.0 * m));
}

ComplexMatrix dirac_velocity_closed(const Vec3& p, double m, double t, int component) {
  return velocity_from(setup(Rep::dirac, p, m, component), t);
}

ComplexMatrix dirac_position_closed(const Vec3& p, double m, double t, int component) {
  return position_from(setup(Rep::dirac, p, m, component), t);
}

ComplexMatrix heisenberg_numeric(const ComplexMatrix& h, const ComplexMatrix& o, double t) {
  if (h.rows() != h.cols() || o.rows() != h.rows() || o.cols() != h.cols())
    throw DimensionError("heisenberg_numeric: H and O must be square with equal dims");
  if (t == 0.0) return o;
  return linalg::mat_exp(h, t) * o * linalg::mat_exp(h, -t);
}

FvZitter fv_closed(const Vec3& p, double m, double t, int component) {
  const Setup s = setup(Rep::fv, p, m, component);
  return {velocity_from(s, t), position_from(s, t)};
}

ComplexMatrix fw_velocity(const Vec3& p, double m, int component) {
  require_component(component);
  const double eps = energy(p, m);
  if (eps == 0.0) throw DomainError("FW velocity undefined for m = 0 and p = 0");
  return gammas().beta * (p(component) / eps);
}

ZitterCoefficients zitter_coefficients(Rep rep, const Vec3& p, double m, int component) {
  const Setup s = setup(rep, p, m, component);
  ZitterCoefficients c;
  c.eps = s.eps;
  c.drift = s.pk * h_inverse(s);
  c.A = s.v0 - c.drift;
  c.A_plus = c.A * (0.5 * (s.id + s.h / s.eps));
  c.A_minus = c.A * (0.5 * (s.id - s.h / s.eps));
  return c;
}

EvolutionRecord record_evolution(Rep rep, const Vec3& p, double m, int component, double t_max,
                                 int samples, Route route) {
  if (samples < 2) throw DomainError("need at least two time samples");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t_max must be positive");
  EvolutionRecord rec;
  rec.rep = rep;
  rec.p = p;
  rec.m = m;
  rec.component = component;
  rec.times.reserve(samples);

  if (rep == Rep::fw) {
    const ComplexMatrix v = fw_velocity(p, m, component);
    const ComplexMatrix h = fw_hamiltonian_matrix(p, m);
    for (int j = 0; j < samples; ++j) {
      const double t = t_max * j / (samples - 1);
      rec.times.push_back(t);
      rec.velocity.push_back(route == Route::numeric ? heisenberg_numeric(h, v, t) : v);
      rec.position.push_back(v * t);
    }
    return rec;
  }

  const Setup s = setup(rep, p, m, component);
  for (int j = 0; j < samples; ++j) {
    const double t = t_max * j / (samples - 1);
    rec.times.push_back(t);
    rec.velocity.push_back(route == Route::numeric ? heisenberg_numeric(s.h, s.v0, t) : velocity_from(s, t));
    rec.position.push_back(position_from(s, t));
  }
  return rec;
}

double extract_frequency(const std::vector<Complex>& series, double dt) {
  if (series.size() < 4) throw DomainError("frequency extraction needs at least four samples");
  if (!(dt > 0.0)) throw DomainError("sample spacing must be positive");
  std::vector<Complex> g(series.size() - 1);
  double scale = 0.0;
  for (std::size_t n = 0; n + 1 < series.size(); ++n) {
    g[n] = series[n + 1] - series[n];
    scale = std::max(scale, std::abs(series[n]));
  }
  Complex num = 0.0;
  double den = 0.0;
  for (std::size_t n = 1; n + 1 < g.size(); ++n) {
    num += std::conj(g[n]) * (g[n + 1] + g[n - 1]);
    den += std::norm(g[n]);
  }
  if (den <= 1e-28 * (1.0 + scale * scale) * static_cast<double>(g.size())) return 0.0;
  const double c = std::clamp(num.real() / (2.0 * den), -1.0, 1.0);
  return std::acos(c) / dt;
}

double dominant_frequency(const EvolutionRecord& rec) {
  if (rec.times.size() < 4) throw DomainError("record too short for frequency extraction");
  const Eigen::Index d = rec.velocity.front().rows();
  double best = -1.0;
  Eigen::Index br = 0, bc = 0;
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      double var = 0.0;
      for (std::size_t n = 0; n + 1 < rec.velocity.size(); ++n)
        var += std::norm(rec.velocity[n + 1](r, c) - rec.velocity[n](r, c));
      if (var > best) {
        best = var;
        br = r;
        bc = c;
      }
    }
  }
  std::vector<Complex> series;
  series.reserve(rec.velocity.size());
  for (const auto& v : rec.velocity) series.push_back(v(br, bc));
  return extract_frequency(series, rec.times[1] - rec.times[0]);
}

void write_csv(const EvolutionRecord& rec, std::ostream& out) {
  if (rec.times.empty()) return;
  const Eigen::Index d = rec.velocity.front().rows();
  out << "t";
  for (const char* tag : {"v", "r"})
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c)
        out << ',' << tag << '_' << r << c << "_re," << tag << '_' << r << c << "_im";
  out << '\n';
  char buf[64];
  auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out << buf;
  };
  for (std::size_t n = 0; n < rec.times.size(); ++n) {
    put(rec.times[n]);
    for (const auto* series : {&rec.velocity, &rec.position}) {
      const ComplexMatrix& mtx = (*series)[n];
      for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) {
          out << ',';
          put(mtx(r, c).real());
          out << ',';
          put(mtx(r, c).imag());
        }
    }
    out << '\n';
  }
}

}  // namespace fwlab
