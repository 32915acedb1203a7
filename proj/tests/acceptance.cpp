// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any selected criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fwlab/algebra_suite.hpp"
#include "fwlab/dirac_basis.hpp"
#include "fwlab/eriksen.hpp"
#include "fwlab/grid.hpp"
#include "fwlab/linalg.hpp"
#include "fwlab/phase_ops.hpp"
#include "fwlab/spin_dynamics.hpp"
#include "fwlab/wavepacket.hpp"
#include "fwlab/zitter.hpp"
#include "support/oracles.hpp"

using namespace fwlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", value);
    if (!detail.empty()) detail += "; ";
    detail += what + "=" + buf + (ok ? "" : " [FAIL]");
    pass = pass && ok;
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const std::vector<double> kMasses{0.5, 1.0, 10.0};

const AlgebraReport& report(const std::vector<AlgebraReport>& r, const std::string& id) {
  for (const auto& x : r)
    if (x.identity_id == id) return x;
  throw std::runtime_error("missing identity " + id);
}

Outcome poincare_algebra() {
  Outcome o;
  Stopwatch clock;
  double worst = 0.0;
  std::string worst_id;
  bool all = true;
  for (double m : kMasses) {
    for (const auto& r : run_quantum_suite(OperatorSetName::conventional, m, 100)) {
      all = all && r.pass;
      if (r.max_residual > worst) {
        worst = r.max_residual;
        worst_id = r.identity_id;
      }
    }
  }
  o.require(all && worst <= 1e-8, "max_residual", worst);
  if (!all) o.detail += " at " + worst_id;
  o.require(clock.seconds() < 10.0, "runtime_s", clock.seconds());
  return o;
}

Outcome naive_dirac_boosts() {
  Outcome o;
  for (double m : kMasses) {
    const auto r = run_quantum_suite(OperatorSetName::naive_dirac, m, 100);
    const auto& kk = report(r, "[K_i,K_j]=-ie_ijk j_k");
    o.require(kk.fraction_above_floor >= 0.95, "fraction>=1e-3 m=" + std::to_string(m).substr(0, 4),
              kk.fraction_above_floor);
  }
  return o;
}

Outcome position_dichotomy() {
  Outcome o;
  SuiteConfig cfg;
  cfg.floor = 1e-3;
  for (double m : kMasses) {
    const auto conv = run_quantum_suite(OperatorSetName::conventional, m, 100, cfg);
    o.require(report(conv, "[q_i,q_j]=0").max_residual <= 1e-12, "[x,x]", report(conv, "[q_i,q_j]=0").max_residual);
  }
  for (OperatorSetName s : {OperatorSetName::center_of_mass, OperatorSetName::projected}) {
    const auto r = run_quantum_suite(s, 1.0, 100, cfg);
    const auto& qq = report(r, "[q_i,q_j]=0");
    o.require(qq.fraction_above_floor >= 0.95, std::string(to_string(s)) + " fraction>=1e-3", qq.fraction_above_floor);
  }
  return o;
}

Outcome representation_consistency() {
  Outcome o;
  const auto ps = sample_momenta(50, 2024);
  double worst_x = 0.0, worst_s = 0.0, worst_l = 0.0, worst_k = 0.0;
  for (double m : kMasses) {
    const auto u = fw_unitary_free(m), ui = fw_unitary_free_inverse(m);
    const auto x_d = build_vector(Family::nw_position_dirac, Rep::dirac, m);
    const auto p_d = build_vector(Family::momentum, Rep::dirac, m);
    for (int k = 0; k < 3; ++k) {
      const auto x = conjugate(build_operator(Family::fw_position, Rep::fw, m, k), ui, u);
      const auto s = conjugate(build_operator(Family::fw_spin, Rep::fw, m, k), ui, u);
      const auto l = conjugate(build_operator(Family::oam_fw, Rep::fw, m, k), ui, u);
      const auto kb = conjugate(build_operator(Family::boost_fw, Rep::fw, m, k), ui, u);
      const auto l_d = cross(x_d, p_d, k);
      const auto k_d = build_operator(Family::boost_dirac, Rep::dirac, m, k);
      const auto s_d = build_operator(Family::mean_spin_dirac, Rep::dirac, m, k);
      for (const Vec3& p : ps) {
        worst_x = std::max(worst_x, test::max_abs_diff(evaluate(x, p), evaluate(x_d[k], p)));
        worst_s = std::max(worst_s, test::max_abs_diff(evaluate(s, p), evaluate(s_d, p)));
        worst_l = std::max(worst_l, test::max_abs_diff(evaluate(l, p), evaluate(l_d, p)));
        worst_k = std::max(worst_k, test::max_abs_diff(evaluate(kb, p), evaluate(k_d, p)));
      }
    }
  }
  o.require(worst_x <= 1e-10, "position", worst_x);
  o.require(worst_s <= 1e-10, "spin", worst_s);
  o.require(worst_l <= 1e-10, "oam", worst_l);
  o.require(worst_k <= 1e-10, "boost", worst_k);
  return o;
}

Outcome eriksen_exactness() {
  Outcome o;
  Stopwatch clock;
  const double m = 1.0;
  const Grid1D g{64, 32.0};
  const BlockedHamiltonian free = discretize_dirac_1d(g, m, nullptr);
  const ComplexMatrix u = eriksen_unitary(free);
  const EriksenDiagnostics d = eriksen_diagnostics(free, u);
  const ComplexMatrix t = u * free.H() * u.adjoint();
  const Eigen::VectorXd upper = linalg::hermitian_eigenvalues(t.topLeftCorner(free.half(), free.half()));
  std::vector<double> expect;
  for (int j = 0; j < g.n; ++j) expect.insert(expect.end(), 2, std::sqrt(m * m + g.p(j) * g.p(j)));
  std::sort(expect.begin(), expect.end());
  double spec = 0.0;
  for (Eigen::Index i = 0; i < upper.size(); ++i) spec = std::max(spec, std::abs(upper(i) - expect[i]));
  o.require(d.off_block <= 1e-9, "off_block", d.off_block);
  o.require(spec <= 1e-10, "positive_spectrum", spec);
  o.require(d.beta_condition <= 1e-10, "betaU-Udag_beta", d.beta_condition);
  o.require(d.lambda_squared <= 1e-10, "lambda^2-I", d.lambda_squared);

  std::vector<double> v0s{1e-3, 1e-2, 1e-1}, diffs;
  for (double v0 : v0s) {
    const auto h = discretize_dirac_1d(g, m, [v0](double x) { return v0 * std::exp(-x * x / 8.0); });
    diffs.push_back(compare_exact_approx(h).even_spectrum_diff);
  }
  const double k = linalg::fit_power_law(v0s, diffs).exponent;
  o.require(std::abs(k - 2.0) <= 0.3, "even_block_exponent", k);
  o.require(clock.seconds() < 30.0, "runtime_s", clock.seconds());
  return o;
}

Outcome spin_precession() {
  Outcome o;
  std::mt19937_64 rng(606);
  double worst = 0.0, worst_omega = 0.0;
  for (int n = 0; n < 20; ++n) {
    FieldConfig f;
    f.E = test::random_vec(rng, 1.0);
    f.B = test::random_vec(rng, 1.0);
    f.a_mm = test::uniform(rng, -0.5, 2.0);
    f.eta = test::uniform(rng, -0.5, 0.5);
    f.charge = n % 2 == 0 ? 1.0 : -1.0;
    const double m = test::uniform(rng, 0.5, 2.0);
    const Vec3 p = test::random_vec(rng, 3.0);
    const Vec3 w_classical = omega_total(p, m, f);
    const Vec3 w_quantum = omega_from_block(spin_hamiltonian_fw(p, m, f).topLeftCorner(2, 2));
    worst_omega = std::max(worst_omega, (w_quantum - w_classical).norm() / (1.0 + w_classical.norm()));
    const Vec3 s0 = test::random_vec(rng, 1.0).normalized();
    const Spinor chi0 = spinor_along(s0);
    const double t_max = 100.0 / std::max(w_classical.norm(), 1e-12);
    for (int j = 0; j <= 10; ++j) {
      const double t = t_max * j / 10.0;
      const Vec3 sq = spin_expectation(propagate_quantum(chi0, w_quantum, t));
      worst = std::max(worst, (sq - propagate_classical(s0, w_classical, t)).norm());
    }
  }
  o.require(worst_omega <= 1e-12, "omega_operator_vs_closed", worst_omega);
  o.require(worst <= 1e-12, "quantum_vs_classical_spin", worst);

  FieldConfig mdm;
  mdm.B = {0.3, -0.7, 1.1};
  mdm.a_mm = 0.00116;
  mdm.charge = -1.0;
  const double m = 0.511;
  const Vec3 expect_mdm = -(mdm.charge / m) * (1.0 + mdm.a_mm) * mdm.B;
  const double e_mdm = (omega_total(Vec3::Zero(), m, mdm) - expect_mdm).norm();
  o.require(e_mdm <= 1e-12, "rest_mdm_rate", e_mdm);
  FieldConfig edm;
  edm.E = {0.4, 0.2, -0.9};
  edm.eta = 0.25;
  const Vec3 expect_edm = -(edm.charge * edm.eta / (2.0 * m)) * edm.E;
  const double e_edm = (omega_total(Vec3::Zero(), m, edm) - expect_edm).norm();
  o.require(e_edm <= 1e-12, "rest_edm_rate", e_edm);
  return o;
}

Outcome noninertial_frame() {
  Outcome o;
  std::mt19937_64 rng(707);
  double worst_op = 0.0, worst_closed = 0.0;
  for (int n = 0; n < 100; ++n) {
    FieldConfig f;
    f.frame_accel = test::random_vec(rng, 2.0);
    f.frame_omega = test::random_vec(rng, 1.0);
    const double m = test::uniform(rng, 0.2, 3.0);
    const Vec3 p = test::random_vec(rng, 5.0);
    const Vec3 classical = omega_noninertial_classical(p, m, f);
    const Vec3 block = omega_from_block(noninertial_spin_hamiltonian_fw(p, m, f).topLeftCorner(2, 2));
    const Vec3 closed = f.frame_accel.cross(p) / (energy(p, m) + m) - f.frame_omega;
    worst_op = std::max(worst_op, (block - classical).norm());
    worst_closed = std::max(worst_closed, (closed - classical).norm());
  }
  o.require(worst_op <= 1e-12, "operator_block_vs_classical", worst_op);
  o.require(worst_closed <= 1e-12, "closed_form_vs_classical", worst_closed);
  return o;
}

ComplexMatrix position_oracle(Rep rep, const Vec3& p, double m, double t, int k) {
  const auto ham = [rep, m](const Vec3& q) {
    return rep == Rep::dirac ? dirac_hamiltonian(q, m) : fv_hamiltonian_matrix(q, m);
  };
  const ComplexMatrix fwd = linalg::mat_exp(ham(p), t);
  const auto back = [&](const Vec3& q) { return ComplexMatrix(linalg::mat_exp(ham(q), -t)); };
  return kI * fwd * test::fd_derivative(back, p, k);
}

Outcome zitterbewegung() {
  Outcome o;
  const std::vector<Vec3> ps{{1, 0, 0}, {0.3, -0.8, 1.2}, {0, 0, 0}, {2.5, 1.0, -0.4}};
  const std::vector<double> ms{1.0, 0.7, 1.0, 2.0};
  double num_closed = 0.0, freq = 0.0, fw_var = 0.0, pos = 0.0;
  double fv_num_closed = 0.0, fv_freq = 0.0, fv_pos = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Vec3& p = ps[i];
    const double m = ms[i], eps = energy(p, m);
    for (int k = 0; k < 3; ++k) {
      for (Rep rep : {Rep::dirac, Rep::fv}) {
        const auto num = record_evolution(rep, p, m, k, 10.0, 2001, Route::numeric);
        const auto closed = record_evolution(rep, p, m, k, 10.0, 2001, Route::closed);
        double d = 0.0;
        for (std::size_t n = 0; n < num.velocity.size(); ++n)
          d = std::max(d, (num.velocity[n] - closed.velocity[n]).norm());
        const double w = dominant_frequency(num);
        const bool trembles = rep == Rep::dirac || p(k) != 0.0;
        const double rel = trembles ? std::abs(w - 2 * eps) / (2 * eps) : 0.0;
        double dp = 0.0;
        for (double t : {0.3, 1.0, 2.0}) {
          const ComplexMatrix closed_pos =
              rep == Rep::dirac ? dirac_position_closed(p, m, t, k) : fv_closed(p, m, t, k).position;
          dp = std::max(dp, (closed_pos - position_oracle(rep, p, m, t, k)).norm());
        }
        if (rep == Rep::dirac) {
          num_closed = std::max(num_closed, d);
          freq = std::max(freq, rel);
          pos = std::max(pos, dp);
        } else {
          fv_num_closed = std::max(fv_num_closed, d);
          fv_freq = std::max(fv_freq, rel);
          fv_pos = std::max(fv_pos, dp);
        }
      }
      if (p.norm() > 0.0) {
        const auto fw = record_evolution(Rep::fw, p, m, k, 10.0, 201, Route::numeric);
        for (const auto& v : fw.velocity) fw_var = std::max(fw_var, (v - fw.velocity.front()).norm());
      }
    }
  }
  o.require(num_closed <= 1e-9, "dirac_velocity", num_closed);
  o.require(pos <= 1e-9, "dirac_position", pos);
  o.require(freq <= 1e-6, "dirac_frequency_rel", freq);
  o.require(fw_var <= 1e-12, "fw_velocity_variation", fw_var);
  o.require(fv_num_closed <= 1e-9, "fv_velocity", fv_num_closed);
  o.require(fv_pos <= 1e-9, "fv_position", fv_pos);
  o.require(fv_freq <= 1e-6, "fv_frequency_rel", fv_freq);
  return o;
}

Outcome densities_and_pce() {
  Outcome o;
  Stopwatch clock;
  const Grid1D g{256, 64.0};
  PacketSpec spec;
  spec.m = 1.0;
  spec.p0 = 2.0 * spec.m;
  spec.sigma_p = 0.5 * spec.m;
  spec.spin_dir = Vec3(1, 1, 0).normalized();
  const WavePacket1D fw = make_gaussian_packet(g, spec);
  const WavePacket1D dirac = to_picture(fw, Picture::dirac);
  const double nf = density(fw).sum() * g.dx(), nd = density(dirac).sum() * g.dx();
  o.require(std::abs(nf - 1.0) <= 1e-10 && std::abs(nd - 1.0) <= 1e-10, "normalization_err",
            std::max(std::abs(nf - 1.0), std::abs(nd - 1.0)));
  const double gap = relative_density_gap(fw);
  o.require(gap >= 0.01, "density_gap_rel", gap);
  const double pce_p = picture_change_error(fw, Observable::of(ObservableKind::momentum));
  o.require(std::abs(pce_p) <= 1e-12, "pce_p", std::abs(pce_p));
  const double x2 = expectation(fw, Observable::of(ObservableKind::position_sq), Convention::fw_picture);
  const double pce_x2 = picture_change_error(fw, Observable::of(ObservableKind::position_sq));
  o.require(std::abs(pce_x2) > 1e-4 * x2, "pce_x2/<x2>", std::abs(pce_x2) / x2);

  std::vector<double> ratio, gaps;
  for (double m : {50.0, 25.0, 10.0}) {
    PacketSpec nr;
    nr.m = m;
    nr.sigma_p = 0.5;
    nr.p0 = 0.0;
    ratio.push_back(nr.sigma_p / m);
    gaps.push_back(relative_density_gap(make_gaussian_packet(g, nr)));
  }
  const double k = linalg::fit_power_law(ratio, gaps).exponent;
  o.require(std::abs(k - 2.0) <= 0.3, "nonrel_exponent", k);
  o.require(clock.seconds() < 20.0, "runtime_s", clock.seconds());
  return o;
}

Outcome soi_nonexistence() {
  Outcome o;
  const auto ps = sample_momenta(100, 1010);
  double worst_s = 0.0, worst_l = 0.0, worst_c = 0.0;
  for (double m : kMasses) {
    const auto h = build_operator(Family::fw_hamiltonian, Rep::fw, m);
    const auto s = build_vector(Family::fw_spin, Rep::fw, m);
    const auto l = build_vector(Family::oam_fw, Rep::fw, m);
    const auto w = build_vector(Family::pauli_lubanski_space, Rep::fw, m);
    const auto w0 = build_operator(Family::pauli_lubanski_time, Rep::fw, m);
    for (const Vec3& p : ps) {
      ComplexMatrix c = evaluate(w0, p).a * evaluate(w0, p).a + 0.75 * m * m * ComplexMatrix::Identity(4, 4);
      for (int k = 0; k < 3; ++k) {
        worst_s = std::max(worst_s, op_commutator(h, s[k], p).norm());
        worst_l = std::max(worst_l, op_commutator(h, l[k], p).norm());
        const ComplexMatrix wk = evaluate(w[k], p).a;
        c -= wk * wk;
      }
      worst_c = std::max(worst_c, c.norm());
    }
  }
  o.require(worst_s <= 1e-12, "[H,s]", worst_s);
  o.require(worst_l <= 1e-12, "[H,l]", worst_l);
  o.require(worst_c <= 1e-10, "casimir", worst_c);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "poincare_algebra_conventional_set", poincare_algebra},
      {2, "naive_dirac_boost_commutators_fail", naive_dirac_boosts},
      {3, "position_commutativity_dichotomy", position_dichotomy},
      {4, "representation_consistency", representation_consistency},
      {5, "eriksen_exactness_and_v0_scaling", eriksen_exactness},
      {6, "spin_precession_quantum_vs_classical", spin_precession},
      {7, "noninertial_frame_precession", noninertial_frame},
      {8, "zitterbewegung_closed_forms", zitterbewegung},
      {9, "densities_and_picture_change_error", densities_and_pce},
      {10, "no_spin_orbit_term_and_casimir", soi_nonexistence},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fwlab acceptance suite"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criterion number(s), default all")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s C%d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && o.pass;
  }
  return all_ok ? 0 : 1;
}
