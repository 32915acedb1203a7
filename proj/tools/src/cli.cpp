#include "fwlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fwlab/algebra_suite.hpp"
#include "fwlab/dirac_basis.hpp"
#include "fwlab/eriksen.hpp"
#include "fwlab/errors.hpp"
#include "fwlab/linalg.hpp"
#include "fwlab/spin_dynamics.hpp"
#include "fwlab/wavepacket.hpp"
#include "fwlab/zitter.hpp"

namespace fwlab::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[48];
  const double a = std::abs(v);
  if (v == 0.0)
    return "0";
  else if (a >= 1e-4 && a < 1e6)
    std::snprintf(buf, sizeof buf, "%.10f", v);
  else
    std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

struct Summary {
  std::string command;
  ojson values = ojson::object();
  ojson checks = ojson::array();

  void value(const std::string& k, double v) { values[k] = v; }
  void value(const std::string& k, const std::string& v) { values[k] = v; }
  void check(const std::string& name, double v, const std::string& rule, bool ok) {
    checks.push_back({{"name", name}, {"value", v}, {"rule", rule}, {"pass", ok}});
  }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ojson& c) { return c["pass"].get<bool>(); });
  }
  ojson json() const {
    ojson failed = ojson::array();
    for (const auto& c : checks)
      if (!c["pass"].get<bool>()) failed.push_back(c["name"]);
    return {{"command", command}, {"status", ok() ? "pass" : "fail"}, {"values", values},
            {"checks", checks}, {"failed", failed}};
  }
  void print(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      out << json().dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : values.items()) {
      out << k << ' ';
      if (v.is_number())
        out << fmt(v.get<double>());
      else
        out << v.get<std::string>();
      out << '\n';
    }
    for (const auto& c : checks)
      out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ' '
          << fmt(c["value"].get<double>()) << " (" << c["rule"].get<std::string>() << ")\n";
    out << "status " << (ok() ? "pass" : "fail") << '\n';
  }
};

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  body(f);
  if (!f) throw std::runtime_error("write failed for " + path);
}

Vec3 vec_arg(const std::vector<double>& v, const char* name) {
  if (v.size() != 3) throw CLI::ValidationError(std::string(name) + " needs three components");
  return {v[0], v[1], v[2]};
}

struct Common {
  std::string format = "table";
  std::string out;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--format", c.format, "Summary format")->check(CLI::IsMember({"table", "json"}));
  sub->add_option("--out", c.out, "Output file");
}

// verify-algebra -----------------------------------------------------------

struct AlgebraArgs {
  Common common;
  std::string set = "conventional";
  int samples = 100;
  std::vector<double> masses{1.0};
  std::uint64_t seed = 42;
  double tolerance = 1e-8;
  double floor = 1e-3;
  double fail_fraction = 0.95;
  double t = 0.0;
};

int run_algebra(const AlgebraArgs& a, std::ostream& out) {
  SuiteConfig cfg;
  cfg.seed = a.seed;
  cfg.tolerance = a.tolerance;
  cfg.floor = a.floor;
  cfg.fail_fraction = a.fail_fraction;
  cfg.t = a.t;

  std::vector<AlgebraReport> reports;
  std::vector<OperatorSetName> sets;
  bool classical = false;
  if (a.set == "all") {
    sets = all_sets();
    classical = true;
  } else if (a.set == "classical") {
    classical = true;
  } else {
    sets.push_back(*set_from_string(a.set));
  }
  for (double m : a.masses) {
    for (OperatorSetName s : sets) {
      auto r = run_quantum_suite(s, m, a.samples, cfg);
      reports.insert(reports.end(), r.begin(), r.end());
    }
    if (classical) {
      auto r = run_classical_suite(a.samples, cfg, m);
      reports.insert(reports.end(), r.begin(), r.end());
    }
  }

  const bool pass = all_pass(reports);
  nlohmann::json doc = reports_to_json(reports);
  doc["seed"] = a.seed;
  if (a.common.format == "json") {
    const std::string text = doc.dump(2) + "\n";
    if (a.common.out.empty())
      out << text;
    else
      write_file(a.common.out, [&](std::ostream& f) { f << text; });
  } else {
    for (const auto& r : reports)
      out << (r.pass ? "PASS " : "FAIL ") << r.set_name << " m=" << fmt(r.mass) << ' ' << r.identity_id
          << " expected=" << to_string(r.expected) << " max=" << fmt(r.max_residual)
          << " min=" << fmt(r.min_residual) << '\n';
    out << "status " << (pass ? "pass" : "fail") << '\n';
    if (!a.common.out.empty()) write_file(a.common.out, [&](std::ostream& f) { f << doc.dump(2) << '\n'; });
  }
  return pass ? kExitOk : kExitCheckFailed;
}

// eriksen ------------------------------------------------------------------

struct EriksenArgs {
  Common common;
  int n = 64;
  double L = 32.0;
  double m = 1.0;
  double width = 2.0;
  std::vector<double> v0{1e-3, 1e-2, 1e-1};
};

int run_eriksen(const EriksenArgs& a, std::ostream& out) {
  Summary s{"eriksen"};
  const Grid1D g{a.n, a.L};
  const BlockedHamiltonian free = discretize_dirac_1d(g, a.m, nullptr);
  const ComplexMatrix u = eriksen_unitary(free);
  const EriksenDiagnostics d = eriksen_diagnostics(free, u);
  const ComplexMatrix t = u * free.H() * u.adjoint();
  const Eigen::VectorXd upper = linalg::hermitian_eigenvalues(t.topLeftCorner(free.half(), free.half()));
  std::vector<double> expect;
  for (int j = 0; j < g.n; ++j) expect.insert(expect.end(), 2, std::sqrt(a.m * a.m + g.p(j) * g.p(j)));
  std::sort(expect.begin(), expect.end());
  double spec = 0.0;
  for (Eigen::Index i = 0; i < upper.size(); ++i) spec = std::max(spec, std::abs(upper(i) - expect[i]));

  s.check("free_off_block", d.off_block, "<= 1e-9", d.off_block <= 1e-9);
  s.check("free_positive_spectrum", spec, "<= 1e-10", spec <= 1e-10);
  s.check("beta_U_eq_Udag_beta", d.beta_condition, "<= 1e-10", d.beta_condition <= 1e-10);
  s.check("lambda_squared_eq_1", d.lambda_squared, "<= 1e-10", d.lambda_squared <= 1e-10);
  s.check("beta_lambda_commutator", d.lambda_commutator, "<= 1e-10", d.lambda_commutator <= 1e-10);
  s.check("beta_commutator", d.beta_commutator, "<= 1e-10", d.beta_commutator <= 1e-10);
  s.value("unitarity", d.unitarity);

  std::vector<double> xs, ys, hs;
  for (double v0 : a.v0) {
    const double w = a.width;
    const BlockedHamiltonian h = discretize_dirac_1d(g, a.m, [&](double x) { return v0 * std::exp(-x * x / (2 * w * w)); });
    const EriksenComparison c = compare_exact_approx(h);
    const std::string tag = "v0=" + fmt(v0);
    s.value(tag + " off_block_exact", c.off_block_exact);
    s.value(tag + " off_block_approx", c.off_block_approx);
    s.value(tag + " even_matrix_diff", c.even_matrix_diff);
    s.value(tag + " even_spectrum_diff", c.even_spectrum_diff);
    s.value(tag + " hfw_spectrum_diff", c.hfw_spectrum_diff);
    xs.push_back(v0);
    ys.push_back(c.even_spectrum_diff);
    hs.push_back(c.hfw_spectrum_diff);
  }
  if (xs.size() >= 2) {
    const double k = linalg::fit_power_law(xs, ys).exponent;
    s.check("even_spectrum_exponent", k, "2.0 +- 0.3", std::abs(k - 2.0) <= 0.3);
    s.value("hfw_spectrum_exponent", linalg::fit_power_law(xs, hs).exponent);
  }
  s.print(out, a.common.format);
  if (!a.common.out.empty()) write_file(a.common.out, [&](std::ostream& f) { f << s.json().dump(2) << '\n'; });
  return s.ok() ? kExitOk : kExitCheckFailed;
}

// precess ------------------------------------------------------------------

struct PrecessArgs {
  Common common;
  std::vector<double> p{0, 0, 0}, E{0, 0, 0}, B{0, 0, 1}, accel{0, 0, 0}, omega{0, 0, 0}, spin{1, 0, 0};
  double m = 1.0, a = 0.0, eta = 0.0, charge = 1.0, t_max = 10.0, tolerance = 1e-12;
  int samples = 101;
};

int run_precess(const PrecessArgs& a, std::ostream& out) {
  FieldConfig f;
  f.E = vec_arg(a.E, "--E");
  f.B = vec_arg(a.B, "--B");
  f.a_mm = a.a;
  f.eta = a.eta;
  f.charge = a.charge;
  f.frame_accel = vec_arg(a.accel, "--accel");
  f.frame_omega = vec_arg(a.omega, "--omega");
  const Vec3 p = vec_arg(a.p, "--p");
  if (a.samples < 2) throw CLI::ValidationError("--samples must be at least 2");

  const Vec3 w_classical = omega_total(p, a.m, f) + omega_noninertial_classical(p, a.m, f);
  const ComplexMatrix h4 = spin_hamiltonian_fw(p, a.m, f) + noninertial_spin_hamiltonian_fw(p, a.m, f);
  const Vec3 w_quantum = omega_from_block(h4.topLeftCorner(2, 2));

  const Vec3 s0 = vec_arg(a.spin, "--spin").normalized();
  const Spinor chi0 = spinor_along(s0);
  double worst = 0.0;
  std::ostringstream csv;
  csv << "t,sx_classical,sy_classical,sz_classical,sx_quantum,sy_quantum,sz_quantum\n";
  char buf[256];
  for (int j = 0; j < a.samples; ++j) {
    const double t = a.t_max * j / (a.samples - 1);
    const Vec3 sc = propagate_classical(s0, w_classical, t);
    const Vec3 sq = spin_expectation(propagate_quantum(chi0, w_quantum, t));
    worst = std::max(worst, (sc - sq).norm());
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", t, sc.x(), sc.y(), sc.z(), sq.x(),
                  sq.y(), sq.z());
    csv << buf;
  }
  Summary s{"precess"};
  s.value("omega_x", w_classical.x());
  s.value("omega_y", w_classical.y());
  s.value("omega_z", w_classical.z());
  s.value("omega_norm", w_classical.norm());
  const double dw = (w_quantum - w_classical).norm();
  s.check("omega_operator_vs_closed_form", dw, "<= tolerance * (1 + |Omega|)", dw <= a.tolerance * (1.0 + w_classical.norm()));
  s.check("quantum_vs_classical_spin", worst, "<= tolerance", worst <= a.tolerance);
  s.print(out, a.common.format);
  if (!a.common.out.empty()) write_file(a.common.out, [&](std::ostream& o) { o << csv.str(); });
  return s.ok() ? kExitOk : kExitCheckFailed;
}

// zitter -------------------------------------------------------------------

struct ZitterArgs {
  Common common;
  std::vector<double> p{1.0};
  double m = 1.0, t_max = 10.0;
  int component = 1, samples = 2001;
  std::string rep = "dirac";
};

int run_zitter(const ZitterArgs& a, std::ostream& out) {
  if (a.component < 1 || a.component > 3) throw CLI::ValidationError("--component must be 1, 2 or 3");
  const int k = a.component - 1;
  Vec3 p = Vec3::Zero();
  if (a.p.size() == 1)
    p(k) = a.p[0];
  else if (a.p.size() == 3)
    p = vec_arg(a.p, "--p");
  else
    throw CLI::ValidationError("--p takes one value (along the component axis) or three");
  const Rep rep = a.rep == "dirac" ? Rep::dirac : (a.rep == "fv" ? Rep::fv : Rep::fw);

  const EvolutionRecord num = record_evolution(rep, p, a.m, k, a.t_max, a.samples, Route::numeric);
  const EvolutionRecord closed = record_evolution(rep, p, a.m, k, a.t_max, a.samples, Route::closed);
  double diff = 0.0, drift = 0.0;
  for (std::size_t i = 0; i < num.velocity.size(); ++i) {
    diff = std::max(diff, (num.velocity[i] - closed.velocity[i]).norm());
    drift = std::max(drift, (num.velocity[i] - num.velocity.front()).norm());
  }
  const double eps = energy(p, a.m);
  const double dt = num.times[1] - num.times[0];

  Summary s{"zitter"};
  s.value("rep", a.rep);
  s.value("eps", eps);
  s.check("numeric_vs_closed", diff, "<= 1e-9", diff <= 1e-9);
  if (rep == Rep::fw) {
    s.check("velocity_variation", drift, "<= 1e-12", drift <= 1e-12);
  } else {
    s.check("sampling_resolves_2eps", 2.0 * eps * dt, "< pi", 2.0 * eps * dt < M_PI);
    const double w = dominant_frequency(num);
    s.value("frequency", w);
    s.value("expected_frequency", 2.0 * eps);
    const double rel = std::abs(w - 2.0 * eps) / (2.0 * eps);
    s.check("frequency_relative_error", rel, "<= 1e-6", rel <= 1e-6);
  }
  s.print(out, a.common.format);
  if (!a.common.out.empty()) write_file(a.common.out, [&](std::ostream& o) { write_csv(num, o); });
  return s.ok() ? kExitOk : kExitCheckFailed;
}

// packet / pce ---------------------------------------------------------------

struct PacketArgs {
  Common common;
  double p0 = 2.0, sigma = 0.5, m = 1.0, L = 64.0;
  int n = 256;
  std::vector<double> spin{0, 0, 1};
  std::vector<double> times;
  std::string moments_out;
};

WavePacket1D packet_from(const PacketArgs& a) {
  PacketSpec s;
  s.p0 = a.p0;
  s.sigma_p = a.sigma;
  s.m = a.m;
  s.spin_dir = vec_arg(a.spin, "--spin");
  return make_gaussian_packet(Grid1D{a.n, a.L}, s);
}

int run_packet(const PacketArgs& a, std::ostream& out) {
  const WavePacket1D fw = packet_from(a);
  const WavePacket1D d = to_picture(fw, Picture::dirac);
  const double dx = fw.grid.dx();
  Summary s{"packet"};
  const double nf = density(fw).sum() * dx, nd = density(d).sum() * dx;
  s.value("density_integral_fw", nf);
  s.value("density_integral_dirac", nd);
  s.value("relative_density_gap", relative_density_gap(fw));
  s.check("normalization_fw", std::abs(nf - 1.0), "<= 1e-10", std::abs(nf - 1.0) <= 1e-10);
  s.check("normalization_dirac", std::abs(nd - 1.0), "<= 1e-10", std::abs(nd - 1.0) <= 1e-10);
  s.print(out, a.common.format);
  if (!a.common.out.empty()) write_file(a.common.out, [&](std::ostream& o) { write_density_csv(fw, o); });
  if (!a.moments_out.empty()) {
    std::vector<double> ts = a.times.empty() ? std::vector<double>{0.0, 1.0, 2.0, 5.0, 10.0} : a.times;
    write_file(a.moments_out, [&](std::ostream& o) { write_moments_csv(fw, ts, o); });
  }
  return s.ok() ? kExitOk : kExitCheckFailed;
}

int run_pce(const PacketArgs& a, std::ostream& out) {
  const WavePacket1D fw = packet_from(a);
  const auto obs = [](ObservableKind k) { return Observable::of(k); };
  Summary s{"pce"};
  const double nd = expectation(fw, obs(ObservableKind::identity), Convention::dirac_picture);
  const double nf = expectation(fw, obs(ObservableKind::identity), Convention::fw_picture);
  const double x2 = expectation(fw, obs(ObservableKind::position_sq), Convention::fw_picture);
  const double pce_x2 = picture_change_error(fw, obs(ObservableKind::position_sq));
  const double pce_p = picture_change_error(fw, obs(ObservableKind::momentum));
  s.value("normalization_dirac", nd);
  s.value("normalization_fw", nf);
  s.value("x2_fw", x2);
  s.value("x2_dirac", x2 + pce_x2);
  s.value("pce_x2", pce_x2);
  s.value("pce_quadrupole", picture_change_error(fw, obs(ObservableKind::quadrupole_1d)));
  s.value("pce_p", pce_p);
  s.check("normalization_dirac", std::abs(nd - 1.0), "<= 1e-10", std::abs(nd - 1.0) <= 1e-10);
  s.check("normalization_fw", std::abs(nf - 1.0), "<= 1e-10", std::abs(nf - 1.0) <= 1e-10);
  s.check("pce_p_zero", std::abs(pce_p), "<= 1e-12", std::abs(pce_p) <= 1e-12);
  s.check("pce_x2_nonzero", std::abs(pce_x2) / x2, "> 1e-4 relative to <x^2>", std::abs(pce_x2) > 1e-4 * x2);
  s.print(out, a.common.format);
  if (!a.common.out.empty()) write_file(a.common.out, [&](std::ostream& o) { o << s.json().dump(2) << '\n'; });
  return s.ok() ? kExitOk : kExitCheckFailed;
}

void add_packet_options(CLI::App* sub, PacketArgs& a) {
  sub->add_option("--p0", a.p0, "Mean momentum");
  sub->add_option("--sigma", a.sigma, "Momentum spread (std of |psi(p)|^2)")->check(CLI::PositiveNumber);
  sub->add_option("--m", a.m, "Mass")->check(CLI::PositiveNumber);
  sub->add_option("--n", a.n, "Grid points (power of two)");
  sub->add_option("--L", a.L, "Box length")->check(CLI::PositiveNumber);
  sub->add_option("--spin", a.spin, "Spin direction")->expected(3);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fwlab: relativistic position/spin operator workbench", "fwlab"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::function<int()> action;

  AlgebraArgs alg;
  auto* va = app.add_subcommand("verify-algebra", "Commutator and Poisson-bracket tables, JSON report");
  add_common(va, alg.common, "json");
  va->add_option("--set", alg.set, "Operator set")
      ->check(CLI::IsMember({"conventional", "conventional_dirac", "center_of_mass", "projected", "naive_dirac",
                             "classical", "all"}));
  va->add_option("--samples", alg.samples, "Random momenta per mass")->check(CLI::PositiveNumber);
  va->add_option("--mass", alg.masses, "Masses (repeatable)")->check(CLI::NonNegativeNumber);
  va->add_option("--seed", alg.seed, "Sampling seed");
  va->add_option("--tolerance", alg.tolerance, "Residual bound for identities expected to hold");
  va->add_option("--floor", alg.floor, "Residual floor for identities expected to fail");
  va->add_option("--fail-fraction", alg.fail_fraction, "Fraction of samples that must exceed the floor");
  va->add_option("--t", alg.t, "Clock value in the boosts");
  va->callback([&] { action = [&] { return run_algebra(alg, out); }; });

  EriksenArgs eri;
  auto* es = app.add_subcommand("eriksen", "Exact and approximate FW transforms of the discretized 1D Dirac Hamiltonian");
  add_common(es, eri.common, "table");
  es->add_option("--n", eri.n, "Grid points (power of two)");
  es->add_option("--L", eri.L, "Box length")->check(CLI::PositiveNumber);
  es->add_option("--m", eri.m, "Mass")->check(CLI::PositiveNumber);
  es->add_option("--width", eri.width, "Width of the Gaussian potential")->check(CLI::PositiveNumber);
  es->add_option("--v0", eri.v0, "Potential strengths for the scaling fit");
  es->callback([&] { action = [&] { return run_eriksen(eri, out); }; });

  PrecessArgs pre;
  auto* ps = app.add_subcommand("precess", "Spin precession in uniform fields and noninertial frames, CSV of <sigma>(t)");
  add_common(ps, pre.common, "table");
  ps->add_option("--p", pre.p, "Momentum")->expected(3);
  ps->add_option("--m", pre.m, "Mass")->check(CLI::PositiveNumber);
  ps->add_option("--E", pre.E, "Electric field")->expected(3);
  ps->add_option("--B", pre.B, "Magnetic field")->expected(3);
  ps->add_option("--a", pre.a, "Anomalous moment (g-2)/2");
  ps->add_option("--eta", pre.eta, "EDM factor");
  ps->add_option("--charge", pre.charge, "Charge");
  ps->add_option("--accel", pre.accel, "Frame acceleration")->expected(3);
  ps->add_option("--omega", pre.omega, "Frame rotation")->expected(3);
  ps->add_option("--spin", pre.spin, "Initial spin direction")->expected(3);
  ps->add_option("--t-max", pre.t_max, "Final time");
  ps->add_option("--samples", pre.samples, "Time samples");
  ps->add_option("--tolerance", pre.tolerance, "Quantum/classical agreement bound");
  ps->callback([&] { action = [&] { return run_precess(pre, out); }; });

  ZitterArgs zit;
  auto* zs = app.add_subcommand("zitter", "Heisenberg velocity/position evolution, CSV of matrix elements");
  add_common(zs, zit.common, "table");
  zs->add_option("--p", zit.p, "Momentum: one value along the component axis, or three")->expected(1, 3);
  zs->add_option("--m", zit.m, "Mass")->check(CLI::NonNegativeNumber);
  zs->add_option("--t-max", zit.t_max, "Final time")->check(CLI::PositiveNumber);
  zs->add_option("--samples", zit.samples, "Time samples");
  zs->add_option("--component", zit.component, "Velocity component 1..3");
  zs->add_option("--rep", zit.rep, "Representation")->check(CLI::IsMember({"dirac", "fv", "fw"}));
  zs->callback([&] { action = [&] { return run_zitter(zit, out); }; });

  PacketArgs pk;
  auto* pks = app.add_subcommand("packet", "Gaussian packet densities in both pictures, CSV of (x, rho_dirac, rho_fw)");
  add_common(pks, pk.common, "table");
  add_packet_options(pks, pk);
  pks->add_option("--times", pk.times, "Times for the moments CSV");
  pks->add_option("--moments-out", pk.moments_out, "CSV of (t, <x>, <x^2>, PCE(x^2))");
  pks->callback([&] { action = [&] { return run_packet(pk, out); }; });

  PacketArgs pc;
  auto* pcs = app.add_subcommand("pce", "Picture change error of x^2, quadrupole and p");
  add_common(pcs, pc.common, "table");
  add_packet_options(pcs, pc);
  pcs->callback([&] { action = [&] { return run_pce(pc, out); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.back()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = &app;
    for (const CLI::App* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << ojson{{"status", "error"}, {"error", e.what()}}.dump() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << ojson{{"status", "error"}, {"error", e.what()}}.dump() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace fwlab::cli
