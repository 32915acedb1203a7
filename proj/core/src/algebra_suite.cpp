#include "fwlab/algebra_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "fwlab/classical.hpp"
#include "fwlab/dirac_basis.hpp"

namespace fwlab {

namespace {

struct SetName {
  OperatorSetName set;
  std::string_view name;
};

constexpr std::array<SetName, 5> kSetNames{{
    {OperatorSetName::conventional, "conventional"},
    {OperatorSetName::conventional_dirac, "conventional_dirac"},
    {OperatorSetName::center_of_mass, "center_of_mass"},
    {OperatorSetName::projected, "projected"},
    {OperatorSetName::naive_dirac, "naive_dirac"},
}};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

Vec3 uniform_box(std::mt19937_64& rng, double box) {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v(i) = uniform(rng, -box, box);
  return v;
}

// ---- quantum identities ---------------------------------------------------

struct SetJets {
  OpJet H;
  std::array<OpJet, 3> p, q, s, l, j, K;
  double t;
  int dim;
};

std::array<OpJet, 3> expand3(const std::array<PhaseSpaceOperator, 3>& v, const Vec3& p) {
  return {v[0].expand(p), v[1].expand(p), v[2].expand(p)};
}

SetJets expand_set(const OperatorSet& set, const Vec3& p) {
  return {set.H.expand(p),   expand3(set.p, p), expand3(set.q, p), expand3(set.s, p),
          expand3(set.l, p), expand3(set.j, p), expand3(set.K, p), set.t, set.H.dim()};
}

using Triple = std::array<OpJet, 3> SetJets::*;

PhaseOpValue identity_value(const SetJets& x) {
  PhaseOpValue v = PhaseOpValue::zero(x.dim);
  v.a.setIdentity();
  return v;
}

// Residual kinds, evaluated as max over component pairs (i, j).
double vanish(const std::array<OpJet, 3>& u, const std::array<OpJet, 3>& w) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, commutator_value(u[i], w[j]).norm());
  return r;
}

double vanish_with(const std::array<OpJet, 3>& u, const OpJet& h) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i) r = std::max(r, commutator_value(u[i], h).norm());
  return r;
}

/// [u_i, w_j] = c e_ijk z_k
double levi(const std::array<OpJet, 3>& u, const std::array<OpJet, 3>& w, const std::array<OpJet, 3>& z,
            Complex c) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      PhaseOpValue d = commutator_value(u[i], w[j]);
      for (int k = 0; k < 3; ++k)
        if (const int e = levi_civita(i, j, k)) d -= (c * double(e)) * value(z[k]);
      r = std::max(r, d.norm());
    }
  return r;
}

struct QuantumIdentity {
  std::string id;
  std::function<double(const SetJets&)> residual;
};

const std::vector<QuantumIdentity>& quantum_identities() {
  static const std::vector<QuantumIdentity> ids = {
      {"[p_i,p_j]=0", [](const SetJets& x) { return vanish(x.p, x.p); }},
      {"[p_i,H]=0", [](const SetJets& x) { return vanish_with(x.p, x.H); }},
      {"[j_i,H]=0", [](const SetJets& x) { return vanish_with(x.j, x.H); }},
      {"[j_i,j_j]=ie_ijk j_k", [](const SetJets& x) { return levi(x.j, x.j, x.j, kI); }},
      {"[j_i,p_j]=ie_ijk p_k", [](const SetJets& x) { return levi(x.j, x.p, x.p, kI); }},
      {"[j_i,K_j]=ie_ijk K_k", [](const SetJets& x) { return levi(x.j, x.K, x.K, kI); }},
      {"[K_i,H]=ip_i",
       [](const SetJets& x) {
         double r = 0.0;
         for (int i = 0; i < 3; ++i)
           r = std::max(r, (commutator_value(x.K[i], x.H) - kI * value(x.p[i])).norm());
         return r;
       }},
      {"[K_i,K_j]=-ie_ijk j_k", [](const SetJets& x) { return levi(x.K, x.K, x.j, -kI); }},
      {"[K_i,p_j]=i delta_ij H",
       [](const SetJets& x) {
         double r = 0.0;
         for (int i = 0; i < 3; ++i)
           for (int j = 0; j < 3; ++j) {
             PhaseOpValue d = commutator_value(x.K[i], x.p[j]);
             if (i == j) d -= kI * value(x.H);
             r = std::max(r, d.norm());
           }
         return r;
       }},
      {"[q_i,K_j]=(q_j[q_i,H]+[q_i,H]q_j)/2-it delta_ij",
       [](const SetJets& x) {
         double r = 0.0;
         for (int i = 0; i < 3; ++i) {
           const OpJet qh = commutator(x.q[i], x.H);
           for (int j = 0; j < 3; ++j) {
             PhaseOpValue d = commutator_value(x.q[i], x.K[j]) - Complex(0.5) * value(x.q[j] * qh + qh * x.q[j]);
             if (i == j) d += Complex(0.0, x.t) * identity_value(x);
             r = std::max(r, d.norm());
           }
         }
         return r;
       }},
      {"[q_i,p_j]=i delta_ij",
       [](const SetJets& x) {
         double r = 0.0;
         for (int i = 0; i < 3; ++i)
           for (int j = 0; j < 3; ++j) {
             PhaseOpValue d = commutator_value(x.q[i], x.p[j]);
             if (i == j) d -= kI * identity_value(x);
             r = std::max(r, d.norm());
           }
         return r;
       }},
      {"[q_i,j_j]=ie_ijk q_k", [](const SetJets& x) { return levi(x.q, x.j, x.q, kI); }},
      {"[q_i,s_j]=0", [](const SetJets& x) { return vanish(x.q, x.s); }},
      {"[s_i,p_j]=0", [](const SetJets& x) { return vanish(x.s, x.p); }},
      {"[l_i,s_j]=0", [](const SetJets& x) { return vanish(x.l, x.s); }},
      {"[l_i,l_j]=ie_ijk l_k", [](const SetJets& x) { return levi(x.l, x.l, x.l, kI); }},
      {"[s_i,s_j]=ie_ijk s_k", [](const SetJets& x) { return levi(x.s, x.s, x.s, kI); }},
      {"[q_i,q_j]=0", [](const SetJets& x) { return vanish(x.q, x.q); }},
  };
  return ids;
}

// ---- classical identities -------------------------------------------------

using classical::ClassicalState;
using classical::Observable;
using Vector = std::function<Observable(int)>;

double bracket_levi(const Vector& u, const Vector& w, const Vector& z, double c, const ClassicalState& s) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double d = classical::poisson_bracket(u(i), w(j), s);
      for (int k = 0; k < 3; ++k)
        if (const int e = levi_civita(i, j, k)) d -= c * e * z(k)(s);
      r = std::max(r, std::abs(d));
    }
  return r;
}

double bracket_vanish(const Vector& u, const Vector& w, const ClassicalState& s) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(classical::poisson_bracket(u(i), w(j), s)));
  return r;
}

double bracket_vanish_with(const Vector& u, const Observable& h, const ClassicalState& s) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i) r = std::max(r, std::abs(classical::poisson_bracket(u(i), h, s)));
  return r;
}

struct ClassicalIdentity {
  std::string id;
  Expectation expected;
  std::function<double(const ClassicalState&)> residual;
};

/// Upper-left (positive-energy) 2x2 block of a multiplicative commutator
/// compared against i times the classical bracket.
double correspondence(const PhaseOpValue& commutator, double bracket) {
  double r = 0.0;
  for (const auto& b : commutator.b) r += b.squaredNorm();
  const ComplexMatrix upper = commutator.a.topLeftCorner(2, 2);
  r += (upper - kI * bracket * ComplexMatrix::Identity(2, 2)).squaredNorm();
  return std::sqrt(r);
}

std::vector<ClassicalIdentity> classical_identities() {
  using namespace classical;
  const Vector P = momentum, Q = position, S = spin, L = orbital, J = total_j, K = boost;
  const Observable H = hamiltonian();
  std::vector<ClassicalIdentity> ids = {
      {"{P_i,P_j}=0", Expectation::hold, [=](const ClassicalState& s) { return bracket_vanish(P, P, s); }},
      {"{P_i,H}=0", Expectation::hold, [=](const ClassicalState& s) { return bracket_vanish_with(P, H, s); }},
      {"{J_i,H}=0", Expectation::hold, [=](const ClassicalState& s) { return bracket_vanish_with(J, H, s); }},
      {"{J_i,J_j}=e_ijk J_k", Expectation::hold, [=](const ClassicalState& s) { return bracket_levi(J, J, J, 1, s); }},
      {"{J_i,P_j}=e_ijk P_k", Expectation::hold, [=](const ClassicalState& s) { return bracket_levi(J, P, P, 1, s); }},
      {"{J_i,K_j}=e_ijk K_k", Expectation::hold, [=](const ClassicalState& s) { return bracket_levi(J, K, K, 1, s); }},
      {"{K_i,H}=P_i", Expectation::hold,
       [=](const ClassicalState& s) {
         double r = 0.0;
         for (int i = 0; i < 3; ++i) r = std::max(r, std::abs(poisson_bracket(K(i), H, s) - s.P(i)));
         return r;
       }},
      {"{K_i,K_j}=-e_ijk J_k", Expectation::hold, [=](const ClassicalState& s) { return bracket_levi(K, K, J, -1, s); }},
      {"{K_i,P_j}=delta_ij H", Expectation::hold,
       [=](const ClassicalState& s) {
         double r = 0.0;
         for (int i = 0; i < 3; ++i)
           for (int j = 0; j < 3; ++j)
             r = std::max(r, std::abs(poisson_bracket(K(i), P(j), s) - (i == j ? H(s) : 0.0)));
         return r;
       }},
      {"{Q_i,P_j}=delta_ij", Expectation::hold,
       [=](const ClassicalState& s) {
         double r = 0.0;
         for (int i = 0; i < 3; ++i)
           for (int j = 0; j < 3; ++j)
             r = std::max(r, std::abs(poisson_bracket(Q(i), P(j), s) - (i == j ? 1.0 : 0.0)));
         return r;
       }},
      {"{Q_i,J_j}=e_ijk Q_k", Expectation::hold, [=](const ClassicalState& s) { return bracket_levi(Q, J, Q, 1, s); }},
      {"{Q_i,K_j}=(Q_j{Q_i,H}+{Q_i,H}Q_j)/2-t delta_ij", Expectation::hold,
       [=](const ClassicalState& s) {
         double r = 0.0;
         for (int i = 0; i < 3; ++i) {
           const double qh = poisson_bracket(Q(i), H, s);
           for (int j = 0; j < 3; ++j) {
             const double rhs = s.Q(j) * qh - (i == j ? s.t : 0.0);
             r = std::max(r, std::abs(poisson_bracket(Q(i), K(j), s) - rhs));
           }
         }
         return r;
       }},
      {"{Q_i,Q_j}=0", Expectation::hold, [=](const ClassicalState& s) { return bracket_vanish(Q, Q, s); }},
      {"{L_i,P_j}=e_ijk P_k", Expectation::hold, [=](const ClassicalState& s) { return bracket_levi(L, P, P, 1, s); }},
      {"{S_i,P_j}=0", Expectation::hold, [=](const ClassicalState& s) { return bracket_vanish(S, P, s); }},
      {"{Q_i,L_j}=e_ijk Q_k", Expectation::hold, [=](const ClassicalState& s) { return bracket_levi(Q, L, Q, 1, s); }},
      {"{Q_i,S_j}=0", Expectation::hold, [=](const ClassicalState& s) { return bracket_vanish(Q, S, s); }},
      {"{L_i,L_j}=e_ijk L_k", Expectation::hold, [=](const ClassicalState& s) { return bracket_levi(L, L, L, 1, s); }},
      {"{S_i,S_j}=e_ijk S_k", Expectation::hold, [=](const ClassicalState& s) { return bracket_levi(S, S, S, 1, s); }},
      {"{L_i,S_j}=0", Expectation::hold, [=](const ClassicalState& s) { return bracket_vanish(L, S, s); }},
      {"{H,Q_i}=-P_i/H", Expectation::hold,
       [=](const ClassicalState& s) {
         double r = 0.0;
         for (int i = 0; i < 3; ++i) r = std::max(r, std::abs(poisson_bracket(H, Q(i), s) + s.P(i) / H(s)));
         return r;
       }},
      {"{X_i,X_j}=0 (center of mass)", Expectation::fail,
       [](const ClassicalState& s) { return bracket_vanish(com_position, com_position, s); }},
      {"{R_i,R_j}=0 (projected)", Expectation::fail,
       [](const ClassicalState& s) { return bracket_vanish(projected_position, projected_position, s); }},
      {"R_i=(tP_i+K_i)/H (projected)", Expectation::hold,
       [](const ClassicalState& s) {
         double r = 0.0;
         for (int i = 0; i < 3; ++i)
           r = std::max(r, std::abs(projected_position(i)(s) - projected_position_from_boost(i)(s)));
         return r;
       }},
      {"X x P + zeta = J (center of mass)", Expectation::hold,
       [](const ClassicalState& s) {
         double r = 0.0;
         Vec3 x;
         for (int i = 0; i < 3; ++i) x(i) = com_position(i)(s);
         const Vec3 l = x.cross(s.P);
         for (int i = 0; i < 3; ++i) r = std::max(r, std::abs(l(i) + lab_spin(i)(s) - total_j(i)(s)));
         return r;
       }},
  };
  return ids;
}

ClassicalState sample_state(std::mt19937_64& rng, const SuiteConfig& cfg, double m) {
  ClassicalState s;
  s.m = m;
  s.t = cfg.t;
  s.Q = uniform_box(rng, cfg.box);
  do s.P = uniform_box(rng, cfg.box);
  while (s.P.norm() < cfg.min_momentum);
  do s.S = uniform_box(rng, 1.0);
  while (s.S.norm() < cfg.min_momentum);
  return s;
}

AlgebraReport summarize(std::string id, std::string_view set, double m, const std::vector<double>& res,
                        Expectation expected, double tol, const SuiteConfig& cfg) {
  AlgebraReport r;
  r.identity_id = std::move(id);
  r.set_name = std::string(set);
  r.mass = m;
  r.samples = static_cast<int>(res.size());
  r.expected = expected;
  r.tolerance = tol;
  r.floor = cfg.floor;
  if (res.empty()) return r;
  r.max_residual = *std::max_element(res.begin(), res.end());
  r.min_residual = *std::min_element(res.begin(), res.end());
  const auto above = std::count_if(res.begin(), res.end(), [&](double x) { return x >= cfg.floor; });
  r.fraction_above_floor = static_cast<double>(above) / static_cast<double>(res.size());
  r.pass = expected == Expectation::hold ? r.max_residual <= tol : r.fraction_above_floor >= cfg.fail_fraction;
  return r;
}

}  // namespace

std::string_view to_string(OperatorSetName s) {
  for (const auto& e : kSetNames)
    if (e.set == s) return e.name;
  return "unknown";
}

std::optional<OperatorSetName> set_from_string(std::string_view name) {
  for (const auto& e : kSetNames)
    if (e.name == name) return e.set;
  return std::nullopt;
}

const std::vector<OperatorSetName>& all_sets() {
  static const std::vector<OperatorSetName> sets = [] {
    std::vector<OperatorSetName> v;
    for (const auto& e : kSetNames) v.push_back(e.set);
    return v;
  }();
  return sets;
}

std::string_view to_string(Expectation e) { return e == Expectation::hold ? "hold" : "fail"; }

OperatorSet build_operator_set(OperatorSetName name, double m, double t) {
  auto vec = [&](Family f, Rep r) { return build_vector(f, r, m, t); };
  switch (name) {
    case OperatorSetName::conventional:
      return {name, Rep::fw, m, t, build_operator(Family::fw_hamiltonian, Rep::fw, m),
              vec(Family::momentum, Rep::fw), vec(Family::fw_position, Rep::fw), vec(Family::fw_spin, Rep::fw),
              vec(Family::oam_fw, Rep::fw), vec(Family::total_j, Rep::fw), vec(Family::boost_fw, Rep::fw)};
    case OperatorSetName::conventional_dirac: {
      const auto x = vec(Family::nw_position_dirac, Rep::dirac);
      const auto p = vec(Family::momentum, Rep::dirac);
      return {name, Rep::dirac, m, t, build_operator(Family::dirac_hamiltonian, Rep::dirac, m), p, x,
              vec(Family::mean_spin_dirac, Rep::dirac),
              {cross(x, p, 0), cross(x, p, 1), cross(x, p, 2)},
              vec(Family::total_j, Rep::dirac), vec(Family::boost_dirac, Rep::dirac)};
    }
    case OperatorSetName::center_of_mass:
      return {name, Rep::fw, m, t, build_operator(Family::fw_hamiltonian, Rep::fw, m),
              vec(Family::momentum, Rep::fw), vec(Family::com_position_fw, Rep::fw),
              vec(Family::lab_spin_fw, Rep::fw), vec(Family::com_oam, Rep::fw), vec(Family::total_j, Rep::fw),
              vec(Family::boost_fw, Rep::fw)};
    case OperatorSetName::projected:
      return {name, Rep::fw, m, t, build_operator(Family::fw_hamiltonian, Rep::fw, m),
              vec(Family::momentum, Rep::fw), vec(Family::projected_position_fw, Rep::fw),
              vec(Family::projected_spin_fw, Rep::fw), vec(Family::projected_oam, Rep::fw),
              vec(Family::total_j, Rep::fw), vec(Family::boost_fw, Rep::fw)};
    case OperatorSetName::naive_dirac:
      return {name, Rep::dirac, m, t, build_operator(Family::dirac_hamiltonian, Rep::dirac, m),
              vec(Family::momentum, Rep::dirac), vec(Family::fw_position, Rep::dirac),
              vec(Family::dirac_spin, Rep::dirac), vec(Family::oam_fw, Rep::dirac),
              vec(Family::total_j, Rep::dirac), vec(Family::boost_fw, Rep::dirac)};
  }
  throw std::invalid_argument("build_operator_set: unknown set");
}

std::vector<Vec3> sample_momenta(int n, std::uint64_t seed, double box, double min_norm) {
  std::mt19937_64 rng(seed);
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  while (static_cast<int>(out.size()) < n) {
    const Vec3 p = uniform_box(rng, box);
    if (p.norm() >= min_norm) out.push_back(p);
  }
  return out;
}

const std::vector<std::string>& quantum_identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& q : quantum_identities()) v.push_back(q.id);
    return v;
  }();
  return ids;
}

Expectation expected_outcome(OperatorSetName set, std::string_view id) {
  auto one_of = [id](std::initializer_list<std::string_view> ids) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  constexpr std::string_view kWorldLine = "[q_i,K_j]=(q_j[q_i,H]+[q_i,H]q_j)/2-it delta_ij";
  switch (set) {
    case OperatorSetName::conventional:
    case OperatorSetName::conventional_dirac:
      return Expectation::hold;
    case OperatorSetName::naive_dirac:
      return one_of({"[K_i,K_j]=-ie_ijk j_k", kWorldLine}) ? Expectation::fail : Expectation::hold;
    case OperatorSetName::center_of_mass:
      return one_of({"[q_i,q_j]=0", "[l_i,l_j]=ie_ijk l_k", "[s_i,s_j]=ie_ijk s_k", "[l_i,s_j]=0", "[q_i,s_j]=0"})
                 ? Expectation::fail
                 : Expectation::hold;
    case OperatorSetName::projected:
      return one_of({"[q_i,q_j]=0", "[l_i,l_j]=ie_ijk l_k", "[s_i,s_j]=ie_ijk s_k", "[l_i,s_j]=0", "[q_i,s_j]=0",
                     kWorldLine})
                 ? Expectation::fail
                 : Expectation::hold;
  }
  return Expectation::hold;
}

std::vector<AlgebraReport> run_quantum_suite(OperatorSetName set_name, double m, int n_samples,
                                             const SuiteConfig& cfg) {
  const OperatorSet set = build_operator_set(set_name, m, cfg.t);
  const auto momenta = sample_momenta(n_samples, cfg.seed, cfg.box, cfg.min_momentum);
  const auto& ids = quantum_identities();
  std::vector<std::vector<double>> residuals(ids.size());
  for (const Vec3& p : momenta) {
    const SetJets jets = expand_set(set, p);
    for (std::size_t i = 0; i < ids.size(); ++i) residuals[i].push_back(ids[i].residual(jets));
  }
  std::vector<AlgebraReport> out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    out.push_back(summarize(ids[i].id, to_string(set_name), m, residuals[i],
                            expected_outcome(set_name, ids[i].id), cfg.tolerance, cfg));
  return out;
}

std::vector<AlgebraReport> run_classical_suite(int n_samples, const SuiteConfig& cfg, double m) {
  constexpr double kClassicalTol = 1e-6;
  std::mt19937_64 rng(cfg.seed);
  std::vector<ClassicalState> states;
  for (int n = 0; n < n_samples; ++n) states.push_back(sample_state(rng, cfg, m));

  std::vector<AlgebraReport> out;
  for (const auto& id : classical_identities()) {
    std::vector<double> res;
    for (const auto& s : states) res.push_back(id.residual(s));
    out.push_back(summarize(id.id, "classical", m, res, id.expected, kClassicalTol, cfg));
  }

  // Commutator = i * bracket on the positive-energy block of the FW set.
  const OperatorSet fw = build_operator_set(OperatorSetName::conventional, m, cfg.t);
  std::vector<double> hq, kh, kp;
  for (const auto& s : states) {
    const SetJets x = expand_set(fw, s.P);
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    for (int i = 0; i < 3; ++i) {
      r1 = std::max(r1, correspondence(commutator_value(x.H, x.q[i]),
                                       classical::poisson_bracket(classical::hamiltonian(), classical::position(i), s)));
      r2 = std::max(r2, correspondence(commutator_value(x.K[i], x.H),
                                       classical::poisson_bracket(classical::boost(i), classical::hamiltonian(), s)));
      for (int j = 0; j < 3; ++j)
        r3 = std::max(r3, correspondence(commutator_value(x.K[i], x.p[j]),
                                         classical::poisson_bracket(classical::boost(i), classical::momentum(j), s)));
    }
    hq.push_back(r1);
    kh.push_back(r2);
    kp.push_back(r3);
  }
  out.push_back(summarize("[H,q_i]=i{H,Q_i} (positive energy)", "correspondence", m, hq, Expectation::hold,
                          kClassicalTol, cfg));
  out.push_back(summarize("[K_i,H]=i{K_i,H} (positive energy)", "correspondence", m, kh, Expectation::hold,
                          kClassicalTol, cfg));
  out.push_back(summarize("[K_i,p_j]=i{K_i,P_j} (positive energy)", "correspondence", m, kp, Expectation::hold,
                          kClassicalTol, cfg));
  return out;
}

bool all_pass(const std::vector<AlgebraReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const AlgebraReport& r) { return r.pass; });
}

void to_json(nlohmann::json& j, const AlgebraReport& r) {
  j = nlohmann::json{{"identity_id", r.identity_id},
                     {"set_name", r.set_name},
                     {"mass", r.mass},
                     {"samples", r.samples},
                     {"max_residual", r.max_residual},
                     {"min_residual", r.min_residual},
                     {"fraction_above_floor", r.fraction_above_floor},
                     {"expected", std::string(to_string(r.expected))},
                     {"tolerance", r.tolerance},
                     {"floor", r.floor},
                     {"verdict", r.pass ? "pass" : "fail"}};
}

nlohmann::json reports_to_json(const std::vector<AlgebraReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(r);
  return nlohmann::json{{"all_pass", all_pass(reports)}, {"reports", arr}};
}

}  // namespace fwlab
