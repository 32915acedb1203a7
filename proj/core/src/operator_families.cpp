#include <array>
#include <stdexcept>
#include <string>

#include "fwlab/dirac_basis.hpp"
#include "fwlab/errors.hpp"
#include "fwlab/phase_ops.hpp"

namespace fwlab {

using jet::MatJet;
using jet::ScalarJet;

namespace {

constexpr double kMasslessCutoff = 1e-6;

struct Kin {
  std::array<ScalarJet, 3> p;
  ScalarJet p2;
  ScalarJet eps;
  ScalarJet inv_eps;
  ScalarJet inv_eps_m;  // 1/(eps + m)
};

Kin kinematics(const Vec3& p, double m) {
  if (m == 0.0 && p.norm() < kMasslessCutoff)
    throw DomainError("massless operator evaluated at |p| < 1e-6");
  Kin k;
  k.p = jet::momentum_jets(p);
  k.p2 = k.p[0] * k.p[0] + k.p[1] * k.p[1] + k.p[2] * k.p[2];
  k.eps = jet::sqrt(m * m + k.p2);
  k.inv_eps = jet::reciprocal(k.eps);
  k.inv_eps_m = jet::reciprocal(m + k.eps);
  return k;
}

const ComplexMatrix& id4() {
  static const ComplexMatrix i = ComplexMatrix::Identity(4, 4);
  return i;
}

MatJet dot(const std::array<ScalarJet, 3>& p, const std::array<ComplexMatrix, 3>& mats) {
  return p[0] * mats[0] + p[1] * mats[1] + p[2] * mats[2];
}

/// Component k of (mats x p).
MatJet cross(const std::array<ComplexMatrix, 3>& mats, const std::array<ScalarJet, 3>& p, int k) {
  const int i = (k + 1) % 3;
  const int j = (k + 2) % 3;
  return p[j] * mats[i] - p[i] * mats[j];
}

MatJet scalar(const ScalarJet& s, int dim) {
  return s * ComplexMatrix(ComplexMatrix::Identity(dim, dim));
}

void require_component(int k, Family f) {
  if (k < 0 || k > 2)
    throw std::invalid_argument(std::string(to_string(f)) + ": component must be 0, 1 or 2");
}

void require_massive(double m, Family f) {
  if (!(m > 0.0))
    throw DomainError(std::string(to_string(f)) + ": requires m > 0 (explicit 1/m in its definition)");
}

OperatorLabel label_for(Family f, Rep r, int k) {
  std::string name(to_string(f));
  if (k >= 0) name += "[" + std::to_string(k) + "]";
  return {name, r, k};
}

PhaseSpaceOperator multiplicative_op(Family f, Rep r, int k, int dim,
                                     std::function<MatJet(const Vec3&)> a) {
  return {dim, label_for(f, r, k), false,
          [a = std::move(a)](const Vec3& p) { return multiplicative(a(p)); }};
}

PhaseSpaceOperator position_op(Family f, Rep r, int k, int dim, std::function<MatJet(const Vec3&)> a) {
  return {dim, label_for(f, r, k), true,
          [a = std::move(a), k](const Vec3& p) { return position_like(a(p), k); }};
}

int dim_of(Rep r) { return r == Rep::fv ? 2 : 4; }

bool allowed(Family f, Rep r) {
  switch (f) {
    case Family::momentum:
    case Family::fw_position:
      return true;
    case Family::oam_fw:
    case Family::total_j:
    case Family::boost_fw:
    case Family::com_oam:
    case Family::projector_plus:
    case Family::projector_minus:
    case Family::projected_oam:
      return r != Rep::fv;
    case Family::dirac_hamiltonian:
    case Family::nw_position_dirac:
    case Family::mean_spin_dirac:
    case Family::dirac_spin:
    case Family::boost_dirac:
    case Family::com_position_dirac:
    case Family::lab_spin_dirac:
    case Family::projected_position_dirac:
    case Family::projected_spin_dirac:
      return r == Rep::dirac;
    case Family::fw_hamiltonian:
    case Family::fw_spin:
    case Family::com_position_fw:
    case Family::lab_spin_fw:
    case Family::four_spin_space:
    case Family::four_spin_time:
    case Family::pauli_lubanski_space:
    case Family::pauli_lubanski_time:
    case Family::spin_prime:
    case Family::projected_position_fw:
    case Family::projected_spin_fw:
      return r == Rep::fw;
    case Family::fv_hamiltonian:
    case Family::fv_velocity:
      return r == Rep::fv;
  }
  return false;
}

bool needs_mass(Family f) {
  switch (f) {
    case Family::com_position_fw:
    case Family::com_position_dirac:
    case Family::lab_spin_fw:
    case Family::lab_spin_dirac:
    case Family::com_oam:
    case Family::four_spin_space:
    case Family::four_spin_time:
    case Family::spin_prime:
    case Family::fv_hamiltonian:
    case Family::fv_velocity:
      return true;
    default:
      return false;
  }
}

/// Position operator q_k = i d/dp_k (radius vector in either representation).
PhaseSpaceOperator radius(Rep r, int k) {
  const int d = dim_of(r);
  return position_op(Family::fw_position, r, k, d, [d](const Vec3&) { return jet::mat_zero(d); });
}

PhaseSpaceOperator momentum_op(Rep r, int k) {
  const int d = dim_of(r);
  return multiplicative_op(Family::momentum, r, k, d, [k, d](const Vec3& p) {
    return scalar(jet::variable(k, p(k)), d);
  });
}

std::array<PhaseSpaceOperator, 3> momentum_vec(Rep r) {
  return {momentum_op(r, 0), momentum_op(r, 1), momentum_op(r, 2)};
}

PhaseSpaceOperator half_anticommutator(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y) {
  return Complex(0.5) * anticommutator(x, y);
}

}  // namespace

PhaseSpaceOperator fw_unitary_free(double m) {
  if (!(m >= 0.0)) throw DomainError("fw_unitary_free: mass must be non-negative");
  return {4, {"U_FW", Rep::dirac, -1}, false, [m](const Vec3& p) {
            const Kin k = kinematics(p, m);
            const ScalarJet norm = jet::reciprocal(jet::sqrt(2.0 * (k.eps * (m + k.eps))));
            return multiplicative(norm * ((m + k.eps) * id4()) + norm * dot(k.p, gammas().gamma));
          }};
}

PhaseSpaceOperator fw_unitary_free_inverse(double m) {
  if (!(m >= 0.0)) throw DomainError("fw_unitary_free_inverse: mass must be non-negative");
  return {4, {"U_FW^-1", Rep::fw, -1}, false, [m](const Vec3& p) {
            const Kin k = kinematics(p, m);
            const ScalarJet norm = jet::reciprocal(jet::sqrt(2.0 * (k.eps * (m + k.eps))));
            return multiplicative(norm * ((m + k.eps) * id4()) - norm * dot(k.p, gammas().gamma));
          }};
}

PhaseSpaceOperator build_operator(Family f, Rep r, double m, int c, double t) {
  if (!(m >= 0.0)) throw DomainError(std::string(to_string(f)) + ": mass must be non-negative");
  if (!allowed(f, r))
    throw std::invalid_argument(std::string(to_string(f)) + " is not defined in the " +
                                std::string(to_string(r)) + " representation");
  if (needs_mass(f)) require_massive(m, f);
  if (is_vector_family(f)) require_component(c, f);
  else c = -1;

  const GammaSet& g = gammas();
  const int d = dim_of(r);

  switch (f) {
    case Family::dirac_hamiltonian:
      return multiplicative_op(f, r, c, d, [m, &g](const Vec3& p) {
        return jet::mat_constant(m * g.beta) + dot(jet::momentum_jets(p), g.alpha);
      });

    case Family::fw_hamiltonian:
      return multiplicative_op(f, r, c, d, [m, &g](const Vec3& p) {
        return kinematics(p, m).eps * g.beta;
      });

    case Family::momentum:
      return momentum_op(r, c);

    case Family::fw_position:
      return radius(r, c);

    case Family::nw_position_dirac:
      return position_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        const ScalarJet e_em = k.inv_eps * k.inv_eps_m;
        return Complex(-0.5) * (e_em * cross(g.Sigma, k.p, c)) +
               Complex(0, 0.5) * (k.inv_eps * g.gamma[c]) -
               Complex(0, 0.5) * ((k.inv_eps * e_em * k.p[c]) * dot(k.p, g.gamma));
      });

    case Family::fw_spin:
    case Family::dirac_spin:
      return multiplicative_op(f, r, c, d, [c, &g](const Vec3&) {
        return jet::mat_constant(0.5 * g.Sigma[c]);
      });

    case Family::mean_spin_dirac:
      return multiplicative_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        return (0.5 * m) * k.inv_eps * g.Sigma[c] - Complex(0, 0.5) * (k.inv_eps * cross(g.gamma, k.p, c)) +
               Complex(0.5) * ((k.inv_eps * k.inv_eps_m * k.p[c]) * dot(k.p, g.Sigma));
      });

    case Family::oam_fw: {
      const std::array<PhaseSpaceOperator, 3> q{radius(r, 0), radius(r, 1), radius(r, 2)};
      return cross(q, momentum_vec(r), c).renamed(label_for(f, r, c).name);
    }

    case Family::total_j: {
      const auto l = build_operator(Family::oam_fw, r, m, c);
      const auto s = multiplicative_op(Family::fw_spin, r, c, d, [c, &g](const Vec3&) {
        return jet::mat_constant(0.5 * g.Sigma[c]);
      });
      return (l + s).renamed(label_for(f, r, c).name);
    }

    case Family::boost_fw: {
      const auto pk = momentum_op(r, c);
      if (r == Rep::fw) {
        const auto h = build_operator(Family::fw_hamiltonian, r, m);
        // (s x p)/(beta m + beta eps) = beta (s x p)/(eps + m); beta commutes with Sigma.
        const auto spin_term = multiplicative_op(f, r, c, d, [m, c, &g](const Vec3& p) {
          const Kin k = kinematics(p, m);
          return Complex(0.5) * (k.inv_eps_m * (g.beta * cross(g.Sigma, k.p, c)));
        });
        return (half_anticommutator(radius(r, c), h) - spin_term - Complex(t) * pk)
            .renamed(label_for(f, r, c).name);
      }
      // Dirac representation with the naive radius vector and spin Sigma/2.
      const auto h = build_operator(Family::dirac_hamiltonian, r, m);
      const auto sxp = multiplicative_op(f, r, c, d, [c, &g](const Vec3& p) {
        return Complex(0.5) * cross(g.Sigma, jet::momentum_jets(p), c);
      });
      const auto denom_inv = multiplicative_op(f, r, c, d, [m, &g](const Vec3& p) {
        return jet::inverse(jet::mat_constant(2.0 * m * g.beta) + dot(jet::momentum_jets(p), g.alpha));
      });
      return (half_anticommutator(radius(r, c), h) - half_anticommutator(sxp, denom_inv) -
              Complex(t) * pk)
          .renamed(label_for(f, r, c).name);
    }

    case Family::boost_dirac: {
      const auto h = build_operator(Family::dirac_hamiltonian, r, m);
      const auto x = build_operator(Family::nw_position_dirac, r, m, c);
      // {S x p, H_D} / (2 eps (eps + m)) with S the mean spin operator.
      const auto spin_term = multiplicative_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        MatJet sxp = jet::mat_zero(4);
        const int i = (c + 1) % 3;
        const int j = (c + 2) % 3;
        auto mean_spin = [&](int n) {
          return (0.5 * m) * k.inv_eps * g.Sigma[n] - Complex(0, 0.5) * (k.inv_eps * cross(g.gamma, k.p, n)) +
                 Complex(0.5) * ((k.inv_eps * k.inv_eps_m * k.p[n]) * dot(k.p, g.Sigma));
        };
        sxp = k.p[j] * mean_spin(i) - k.p[i] * mean_spin(j);
        const MatJet hd = jet::mat_constant(m * g.beta) + dot(k.p, g.alpha);
        return Complex(0.5) * ((k.inv_eps * k.inv_eps_m) * (sxp * hd + hd * sxp));
      });
      return (half_anticommutator(x, h) - spin_term - Complex(t) * momentum_op(r, c))
          .renamed(label_for(f, r, c).name);
    }

    case Family::com_position_fw:
      return position_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        return Complex(0.5 / m) * (k.inv_eps_m * cross(g.Sigma, k.p, c));
      });

    case Family::com_position_dirac:
      return position_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        return jet::mat_constant(kI * g.gamma[c] / (2.0 * m)) -
               Complex(0, 0.5 / m) * ((k.inv_eps * k.inv_eps * k.p[c]) * dot(k.p, g.gamma));
      });

    case Family::lab_spin_fw:
      return multiplicative_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        // zeta = s - (p (p.s) - p^2 s)/(m (eps + m)), s = Sigma/2
        const ScalarJet w = (1.0 / m) * k.inv_eps_m;
        return jet::mat_constant(0.5 * g.Sigma[c]) -
               Complex(0.5) * ((w * k.p[c]) * dot(k.p, g.Sigma)) + Complex(0.5) * ((w * k.p2) * g.Sigma[c]);
      });

    case Family::lab_spin_dirac:
      return multiplicative_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const auto pj = jet::momentum_jets(p);
        return jet::mat_constant(0.5 * g.Sigma[c]) - Complex(0, 0.5 / m) * cross(g.gamma, pj, c);
      });

    case Family::com_oam: {
      const Family pos = r == Rep::fw ? Family::com_position_fw : Family::com_position_dirac;
      return cross(build_vector(pos, r, m), momentum_vec(r), c).renamed(label_for(f, r, c).name);
    }

    case Family::four_spin_space:
      return multiplicative_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        return jet::mat_constant(0.5 * g.Sigma[c]) +
               Complex(0.5 / m) * ((k.inv_eps_m * k.p[c]) * dot(k.p, g.Sigma));
      });

    case Family::four_spin_time:
      return multiplicative_op(f, r, c, d, [m, &g](const Vec3& p) {
        return Complex(0.5 / m) * dot(jet::momentum_jets(p), g.Sigma);
      });

    case Family::pauli_lubanski_space:
      return multiplicative_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        return jet::mat_constant(0.5 * m * g.Sigma[c]) +
               Complex(0.5) * ((k.inv_eps_m * k.p[c]) * dot(k.p, g.Sigma));
      });

    case Family::pauli_lubanski_time:
      return multiplicative_op(f, r, c, d, [&g](const Vec3& p) {
        return Complex(0.5) * dot(jet::momentum_jets(p), g.Sigma);
      });

    case Family::spin_prime: {
      const auto w = build_operator(Family::pauli_lubanski_space, r, m, c);
      const auto w0 = build_operator(Family::pauli_lubanski_time, r, m);
      const auto coef = multiplicative_op(f, r, c, d, [m, c](const Vec3& p) {
        const Kin k = kinematics(p, m);
        return scalar(k.inv_eps_m * k.p[c], 4);
      });
      return (Complex(1.0 / m) * (w - coef * w0)).renamed(label_for(f, r, c).name);
    }

    case Family::projector_plus:
    case Family::projector_minus: {
      const double sgn = f == Family::projector_plus ? 1.0 : -1.0;
      if (r == Rep::fw)
        return multiplicative_op(f, r, c, d, [sgn, &g](const Vec3&) {
          return jet::mat_constant(0.5 * (id4() + sgn * g.beta));
        });
      return multiplicative_op(f, r, c, d, [m, sgn, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        return jet::mat_constant(0.5 * id4()) + Complex(0.5 * sgn * m) * (k.inv_eps * g.beta) +
               Complex(0.5 * sgn) * (k.inv_eps * dot(k.p, g.alpha));
      });
    }

    case Family::projected_position_fw:
      return position_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        return Complex(-0.5) * ((k.inv_eps * k.inv_eps_m) * cross(g.Sigma, k.p, c));
      });

    case Family::projected_position_dirac:
      return position_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        const ScalarJet e2 = k.inv_eps * k.inv_eps;
        return Complex(-0.5) * (e2 * cross(g.Sigma, k.p, c)) + Complex(0, 0.5 * m) * (e2 * g.gamma[c]);
      });

    case Family::projected_spin_fw:
      return multiplicative_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        return (0.5 * m) * k.inv_eps * g.Sigma[c] +
               Complex(0.5) * ((k.inv_eps * k.inv_eps_m * k.p[c]) * dot(k.p, g.Sigma));
      });

    case Family::projected_spin_dirac:
      return multiplicative_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const Kin k = kinematics(p, m);
        const ScalarJet e2 = 0.5 * (k.inv_eps * k.inv_eps);
        return (m * m) * e2 * g.Sigma[c] + (e2 * k.p[c]) * dot(k.p, g.Sigma) -
               Complex(0, m) * (e2 * cross(g.gamma, k.p, c));
      });

    case Family::projected_oam: {
      const Family pos = r == Rep::fw ? Family::projected_position_fw : Family::projected_position_dirac;
      return cross(build_vector(pos, r, m), momentum_vec(r), c).renamed(label_for(f, r, c).name);
    }

    case Family::fv_hamiltonian:
      return multiplicative_op(f, r, c, d, [m, &g](const Vec3& p) {
        const auto pj = jet::momentum_jets(p);
        const ScalarJet p2 = pj[0] * pj[0] + pj[1] * pj[1] + pj[2] * pj[2];
        const ComplexMatrix nil = g.rho[2] + kI * g.rho[1];
        return jet::mat_constant(m * g.rho[2]) + (0.5 / m) * p2 * nil;
      });

    case Family::fv_velocity:
      return multiplicative_op(f, r, c, d, [m, c, &g](const Vec3& p) {
        const ComplexMatrix nil = g.rho[2] + kI * g.rho[1];
        return (1.0 / m) * jet::variable(c, p(c)) * nil;
      });
  }
  throw std::invalid_argument("build_operator: unknown family");
}

std::array<PhaseSpaceOperator, 3> build_vector(Family f, Rep r, double m, double t) {
  if (!is_vector_family(f))
    throw std::invalid_argument(std::string(to_string(f)) + " is not a vector family");
  return {build_operator(f, r, m, 0, t), build_operator(f, r, m, 1, t), build_operator(f, r, m, 2, t)};
}

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
  bool vector;
};

constexpr std::array<FamilyName, 31> kFamilies{{
    {Family::dirac_hamiltonian, "dirac_hamiltonian", false},
    {Family::fw_hamiltonian, "fw_hamiltonian", false},
    {Family::momentum, "momentum", true},
    {Family::fw_position, "fw_position", true},
    {Family::nw_position_dirac, "nw_position_dirac", true},
    {Family::fw_spin, "fw_spin", true},
    {Family::mean_spin_dirac, "mean_spin_dirac", true},
    {Family::dirac_spin, "dirac_spin", true},
    {Family::oam_fw, "oam_fw", true},
    {Family::total_j, "total_j", true},
    {Family::boost_fw, "boost_fw", true},
    {Family::boost_dirac, "boost_dirac", true},
    {Family::com_position_fw, "com_position_fw", true},
    {Family::com_position_dirac, "com_position_dirac", true},
    {Family::lab_spin_fw, "lab_spin_fw", true},
    {Family::lab_spin_dirac, "lab_spin_dirac", true},
    {Family::com_oam, "com_oam", true},
    {Family::four_spin_space, "four_spin_space", true},
    {Family::four_spin_time, "four_spin_time", false},
    {Family::pauli_lubanski_space, "pauli_lubanski_space", true},
    {Family::pauli_lubanski_time, "pauli_lubanski_time", false},
    {Family::spin_prime, "spin_prime", true},
    {Family::projector_plus, "projector_plus", false},
    {Family::projector_minus, "projector_minus", false},
    {Family::projected_position_fw, "projected_position_fw", true},
    {Family::projected_position_dirac, "projected_position_dirac", true},
    {Family::projected_spin_fw, "projected_spin_fw", true},
    {Family::projected_spin_dirac, "projected_spin_dirac", true},
    {Family::projected_oam, "projected_oam", true},
    {Family::fv_hamiltonian, "fv_hamiltonian", false},
    {Family::fv_velocity, "fv_velocity", true},
}};

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& e : kFamilies)
    if (e.family == f) return e.name;
  return "unknown";
}

std::string_view to_string(Rep r) {
  switch (r) {
    case Rep::dirac: return "dirac";
    case Rep::fw: return "fw";
    case Rep::fv: return "fv";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& e : kFamilies)
    if (e.name == name) return e.family;
  return std::nullopt;
}

bool is_vector_family(Family f) {
  for (const auto& e : kFamilies)
    if (e.family == f) return e.vector;
  return false;
}

}  // namespace fwlab
