#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "fwlab/jet.hpp"
#include "fwlab/types.hpp"

namespace fwlab {

enum class Rep { dirac, fw, fv };

enum class Family {
  dirac_hamiltonian,
  fw_hamiltonian,
  momentum,
  fw_position,
  nw_position_dirac,
  fw_spin,
  mean_spin_dirac,
  dirac_spin,
  oam_fw,
  total_j,
  boost_fw,
  boost_dirac,
  com_position_fw,
  com_position_dirac,
  lab_spin_fw,
  lab_spin_dirac,
  com_oam,
  four_spin_space,
  four_spin_time,
  pauli_lubanski_space,
  pauli_lubanski_time,
  spin_prime,
  projector_plus,
  projector_minus,
  projected_position_fw,
  projected_position_dirac,
  projected_spin_fw,
  projected_spin_dirac,
  projected_oam,
  fv_hamiltonian,
  fv_velocity,
};

std::string_view to_string(Family f);
std::string_view to_string(Rep r);
std::optional<Family> family_from_string(std::string_view name);
bool is_vector_family(Family f);

struct OperatorLabel {
  std::string name;
  Rep rep = Rep::dirac;
  int component = -1;  // 0..2 for vector families, -1 otherwise
};

/// Taylor expansion of the coefficients of A(p) + sum_k B_k(p) d/dp_k around
/// one momentum. `first_order` is false for purely multiplicative operators,
/// in which case b holds zeros.
struct OpJet {
  jet::MatJet a;
  std::array<jet::MatJet, 3> b;
  bool first_order = false;

  int dim() const { return jet::dim(a); }
  int order() const;
};

OpJet multiplicative(const jet::MatJet& a);
/// A + i * d/dp_k (the k-th position operator shifted by the matrix part A).
OpJet position_like(const jet::MatJet& a, int k);

/// Coefficients of an operator at one momentum. `second` is the symmetrized
/// coefficient of d^2/dp_k dp_l and is only populated on commutator results.
struct PhaseOpValue {
  ComplexMatrix a;
  std::array<ComplexMatrix, 3> b;
  std::array<std::array<ComplexMatrix, 3>, 3> second;

  static PhaseOpValue zero(int dim);
  /// sqrt of the summed squared Frobenius norms of all parts.
  double norm() const;
  PhaseOpValue& operator+=(const PhaseOpValue& o);
  PhaseOpValue& operator-=(const PhaseOpValue& o);
  PhaseOpValue& operator*=(Complex s);
};

PhaseOpValue operator+(PhaseOpValue a, const PhaseOpValue& b);
PhaseOpValue operator-(PhaseOpValue a, const PhaseOpValue& b);
PhaseOpValue operator*(Complex s, PhaseOpValue a);

// Jet-level algebra. These are the kernels behind the operator-level API and
// are exposed so batch code can reuse one expansion per momentum.
OpJet operator+(const OpJet& x, const OpJet& y);
OpJet operator-(const OpJet& x, const OpJet& y);
OpJet operator*(Complex s, const OpJet& x);
/// Composition x * y; at most one factor may carry a derivative part.
OpJet operator*(const OpJet& x, const OpJet& y);
/// [x, y] as an operator. Throws NumericalError when the result has a
/// nonzero second-order part.
OpJet commutator(const OpJet& x, const OpJet& y);
OpJet anticommutator(const OpJet& x, const OpJet& y);
PhaseOpValue value(const OpJet& x);
PhaseOpValue commutator_value(const OpJet& x, const OpJet& y);

class PhaseSpaceOperator {
 public:
  using Expansion = std::function<OpJet(const Vec3&)>;

  PhaseSpaceOperator(int dim, OperatorLabel label, bool first_order, Expansion expansion);

  int dim() const { return dim_; }
  const OperatorLabel& label() const { return label_; }
  bool is_multiplicative() const { return !first_order_; }

  /// Coefficient expansion at p. Throws NumericalError on non-finite output.
  OpJet expand(const Vec3& p) const;
  PhaseSpaceOperator renamed(std::string name) const;

 private:
  int dim_;
  OperatorLabel label_;
  bool first_order_;
  Expansion expansion_;
};

PhaseSpaceOperator operator+(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y);
PhaseSpaceOperator operator-(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y);
PhaseSpaceOperator operator*(Complex s, const PhaseSpaceOperator& x);
PhaseSpaceOperator operator*(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y);
PhaseSpaceOperator commutator(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y);
PhaseSpaceOperator anticommutator(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y);
/// Component k of the vector cross product (u x v) for operator triples.
PhaseSpaceOperator cross(const std::array<PhaseSpaceOperator, 3>& u,
                         const std::array<PhaseSpaceOperator, 3>& v, int k);

PhaseOpValue evaluate(const PhaseSpaceOperator& op, const Vec3& p);
PhaseOpValue op_commutator(const PhaseSpaceOperator& x, const PhaseSpaceOperator& y, const Vec3& p);

/// U * op * U_inv with U, U_inv multiplicative. U * U_inv = I is checked to
/// 1e-10 at every evaluation point (NotUnitaryError otherwise).
PhaseSpaceOperator conjugate(const PhaseSpaceOperator& op, const PhaseSpaceOperator& u,
                             const PhaseSpaceOperator& u_inv);

/// Residual of the operator Hermiticity conditions B_k^dagger = -B_k and
/// A - A^dagger = sum_k dB_k/dp_k at p.
double hermiticity_residual(const PhaseSpaceOperator& op, const Vec3& p);

/// Free-particle FW unitary (eps + m + gamma . p) / sqrt(2 eps (eps + m)) and its inverse.
PhaseSpaceOperator fw_unitary_free(double m);
PhaseSpaceOperator fw_unitary_free_inverse(double m);

/// Operator of the given family. `component` selects 0..2 for vector families
/// and is ignored otherwise. `t` is the clock value entering the boosts.
/// Throws DomainError for m < 0 or m = 0 on families with explicit 1/m, and
/// std::invalid_argument for an unsupported (family, rep) pair.
PhaseSpaceOperator build_operator(Family family, Rep rep, double m, int component = -1,
                                  double t = 0.0);
std::array<PhaseSpaceOperator, 3> build_vector(Family family, Rep rep, double m, double t = 0.0);

}  // namespace fwlab
