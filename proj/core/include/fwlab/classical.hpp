#pragma once

#include <functional>

#include "fwlab/types.hpp"

namespace fwlab::classical {

/// Phase-space point of a free spinning particle.
struct ClassicalState {
  Vec3 Q = Vec3::Zero();
  Vec3 P = Vec3::Zero();
  Vec3 S = Vec3::Zero();
  double m = 1.0;
  double t = 0.0;
};

using Observable = std::function<double(const ClassicalState&)>;

/// {f, g} = sum_i (df/dQ_i dg/dP_i - df/dP_i dg/dQ_i) + e_ijk S_k df/dS_i dg/dS_j.
/// Gradients by central differences (step 1e-6 * max(1, |coordinate|)) with
/// one Richardson level. Throws NumericalError on a non-finite gradient.
double poisson_bracket(const Observable& f, const Observable& g, const ClassicalState& state);

// Dynamical variables. Components are 0-based.
Observable position(int i);
Observable momentum(int i);
Observable spin(int i);
Observable hamiltonian();
Observable orbital(int i);
Observable total_j(int i);
/// Q_i H - (S x P)_i / (m + H) - t P_i
Observable boost(int i);
/// Center-of-mass position Q + (S x P)/(m (H + m)).
Observable com_position(int i);
/// Laboratory-frame spin S - P x (P x S)/(m (H + m)).
Observable lab_spin(int i);
/// Projected position Q - (S x P)/(H (H + m)).
Observable projected_position(int i);
/// (t P_i + K_i)/H, the alternative form of the projected position.
Observable projected_position_from_boost(int i);

}  // namespace fwlab::classical
