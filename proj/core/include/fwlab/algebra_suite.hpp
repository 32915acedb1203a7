#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fwlab/phase_ops.hpp"

namespace fwlab {

/// conventional: FW operators x, Sigma/2, x cross p (the reference set).
/// conventional_dirac: the same set carried to the Dirac representation.
/// center_of_mass / projected: the alternative FW position-spin pairs.
/// naive_dirac: Dirac radius vector r with spin Sigma/2 and H_D.
enum class OperatorSetName { conventional, conventional_dirac, center_of_mass, projected, naive_dirac };

std::string_view to_string(OperatorSetName s);
std::optional<OperatorSetName> set_from_string(std::string_view name);
const std::vector<OperatorSetName>& all_sets();

enum class Expectation { hold, fail };
std::string_view to_string(Expectation e);

struct OperatorSet {
  OperatorSetName name;
  Rep rep;
  double m;
  double t;
  PhaseSpaceOperator H;
  std::array<PhaseSpaceOperator, 3> p, q, s, l, j, K;
};

OperatorSet build_operator_set(OperatorSetName name, double m, double t = 0.0);

struct SuiteConfig {
  double tolerance = 1e-8;        // hold: max residual <= tolerance
  double floor = 1e-3;            // fail: residual >= floor ...
  double fail_fraction = 0.95;    // ... at no less than this fraction of samples
  double t = 0.0;                 // clock value in the boosts
  std::uint64_t seed = 42;
  double box = 5.0;               // momentum components uniform in [-box, box]
  double min_momentum = 1e-3;     // samples with |p| below this are redrawn
};

struct AlgebraReport {
  std::string identity_id;
  std::string set_name;
  double mass = 0.0;
  int samples = 0;
  double max_residual = 0.0;
  double min_residual = 0.0;
  double fraction_above_floor = 0.0;
  Expectation expected = Expectation::hold;
  double tolerance = 0.0;
  double floor = 0.0;
  bool pass = false;
};

/// Uniform doubles in [0, 1) drawn from mt19937_64 with a fixed bit recipe so
/// sample sets are identical across standard libraries.
std::vector<Vec3> sample_momenta(int n, std::uint64_t seed, double box = 5.0, double min_norm = 1e-3);

/// Residual table of the commutator identities for one operator set.
std::vector<AlgebraReport> run_quantum_suite(OperatorSetName set, double m, int n_samples,
                                             const SuiteConfig& cfg = {});
/// Poisson-bracket counterparts, the classical center-of-mass/projected
/// contrasts, and the quantum-classical correspondence on the positive-energy block.
std::vector<AlgebraReport> run_classical_suite(int n_samples, const SuiteConfig& cfg = {}, double m = 1.0);

/// Expected outcome of identity `id` for the given set.
Expectation expected_outcome(OperatorSetName set, std::string_view id);
/// Identity ids of the commutator table, in report order.
const std::vector<std::string>& quantum_identity_ids();

bool all_pass(const std::vector<AlgebraReport>& reports);

void to_json(nlohmann::json& j, const AlgebraReport& r);
nlohmann::json reports_to_json(const std::vector<AlgebraReport>& reports);

}  // namespace fwlab
