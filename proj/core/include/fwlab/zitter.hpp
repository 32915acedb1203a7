#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fwlab/phase_ops.hpp"
#include "fwlab/types.hpp"

namespace fwlab {

/// Drift and oscillation pieces of v(t) = A exp(-2iHt) + p_k H^{-1} for a
/// Hamiltonian with H^2 = eps^2. A splits over the energy projectors as
/// A exp(-2iHt) = A_plus exp(-2i eps t) + A_minus exp(+2i eps t).
struct ZitterCoefficients {
  ComplexMatrix drift;    // p_k H^{-1}
  ComplexMatrix A;        // v(0) - p_k H^{-1}
  ComplexMatrix A_plus;   // A (1 + H/eps)/2
  ComplexMatrix A_minus;  // A (1 - H/eps)/2
  double eps = 0.0;
};

/// Heisenberg-picture velocity e^{iHt} alpha_k e^{-iHt} in closed form.
ComplexMatrix dirac_velocity_closed(const Vec3& p, double m, double t, int component);
/// Drift plus oscillation p_k t H^{-1} + (i/2) A H^{-1} (e^{-2iHt} - 1). The r(0)
/// term is the differential part of the position operator and is not included.
ComplexMatrix dirac_position_closed(const Vec3& p, double m, double t, int component);

/// e^{iHt} O e^{-iHt} through matrix exponentials. H may be non-Hermitian
/// (the Feshbach-Villars Hamiltonian is only pseudo-Hermitian).
ComplexMatrix heisenberg_numeric(const ComplexMatrix& h, const ComplexMatrix& o, double t);

/// rho_3 m + (rho_3 + i rho_2) p^2 / (2m)
ComplexMatrix fv_hamiltonian_matrix(const Vec3& p, double m);

struct FvZitter {
  ComplexMatrix velocity;
  ComplexMatrix position;  // drift plus oscillation, as in dirac_position_closed
};

/// Closed-form 2x2 Feshbach-Villars velocity and position parts. Needs m > 0.
FvZitter fv_closed(const Vec3& p, double m, double t, int component);

/// beta p_k / sqrt(m^2 + p^2). Rejects m = 0 with p = 0.
ComplexMatrix fw_velocity(const Vec3& p, double m, int component);

/// Coefficients for H = dirac_hamiltonian (Rep::dirac) or fv_hamiltonian_matrix (Rep::fv).
ZitterCoefficients zitter_coefficients(Rep rep, const Vec3& p, double m, int component);

struct EvolutionRecord {
  Rep rep = Rep::dirac;
  Vec3 p = Vec3::Zero();
  double m = 0.0;
  int component = 0;
  std::vector<double> times;
  std::vector<ComplexMatrix> velocity;
  std::vector<ComplexMatrix> position;
};

enum class Route { closed, numeric };

/// Samples t_j = j t_max / (samples - 1). The numeric route conjugates the
/// initial velocity with heisenberg_numeric and integrates nothing: the
/// position part is taken from the closed form in both routes.
EvolutionRecord record_evolution(Rep rep, const Vec3& p, double m, int component, double t_max,
                                 int samples, Route route = Route::numeric);

/// Angular frequency w of a uniformly sampled series c0 + a e^{-iwt} + b e^{iwt},
/// from a least-squares fit of the three-term recurrence of its first differences.
/// Needs w dt < pi and at least four samples.
double extract_frequency(const std::vector<Complex>& series, double dt);

/// Frequency of the velocity matrix element with the largest oscillation.
double dominant_frequency(const EvolutionRecord& rec);

/// CSV: t, then re/im of every velocity element, then of every position element.
/// Columns are named v_<row><col>_re etc.
void write_csv(const EvolutionRecord& rec, std::ostream& out);

}  // namespace fwlab
