#pragma once

#include <vector>

#include "metastable/exact_solver.hpp"
#include "metastable/model.hpp"

namespace metastable {

struct EnergyTerms {
  double e1 = 0.0;  // de (k - N/2 - 1/2)
  double e2 = 0.0;  // arctan correction around e1
  double e3 = 0.0;  // arctan correction around e1 + e2
  double e4 = 0.0;  // logarithmic finite-band correction
};

enum class ApproxOrder { zeroth, final };

// Which energy is fed into the analytic norm estimate.
enum class WeightEnergy { final, exact };

struct ApproxLevel {
  int k = 0;
  EnergyTerms terms;
  double e_zeroth = 0.0;  // eps0 + e1 + e2
  double e_final = 0.0;   // eps0 + e1 + e3 + e4
  double weight_approx = 0.0;
  double weight_lorentz = 0.0;
};

// Terms are deviations from eps0. Throws InvalidModel for w == 0 or k out of
// range.
EnergyTerms energy_terms(int k, const ModelParams& p);

// Absolute approximate energy of level k (eps0 included).
double energy_approx(int k, const ModelParams& p, ApproxOrder order);

// Analytic estimate of |psi_1|^2 at energy ek: the band sum is replaced by
// the infinite lattice sum pi^2 / sin^2 minus midpoint-rule integrals for the
// two missing tails. Throws NumericalFailure when ek sits on a band level.
double weight_approx(double ek, int k, const ModelParams& p);

// Lorentzian line shape de (gamma / 2 pi) / (e1^2 + gamma^2 / 4).
double lorentzian_weight(int k, const ModelParams& p);

// dE_k/dk from the Lorentzian compression of levels; the density of states
// is its reciprocal.
double level_spacing_approx(int k, const ModelParams& p);
inline double density_of_states_approx(int k, const ModelParams& p) {
  return 1.0 / level_spacing_approx(k, p);
}

ApproxLevel approx_level(int k, const ModelParams& p);

// Analytic levels for k = 1..N. With WeightEnergy::exact the norm estimate is
// evaluated at the supplied exact energies instead of the final analytic ones.
std::vector<ApproxLevel> approx_spectrum(const ModelParams& p,
                                         WeightEnergy weight_at = WeightEnergy::final,
                                         const ExactSpectrum* exact = nullptr);

// Fully analytic spectrum (final energies, analytic weights) usable wherever
// an ExactSpectrum is expected, e.g. for dephasing comparisons in dynamics.
ExactSpectrum analytic_spectrum(const ModelParams& p);

}  // namespace metastable
