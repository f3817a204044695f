#include "metastable/approx_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace metastable {
namespace {

constexpr double kPi = std::numbers::pi;

void require_level(int k, const ModelParams& p) {
  if (k < 1 || k > p.n) {
    throw InvalidModel("level index " + std::to_string(k) + " outside 1.." + std::to_string(p.n));
  }
}

double gamma_of(const ModelParams& p) { return 2.0 * kPi * p.w * p.w / p.de; }

double grid_offset(int k, const ModelParams& p) { return p.de * (k - p.n / 2 - 0.5); }

}  // namespace

EnergyTerms energy_terms(int k, const ModelParams& p) {
  require_level(k, p);
  if (p.w == 0.0) throw InvalidModel("analytic energy terms need W > 0");
  const double half_width = 0.5 * gamma_of(p);
  const double w2 = p.w * p.w;
  EnergyTerms t;
  t.e1 = grid_offset(k, p);
  t.e2 = -(p.de / kPi) * std::atan(t.e1 / half_width);
  t.e3 = -(p.de / kPi) * std::atan((t.e1 + t.e2) / half_width);
  const double shifted = (t.e1 + t.e3) * p.de / w2;
  t.e4 = -p.de * std::log((p.n - k + 0.5) / (k - 0.5)) / (kPi * kPi + shifted * shifted);
  return t;
}

double energy_approx(int k, const ModelParams& p, ApproxOrder order) {
  const auto t = energy_terms(k, p);
  return order == ApproxOrder::zeroth ? p.eps0 + t.e1 + t.e2 : p.eps0 + t.e1 + t.e3 + t.e4;
}

double weight_approx(double ek, int k, const ModelParams& p) {
  require_level(k, p);
  if (p.w == 0.0) throw InvalidModel("analytic weight needs W > 0");
  const double x = (ek - p.eps0) / p.de;
  // sin^2(pi x) is periodic; reducing x first keeps the argument small.
  const double frac = x - std::round(x);
  if (std::abs(frac) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
    throw NumericalFailure("analytic weight evaluated on a band level");
  }
  const double s = std::sin(kPi * frac);
  const double half_n = 0.5 * p.n;
  const double lattice = kPi * kPi / (s * s);
  const double tails = -1.0 / (half_n - 0.5 - x) + 1.0 / (0.5 - half_n - x);
  return 1.0 / (1.0 + (p.w * p.w) / (p.de * p.de) * (lattice + tails));
}

double lorentzian_weight(int k, const ModelParams& p) {
  require_level(k, p);
  const double g = gamma_of(p);
  const double e1 = grid_offset(k, p);
  return p.de * (g / (2.0 * kPi)) / (e1 * e1 + 0.25 * g * g);
}

double level_spacing_approx(int k, const ModelParams& p) {
  require_level(k, p);
  const double g = gamma_of(p);
  const double e1 = grid_offset(k, p);
  return p.de - (p.de * p.de / kPi) * (0.5 * g) / (e1 * e1 + 0.25 * g * g);
}

ApproxLevel approx_level(int k, const ModelParams& p) {
  ApproxLevel level;
  level.k = k;
  level.terms = energy_terms(k, p);
  level.e_zeroth = p.eps0 + level.terms.e1 + level.terms.e2;
  level.e_final = p.eps0 + level.terms.e1 + level.terms.e3 + level.terms.e4;
  level.weight_approx = weight_approx(level.e_final, k, p);
  level.weight_lorentz = lorentzian_weight(k, p);
  return level;
}

std::vector<ApproxLevel> approx_spectrum(const ModelParams& p, WeightEnergy weight_at,
                                         const ExactSpectrum* exact) {
  if (weight_at == WeightEnergy::exact &&
      (exact == nullptr || exact->energies.size() != static_cast<std::size_t>(p.n))) {
    throw std::invalid_argument("exact-energy weights need an exact spectrum of size N");
  }
  std::vector<ApproxLevel> levels;
  levels.reserve(static_cast<std::size_t>(p.n));
  for (int k = 1; k <= p.n; ++k) {
    auto level = approx_level(k, p);
    if (weight_at == WeightEnergy::exact) {
      level.weight_approx = weight_approx(exact->energies[k - 1], k, p);
    }
    levels.push_back(level);
  }
  return levels;
}

ExactSpectrum analytic_spectrum(const ModelParams& p) {
  ExactSpectrum s;
  s.energies.reserve(static_cast<std::size_t>(p.n));
  s.weights.reserve(static_cast<std::size_t>(p.n));
  for (int k = 1; k <= p.n; ++k) {
    const auto level = approx_level(k, p);
    s.energies.push_back(level.e_final);
    s.weights.push_back(level.weight_approx);
  }
  return s;
}

}  // namespace metastable
