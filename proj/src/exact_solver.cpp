#include "metastable/exact_solver.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "metastable/summation.hpp"

namespace metastable {
namespace {

constexpr int kMaxBisections = 200;
constexpr double kRelTol = 1e-14;
constexpr int kLanes = 4;

std::vector<double> band_poles(const ModelParams& p) {
  std::vector<double> poles(static_cast<std::size_t>(p.n - 1));
  for (int n = 2; n <= p.n; ++n) poles[n - 2] = band_level(p, n);
  return poles;
}

// Compensated sum of 1 / (pole - lambda)^power for power 1 or 2. Four
// independent lanes break the dependency chain so the loop vectorizes.
template <int Power>
double pole_sum(std::span<const double> poles, double lambda) {
  double sum[kLanes] = {};
  double err[kLanes] = {};
  const std::size_t blocked = poles.size() - poles.size() % kLanes;
  for (std::size_t i = 0; i < blocked; i += kLanes) {
    for (int l = 0; l < kLanes; ++l) {
      const double inv = 1.0 / (poles[i + l] - lambda);
      const double x = Power == 1 ? inv : inv * inv;
      const double t = sum[l] + x;
      const double z = t - sum[l];
      err[l] += (sum[l] - (t - z)) + (x - z);
      sum[l] = t;
    }
  }
  CompensatedSum total;
  for (int l = 0; l < kLanes; ++l) {
    total += sum[l];
    total += err[l];
  }
  for (std::size_t i = blocked; i < poles.size(); ++i) {
    const double inv = 1.0 / (poles[i] - lambda);
    total += Power == 1 ? inv : inv * inv;
  }
  return total.value();
}

void require_off_pole(std::span<const double> poles, double lambda) {
  // poles are ascending
  const auto it = std::lower_bound(poles.begin(), poles.end(), lambda);
  if (it != poles.end() && *it == lambda) {
    throw NumericalFailure("secular equation evaluated on a pole at " + std::to_string(lambda));
  }
}

double residual(std::span<const double> poles, double lambda, const ModelParams& p) {
  return (lambda - p.eps0) + p.w * p.w * pole_sum<1>(poles, lambda);
}

double bisect(std::span<const double> poles, const ModelParams& p, double lo, double hi) {
  for (int iter = 0; iter < kMaxBisections; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    const double tol = kRelTol * std::max(std::abs(mid), p.de);
    if (hi - lo <= tol || mid <= lo || mid >= hi) return mid;
    const double h = residual(poles, mid, p);
    if (h > 0.0) {
      hi = mid;
    } else if (h < 0.0) {
      lo = mid;
    } else {
      return mid;
    }
  }
  throw NumericalFailure("bisection did not converge in (" + std::to_string(lo) + ", " +
                         std::to_string(hi) + ")");
}

}  // namespace

double secular_residual(double lambda, const ModelParams& p) {
  const auto poles = band_poles(p);
  require_off_pole(poles, lambda);
  return residual(poles, lambda, p);
}

std::vector<double> eigenvalues_exact(const ModelParams& p) {
  if (p.w == 0.0) {
    auto diag = unperturbed_spectrum(p);
    std::sort(diag.begin(), diag.end());
    return diag;
  }
  const auto poles = band_poles(p);
  const double bound = p.de * (p.n / 2 - 1) + p.n * p.w + p.de;
  const double lowest = p.eps0 - bound;
  const double highest = p.eps0 + bound;
  if (residual(poles, lowest, p) >= 0.0 || residual(poles, highest, p) <= 0.0) {
    throw NumericalFailure("outer secular bracket does not enclose the extreme roots");
  }

  std::vector<double> roots(static_cast<std::size_t>(p.n));
  roots.front() = bisect(poles, p, lowest, poles.front());
  for (std::size_t j = 0; j + 1 < poles.size(); ++j) {
    roots[j + 1] = bisect(poles, p, poles[j], poles[j + 1]);
  }
  roots.back() = bisect(poles, p, poles.back(), highest);
  return roots;
}

double first_component_sq_exact(double ek, const ModelParams& p) {
  const auto poles = band_poles(p);
  require_off_pole(poles, ek);
  return 1.0 / (1.0 + p.w * p.w * pole_sum<2>(poles, ek));
}

ExactEigenvector eigenvector_exact(double ek, const ModelParams& p) {
  if (p.w == 0.0) throw InvalidModel("eigenvector_exact requires W > 0");
  const double psi1 = std::sqrt(first_component_sq_exact(ek, p));
  ExactEigenvector v;
  v.components.resize(static_cast<std::size_t>(p.n));
  v.components[0] = psi1;
  CompensatedSum norm_sq(psi1 * psi1);
  for (int n = 2; n <= p.n; ++n) {
    const double c = -psi1 * p.w / (band_level(p, n) - ek);
    v.components[n - 1] = c;
    norm_sq += c * c;
  }
  v.norm_error = std::abs(std::sqrt(norm_sq.value()) - 1.0);
  return v;
}

ExactSpectrum exact_spectrum(const ModelParams& p) {
  ExactSpectrum s;
  s.energies = eigenvalues_exact(p);
  s.weights.resize(s.energies.size());
  if (p.w == 0.0) {
    // |1> stays an eigenstate; give it the first of the two levels at eps0.
    const auto it = std::find(s.energies.begin(), s.energies.end(), p.eps0);
    s.weights[static_cast<std::size_t>(it - s.energies.begin())] = 1.0;
    return s;
  }
  const auto poles = band_poles(p);
  for (std::size_t k = 0; k < s.energies.size(); ++k) {
    s.weights[k] = 1.0 / (1.0 + p.w * p.w * pole_sum<2>(poles, s.energies[k]));
  }
  return s;
}

}  // namespace metastable
