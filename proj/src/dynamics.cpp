#include "metastable/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metastable/summation.hpp"

namespace metastable {

std::complex<double> survival_amplitude(double t, const ExactSpectrum& spectrum,
                                        const ModelParams& p) {
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t k = 0; k < spectrum.energies.size(); ++k) {
    const double phase = spectrum.energies[k] * t / p.hbar;
    re += spectrum.weights[k] * std::cos(phase);
    im += -spectrum.weights[k] * std::sin(phase);
  }
  return {re.value(), im.value()};
}

double survival_probability(double t, const ExactSpectrum& spectrum, const ModelParams& p) {
  return std::norm(survival_amplitude(t, spectrum, p));
}

DecayCurve decay_curve(std::span<const double> times, const ExactSpectrum& spectrum,
                       const ModelParams& p) {
  if (!std::is_sorted(times.begin(), times.end())) {
    throw std::invalid_argument("decay time grid must be sorted");
  }
  if (!times.empty() && times.front() < 0.0) {
    throw std::invalid_argument("decay time grid must be non-negative");
  }
  const double gamma = derived_scales(p).gamma;
  DecayCurve c;
  c.times.assign(times.begin(), times.end());
  c.p.reserve(times.size());
  c.p_exp.reserve(times.size());
  c.dp.reserve(times.size());
  for (const double t : times) {
    const double prob = survival_probability(t, spectrum, p);
    const double ref = std::exp(-gamma * t / p.hbar);
    c.p.push_back(prob);
    c.p_exp.push_back(ref);
    c.dp.push_back(prob - ref);
  }
  return c;
}

std::vector<double> uniform_grid(double t_begin, double t_end, int steps) {
  if (steps < 2) throw std::invalid_argument("a time grid needs at least 2 points");
  if (!(t_end > t_begin)) throw std::invalid_argument("time grid end must exceed its start");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double h = (t_end - t_begin) / (steps - 1);
  for (int i = 0; i < steps; ++i) grid[i] = t_begin + h * i;
  grid.back() = t_end;
  return grid;
}

std::vector<double> default_decay_grid(const ModelParams& p) {
  const double gamma = derived_scales(p).gamma;
  if (!(gamma > 0.0)) throw std::invalid_argument("default decay grid needs W > 0");
  return uniform_grid(0.0, 5.0 * p.hbar / gamma, 2000);
}

RevivalProfile revival_profile(double t_begin, double t_end, const ExactSpectrum& spectrum,
                               const ModelParams& p, double step) {
  if (!(t_end > t_begin) || t_begin < 0.0) {
    throw std::invalid_argument("revival window must be a positive interval");
  }
  if (step <= 0.0) step = derived_scales(p).t0 / 1e5;
  const int steps = static_cast<int>(std::ceil((t_end - t_begin) / step)) + 1;

  RevivalProfile r;
  r.times = uniform_grid(t_begin, t_end, std::max(steps, 2));
  r.p.reserve(r.times.size());
  for (const double t : r.times) {
    const double prob = survival_probability(t, spectrum, p);
    if (prob > r.p_max) {
      r.p_max = prob;
      r.t_at_max = t;
    }
    r.p.push_back(prob);
  }
  return r;
}

boost::multiprecision::cpp_int recurrence_time(int digits, std::span<const double> energies,
                                               double de, double eps0) {
  using boost::multiprecision::cpp_int;
  if (digits < 1) throw std::invalid_argument("recurrence accuracy M must be >= 1");
  const double scale = std::pow(10.0, digits);
  cpp_int result = 0;
  for (const double e : energies) {
    const double level = std::abs(std::trunc(scale * (e - eps0) / de));
    if (level == 0.0) continue;
    const cpp_int term(level);
    result = result == 0 ? term : boost::multiprecision::lcm(result, term);
  }
  if (result == 0) {
    throw std::invalid_argument("every scaled level truncates to zero");
  }
  return result;
}

boost::multiprecision::cpp_int recurrence_time(int digits, const ExactSpectrum& spectrum,
                                               const ModelParams& p) {
  return recurrence_time(digits, spectrum.energies, p.de, p.eps0);
}

}  // namespace metastable
