#pragma once

#include <complex>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "metastable/exact_solver.hpp"
#include "metastable/model.hpp"

namespace metastable {

struct DecayCurve {
  std::vector<double> times;
  std::vector<double> p;      // survival probability |a(t)|^2
  std::vector<double> p_exp;  // exp(-gamma t / hbar)
  std::vector<double> dp;     // p - p_exp
};

struct RevivalProfile {
  std::vector<double> times;
  std::vector<double> p;
  double p_max = 0.0;
  double t_at_max = 0.0;
};

// a(t) = <1|psi(t)> = sum_k exp(-i E_k t / hbar) |psi_1^(k)|^2.
std::complex<double> survival_amplitude(double t, const ExactSpectrum& spectrum,
                                        const ModelParams& p);

double survival_probability(double t, const ExactSpectrum& spectrum, const ModelParams& p);

// Throws std::invalid_argument when the grid is unsorted or negative.
DecayCurve decay_curve(std::span<const double> times, const ExactSpectrum& spectrum,
                       const ModelParams& p);

// steps points uniformly covering [0, tmax].
std::vector<double> uniform_grid(double t_begin, double t_end, int steps);

// [0, 5 hbar / gamma] with 2000 points.
std::vector<double> default_decay_grid(const ModelParams& p);

// P(t) sampled on [t_begin, t_end] with the given step (default T0 / 1e5).
RevivalProfile revival_profile(double t_begin, double t_end, const ExactSpectrum& spectrum,
                               const ModelParams& p, double step = 0.0);

// LCM over k of |trunc(10^digits (E_k - eps0) / de)|, zero entries skipped.
// Throws std::invalid_argument when every entry truncates to zero.
boost::multiprecision::cpp_int recurrence_time(int digits, std::span<const double> energies,
                                               double de, double eps0 = 0.0);
boost::multiprecision::cpp_int recurrence_time(int digits, const ExactSpectrum& spectrum,
                                               const ModelParams& p);

}  // namespace metastable
