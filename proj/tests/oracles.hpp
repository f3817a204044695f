// Test-only reference computations, kept independent of the library paths
// they check: long double brute force and direct formula evaluation.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "metastable/model.hpp"

namespace oracle {

// Secular function summed naively in long double, poles rebuilt from scratch.
inline long double secular(long double lambda, int n, long double de, long double w,
                           long double eps0 = 0.0L) {
  long double s = lambda - eps0;
  for (int j = 2; j <= n; ++j) {
    const long double pole = eps0 + de * (j - n / 2 - 1);
    s += w * w / (pole - lambda);
  }
  return s;
}

inline long double norm_sum(long double e, int n, long double de, long double w,
                            long double eps0 = 0.0L) {
  long double s = 1.0L;
  for (int j = 2; j <= n; ++j) {
    const long double d = eps0 + de * (j - n / 2 - 1) - e;
    s += w * w / (d * d);
  }
  return 1.0L / s;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracle
