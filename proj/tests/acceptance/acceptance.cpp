// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// values behind each sub-check. Usage: acceptance [criterion...] (default all).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "metastable/approx_solver.hpp"
#include "metastable/dynamics.hpp"
#include "metastable/error_analysis.hpp"
#include "metastable/exact_solver.hpp"
#include "metastable/summation.hpp"

using namespace metastable;

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    std::printf("    [%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
    all_ok_ = all_ok_ && ok;
  }
  void within_rel(double value, double target, double rel, const std::string& what) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s = %.4g (target %.4g, +-%.0f%%, off %+.1f%%)", what.c_str(),
                  value, target, rel * 100, (value / target - 1) * 100);
    expect(std::abs(value / target - 1) <= rel, buf);
  }
  void within_abs(double value, double target, double tol, const std::string& what) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s = %.4g (target %.4g +- %.3g)", what.c_str(), value, target, tol);
    expect(std::abs(value - target) <= tol, buf);
  }
  bool ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ModelParams decay_model(int n) { return make_params(n, 1e-4, 1.0 / 3000.0, 0.0, 1.0); }

// 1. Table of turning points and error values at dE = 1e-4. R0 within 5 %,
// error values within 20 %; energy error in level spacings.
bool table_reproduction(Checks& c) {
  struct Expected {
    int n;
    double r1, d1, r2, d2, r3, d3;
  };
  const Expected table[] = {{2000, 57.2, 4.6e-5, 72.2, 8.0e-7, 56, 1.2e-4},
                            {4000, 86.2, 2.2e-5, 103.2, 2.8e-7, 81, 6.1e-5},
                            {8000, 130.3, 1.1e-5, 147.0, 9.9e-8, 126, 2.9e-5}};
  const auto start = std::chrono::steady_clock::now();
  const auto rows = table1_report(1e-4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& e = table[i];
    const auto& r = rows[i];
    const std::string n = "N=" + std::to_string(e.n) + " ";
    c.within_rel(r.energy.r0, e.r1, 0.05, n + "R0_1");
    c.within_rel(r.energy.delta_min, e.d1, 0.20, n + "Delta1/dE");
    c.within_rel(r.weight.r0, e.r2, 0.05, n + "R0_2");
    c.within_rel(r.weight.delta_min, e.d2, 0.20, n + "Delta2");
    c.within_rel(r.lorentz.r0, e.r3, 0.05, n + "R0_3");
    c.within_rel(r.lorentz.delta_min, e.d3, 0.20, n + "Delta3");
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed <= 1800.0, "runtime " + std::to_string(elapsed) + " s <= 1800 s");
  return c.ok();
}

// 2. Maximum deviation from exponential decay for N = 2000, 4000, 8000.
bool decay_deviation(Checks& c) {
  struct Expected {
    int n;
    double dp, dp_tol, t, t_tol;
  };
  for (const auto e : {Expected{2000, 0.04, 0.01, 20, 5}, Expected{4000, 0.02, 0.005, 10, 3},
                       Expected{8000, 0.01, 0.003, 5, 2}}) {
    const auto start = std::chrono::steady_clock::now();
    const auto p = decay_model(e.n);
    const auto s = exact_spectrum(p);
    const auto curve = decay_curve(uniform_grid(0.0, 100.0, 4001), s, p);
    std::size_t arg = 0;
    for (std::size_t i = 0; i < curve.dp.size(); ++i)
      if (std::abs(curve.dp[i]) > std::abs(curve.dp[arg])) arg = i;
    const std::string n = "N=" + std::to_string(e.n) + " ";
    c.within_abs(std::abs(curve.dp[arg]), e.dp, e.dp_tol, n + "max|dP|");
    c.within_abs(curve.times[arg], e.t, e.t_tol, n + "t at max|dP|");
    const double elapsed = seconds_since(start);
    c.expect(elapsed <= 60.0, n + "runtime " + std::to_string(elapsed) + " s <= 60 s");
  }
  return c.ok();
}

// 3. Partial revival after the first period T0.
bool revival(Checks& c) {
  const auto p = decay_model(2000);
  const auto s = exact_spectrum(p);
  const double t0 = 2.0 * std::numbers::pi / 1e-4;
  const auto profile = revival_profile(t0, t0 + 800.0, s, p);
  c.within_abs(profile.p_max, 0.55, 0.05, "max P over [T0, T0+800]");
  c.within_abs(profile.t_at_max - t0, 400.0, 100.0, "argmax - T0");
  return c.ok();
}

// 4. Secular solution against dense Jacobi diagonalization, 20 random cases.
bool oracle_equivalence(Checks& c) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> half_n(2, 100);
  std::uniform_real_distribution<double> log_de(-4.0, 0.0);
  std::uniform_real_distribution<double> coupling(0.05, 2.0);
  std::uniform_real_distribution<double> offset(-1.0, 1.0);
  double worst_e = 0.0;
  double worst_w = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double de = std::pow(10.0, log_de(rng));
    const auto p = make_params(2 * half_n(rng), de, coupling(rng) * de, offset(rng) * de * 10);
    const auto s = exact_spectrum(p);
    const auto d = dense_oracle_diagonalize(p);
    const double h_norm = dense_hamiltonian(p).norm_inf();
    double err_e = 0.0;
    double err_w = 0.0;
    for (int k = 0; k < p.n; ++k) {
      err_e = std::max(err_e, std::abs(s.energies[k] - d.energies[k]) / h_norm);
      err_w = std::max(err_w, std::abs(s.weights[k] - d.vectors[k][0] * d.vectors[k][0]));
    }
    worst_e = std::max(worst_e, err_e);
    worst_w = std::max(worst_w, err_w);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max |E_secular - E_dense| / ||H||inf = %.3g <= 1e-11", worst_e);
  c.expect(worst_e <= 1e-11, buf);
  std::snprintf(buf, sizeof buf, "max |w_secular - w_dense| = %.3g <= 1e-10", worst_w);
  c.expect(worst_w <= 1e-10, buf);
  return c.ok();
}

// 5. Spectral invariants, short-time law and arctan branch bounds.
bool invariant_suite(Checks& c) {
  const auto start = std::chrono::steady_clock::now();
  struct Case {
    int n;
    double de, w, eps0;
  };
  double worst_completeness = 0.0, worst_trace = 0.0, worst_trace2 = 0.0;
  bool interlaced = true, bounded = true;
  for (const auto cs : {Case{4, 1.0, 0.1, 0.0}, Case{100, 0.01, 0.01, 0.0},
                        Case{2000, 1e-4, 1.0 / 3000.0, 0.0}, Case{4000, 1e-4, 1.0 / 3000.0, 0.0},
                        Case{1000, 1e-3, 4e-3, 0.5}, Case{8000, 1e-4, 4e-4, 0.0}}) {
    const auto p = make_params(cs.n, cs.de, cs.w, cs.eps0);
    const auto s = exact_spectrum(p);
    CompensatedSum sw, se, se2, ref2;
    for (int k = 0; k < p.n; ++k) {
      sw += s.weights[k];
      se += s.energies[k];
      se2 += s.energies[k] * s.energies[k];
    }
    for (const double d : unperturbed_spectrum(p)) ref2 += d * d;
    ref2 += 2.0 * (p.n - 1) * p.w * p.w;
    worst_completeness = std::max(worst_completeness, std::abs(sw.value() - 1.0));
    const double trace_scale = std::max(std::abs(p.n * p.eps0), p.n * p.de);
    worst_trace = std::max(worst_trace, std::abs(se.value() - p.n * p.eps0) / trace_scale);
    worst_trace2 = std::max(worst_trace2, std::abs(se2.value() / ref2.value() - 1.0));

    interlaced = interlaced && s.energies.front() < band_level(p, 2) && s.energies.back() > band_level(p, p.n);
    for (int j = 2; j < p.n; ++j)
      interlaced = interlaced && s.energies[j - 1] > band_level(p, j) && s.energies[j - 1] < band_level(p, j + 1);
    for (int k = 1; k <= p.n; ++k) {
      const auto t = energy_terms(k, p);
      bounded = bounded && std::abs(t.e2) < p.de / 2 && std::abs(t.e3) < p.de / 2;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "completeness |sum w - 1| = %.3g <= 1e-10", worst_completeness);
  c.expect(worst_completeness <= 1e-10, buf);
  std::snprintf(buf, sizeof buf, "trace sum E relative error = %.3g <= 1e-10", worst_trace);
  c.expect(worst_trace <= 1e-10, buf);
  std::snprintf(buf, sizeof buf, "trace sum E^2 relative error = %.3g <= 1e-10", worst_trace2);
  c.expect(worst_trace2 <= 1e-10, buf);
  c.expect(interlaced, "interlacing for every tested parameter set");
  c.expect(bounded, "|E^(II)|, |E^(III)| < dE/2 for every k");

  const auto p = decay_model(2000);
  const auto s = exact_spectrum(p);
  std::snprintf(buf, sizeof buf, "|P(0) - 1| = %.3g <= 1e-12", std::abs(survival_probability(0.0, s, p) - 1.0));
  c.expect(std::abs(survival_probability(0.0, s, p) - 1.0) <= 1e-12, buf);

  const double tmin = derived_scales(p).tmin;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int m = 40;
  for (int i = 0; i < m; ++i) {
    const double t = tmin / 10.0 * std::pow(10.0, -3.0 * i / (m - 1));
    const double x = std::log(t);
    const double y = std::log(1.0 - survival_probability(t, s, p));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  c.within_abs((m * sxy - sx * sy) / (m * sxx - sx * sx), 2.0, 0.1, "short-time exponent of 1 - P");

  const double elapsed = seconds_since(start);
  c.expect(elapsed <= 60.0, "runtime " + std::to_string(elapsed) + " s <= 60 s");
  return c.ok();
}

// 6. Mid-band errors below the turning point, edge errors above it.
bool error_localization(Checks& c) {
  const int n = 2000;
  const auto low = error_triple(n, 20.0, 1e-4);
  for (const auto [name, k] : {std::pair{"k1", low.k1}, std::pair{"k2", low.k2}, std::pair{"k3", low.k3}}) {
    c.expect(std::abs(k - n / 2) <= 60,
             std::string("R=20 argmax ") + name + " = " + std::to_string(k) + " within |k - N/2| <= 60");
  }
  const auto high = error_triple(n, 150.0, 1e-4);
  c.expect(high.k1 <= 20 || high.k1 >= n - 20,
           "R=150 argmax k1 = " + std::to_string(high.k1) + " in k <= 20 or k >= N-20");
  return c.ok();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<bool(Checks&)>>> criteria{
      {"C1 table of turning points (dE = 1e-4)", table_reproduction},
      {"C2 maximum deviation from exponential decay", decay_deviation},
      {"C3 revival after T0", revival},
      {"C4 secular vs dense Jacobi oracle", oracle_equivalence},
      {"C5 invariant suite", invariant_suite},
      {"C6 error localization", error_localization}};

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);

  bool all = true;
  for (const int id : selected) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    const auto& [name, run] = criteria[id - 1];
    std::printf("%s\n", name.c_str());
    std::fflush(stdout);
    Checks checks;
    bool ok = false;
    try {
      ok = run(checks);
    } catch (const std::exception& e) {
      std::printf("    [FAIL] exception: %s\n", e.what());
    }
    std::printf("%s %s\n", ok ? "PASS" : "FAIL", name.c_str());
    std::fflush(stdout);
    all = all && ok;
  }
  return all ? 0 : 1;
}
