#include "metastable/error_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <stdexcept>

#include "metastable/exact_solver.hpp"

namespace metastable {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

void track_max(double value, int k, double& best, int& arg) {
  if (value > best) {
    best = value;
    arg = k;
  }
}

}  // namespace

ErrorTriple error_triple(int n, double r, double de, WeightEnergy weight_at) {
  const auto p = params_from_r(n, de, r);
  const auto exact = exact_spectrum(p);
  const auto levels = approx_spectrum(p, weight_at, &exact);

  ErrorTriple t;
  t.r = r;
  t.de = de;
  for (int k = 1; k <= n; ++k) {
    const auto& level = levels[k - 1];
    const double e_exact = exact.energies[k - 1];
    const double w_exact = exact.weights[k - 1];
    track_max(std::abs(level.e_final - e_exact), k, t.delta1, t.k1);
    track_max(std::abs(level.weight_approx - w_exact), k, t.delta2, t.k2);
    const double d3 = std::abs(level.weight_lorentz - w_exact);
    track_max(d3, k, t.delta3, t.k3);
    if (k == n / 2 || k == n / 2 + 1) {
      t.delta3_core = std::max(t.delta3_core, d3);
    } else {
      t.delta3_wings = std::max(t.delta3_wings, d3);
    }
  }
  return t;
}

double delta_value(const ErrorTriple& t, DeltaKind kind) {
  switch (kind) {
    case DeltaKind::energy:
      return t.delta1_in_spacings();
    case DeltaKind::weight:
      return t.delta2;
    case DeltaKind::lorentz:
      return t.delta3;
  }
  throw std::invalid_argument("unknown delta kind");
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2) {
    throw std::invalid_argument("log grid needs 0 < lo < hi and at least 2 points");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = std::exp(a + step * i);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

TurningPoint golden_section_log(const std::function<double(double)>& f, double lo, double hi,
                                double rel_tol) {
  double a = std::log(lo);
  double b = std::log(hi);
  const double width = std::log1p(rel_tol);
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(std::exp(x1));
  double f2 = f(std::exp(x2));
  while (b - a > width) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(std::exp(x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(std::exp(x2));
    }
  }
  return f1 < f2 ? TurningPoint{std::exp(x1), f1} : TurningPoint{std::exp(x2), f2};
}

TurningPoint minimize_on_log_grid(const std::function<double(double)>& f, double lo, double hi,
                                  int points, double rel_tol) {
  const auto grid = log_grid(lo, hi, points);
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), f);
  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  if (best == 0 || best + 1 == grid.size()) {
    throw NumericalFailure("error curve is monotone on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]; no interior minimum");
  }
  const auto refined = golden_section_log(f, grid[best - 1], grid[best + 1], rel_tol);
  if (refined.delta_min < values[best]) return refined;
  return {grid[best], values[best]};
}

double locate_sign_change_log(const std::function<double(double)>& g, double lo, double hi,
                              int points, double rel_tol) {
  const auto grid = log_grid(lo, hi, points);
  double prev = g(grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = g(grid[i]);
    if (prev > 0.0 && cur <= 0.0) {
      double a = std::log(grid[i - 1]);
      double b = std::log(grid[i]);
      const double width = std::log1p(rel_tol);
      while (b - a > width) {
        const double mid = 0.5 * (a + b);
        if (g(std::exp(mid)) > 0.0) {
          a = mid;
        } else {
          b = mid;
        }
      }
      return std::exp(0.5 * (a + b));
    }
    prev = cur;
  }
  throw NumericalFailure("no positive-to-negative crossing on [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
}

ErrorSweep sweep_over_r(int n, const std::vector<double>& r_grid, double de) {
  if (r_grid.empty() || r_grid.front() <= 0.0 ||
      std::adjacent_find(r_grid.begin(), r_grid.end(), std::greater_equal<>()) != r_grid.end()) {
    throw std::invalid_argument("R grid must be positive and strictly increasing");
  }
  ErrorSweep sweep;
  sweep.n = n;
  sweep.de = de;
  sweep.r_values = r_grid;
  for (const double r : r_grid) sweep.triples.push_back(error_triple(n, r, de));

  for (const auto kind : {DeltaKind::energy, DeltaKind::weight, DeltaKind::lorentz}) {
    auto& tp = sweep.turning[static_cast<int>(kind) - 1];
    tp = {r_grid.front(), delta_value(sweep.triples.front(), kind)};
    for (std::size_t i = 1; i < r_grid.size(); ++i) {
      const double v = delta_value(sweep.triples[i], kind);
      if (v < tp.delta_min) tp = {r_grid[i], v};
    }
  }
  // The Lorentzian error flattens instead of rising: report the first grid
  // point where the off-centre levels carry the maximum.
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const auto& t = sweep.triples[i];
    if (t.delta3_wings >= t.delta3_core) {
      sweep.turning[2] = {r_grid[i], t.delta3};
      break;
    }
  }
  return sweep;
}

TurningPointSearch::TurningPointSearch(int n, double de, int scan_points, double rel_tol)
    : n_(n), de_(de), scan_points_(scan_points), rel_tol_(rel_tol) {}

const ErrorTriple& TurningPointSearch::evaluate(double r) {
  auto it = cache_.find(r);
  if (it == cache_.end()) it = cache_.emplace(r, error_triple(n_, r, de_)).first;
  return it->second;
}

TurningPoint TurningPointSearch::locate(DeltaKind kind, double r_lo, double r_hi) {
  if (kind == DeltaKind::lorentz) {
    const double r0 = locate_sign_change_log(
        [this](double r) {
          const auto& t = evaluate(r);
          return t.delta3_core - t.delta3_wings;
        },
        r_lo, r_hi, scan_points_, rel_tol_);
    return {r0, evaluate(r0).delta3};
  }
  return minimize_on_log_grid([this, kind](double r) { return delta_value(evaluate(r), kind); },
                              r_lo, r_hi, scan_points_, rel_tol_);
}

TurningPoint locate_turning_point(int n, double de, DeltaKind kind, double r_lo, double r_hi) {
  TurningPointSearch search(n, de);
  return search.locate(kind, r_lo, r_hi);
}

std::vector<Table1Row> table1_report(double de, const std::vector<int>& sizes) {
  std::vector<Table1Row> rows;
  for (const int n : sizes) {
    TurningPointSearch search(n, de);
    Table1Row row;
    row.n = n;
    row.energy = search.locate(DeltaKind::energy, kTableRLo, kTableRHi);
    row.weight = search.locate(DeltaKind::weight, kTableRLo, kTableRHi);
    row.lorentz = search.locate(DeltaKind::lorentz, kTableRLo, kTableRHi);
    rows.push_back(row);
  }
  return rows;
}

void write_table1_csv(std::ostream& os, const std::vector<Table1Row>& rows) {
  const auto flags = os.flags();
  const auto precision = os.precision(17);
  os << "N,R0_1,Delta1,R0_2,Delta2,R0_3,Delta3\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.energy.r0 << ',' << row.energy.delta_min << ',' << row.weight.r0
       << ',' << row.weight.delta_min << ',' << row.lorentz.r0 << ',' << row.lorentz.delta_min
       << '\n';
  }
  os.precision(precision);
  os.flags(flags);
}

}  // namespace metastable
