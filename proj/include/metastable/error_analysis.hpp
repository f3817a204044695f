#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <vector>

#include "metastable/approx_solver.hpp"
#include "metastable/model.hpp"

namespace metastable {

// Maximum deviations over k between the analytic and the exact solution.
//   delta1: |E_final - E_exact| (absolute energy)
//   delta2: |w_approx - w_exact|
//   delta3: |w_lorentz - w_exact|
// k1..k3 are the 1-based maximizing indices.
struct ErrorTriple {
  double r = 0.0;
  double de = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta3 = 0.0;
  int k1 = 0;
  int k2 = 0;
  int k3 = 0;
  // delta3 split into the central pair k in {N/2, N/2+1} and all other levels.
  double delta3_core = 0.0;
  double delta3_wings = 0.0;

  // delta1 measured in level spacings; the scale-free form tabulated for
  // comparison across de.
  double delta1_in_spacings() const { return delta1 / de; }
};

enum class DeltaKind { energy = 1, weight = 2, lorentz = 3 };

struct TurningPoint {
  double r0 = 0.0;
  double delta_min = 0.0;
};

struct ErrorSweep {
  int n = 0;
  double de = 0.0;
  std::vector<double> r_values;
  std::vector<ErrorTriple> triples;
  TurningPoint turning[3];  // indexed by DeltaKind - 1
};

ErrorTriple error_triple(int n, double r, double de,
                         WeightEnergy weight_at = WeightEnergy::final);

// Selects delta1 / delta2 / delta3 from a triple. delta1 is returned in level
// spacings so that all three are dimensionless.
double delta_value(const ErrorTriple& t, DeltaKind kind);

// points log-spaced values covering [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, int points);

// Golden-section search for the minimum of f over [lo, hi] in log r, down to a
// relative bracket width of rel_tol.
TurningPoint golden_section_log(const std::function<double(double)>& f, double lo, double hi,
                                double rel_tol);

// Scans f on a log grid, brackets the smallest sample by its neighbours and
// refines with golden_section_log. Throws NumericalFailure when the grid
// minimum sits on an end of the range (no interior minimum).
TurningPoint minimize_on_log_grid(const std::function<double(double)>& f, double lo, double hi,
                                  int points, double rel_tol);

// Finds where g changes sign from positive to negative on a log grid and
// refines the crossing by bisection in log r. Throws NumericalFailure when no
// such sign change exists.
double locate_sign_change_log(const std::function<double(double)>& g, double lo, double hi,
                              int points, double rel_tol);

ErrorSweep sweep_over_r(int n, const std::vector<double>& r_grid, double de);

// Caches error triples by R so that several turning-point searches at the
// same N share their spectrum evaluations.
class TurningPointSearch {
 public:
  TurningPointSearch(int n, double de, int scan_points = 25, double rel_tol = 1e-2);

  const ErrorTriple& evaluate(double r);

  // delta1/delta2: golden-section minimum. delta3: the R at which the
  // maximizing index leaves the central level pair, i.e. where the Lorentzian
  // error stops falling steeply and flattens out.
  TurningPoint locate(DeltaKind kind, double r_lo, double r_hi);

  int evaluations() const { return static_cast<int>(cache_.size()); }

 private:
  int n_;
  double de_;
  int scan_points_;
  double rel_tol_;
  std::map<double, ErrorTriple> cache_;
};

TurningPoint locate_turning_point(int n, double de, DeltaKind kind, double r_lo, double r_hi);

struct Table1Row {
  int n = 0;
  TurningPoint energy;   // delta_min in level spacings
  TurningPoint weight;
  TurningPoint lorentz;
};

// R search range used for the table.
inline constexpr double kTableRLo = 20.0;
inline constexpr double kTableRHi = 320.0;

std::vector<Table1Row> table1_report(double de, const std::vector<int>& sizes = {2000, 4000, 8000});

// Header: N,R0_1,Delta1,R0_2,Delta2,R0_3,Delta3
void write_table1_csv(std::ostream& os, const std::vector<Table1Row>& rows);

}  // namespace metastable
