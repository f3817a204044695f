#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace metastable::cli {

enum class Command { spectrum, lineshape, decay, revival, errors, table1 };

struct RunConfig {
  Command command = Command::spectrum;
  std::optional<int> n;
  double de = 1e-4;
  std::optional<double> w;
  std::optional<double> r;
  double eps0 = 0.0;
  double hbar = 1.0;
  std::optional<double> tmax;
  std::optional<int> steps;
  double r_lo = 10.0;
  double r_hi = 200.0;
  int points = 25;
  int multiple = 1;
  bool analytic = false;  // decay/revival on the analytic spectrum
  std::string out;  // empty: stdout
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNumericalFailure = 1;
inline constexpr int kUsage = 2;

// Parses flags, runs the command, writes CSV to cfg.out or `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Runs an already-validated configuration. Throws on usage or numerical errors.
void execute(const RunConfig& cfg, std::ostream& out);

}  // namespace metastable::cli
