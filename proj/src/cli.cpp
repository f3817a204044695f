#include "metastable/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "metastable/approx_solver.hpp"
#include "metastable/dynamics.hpp"
#include "metastable/error_analysis.hpp"
#include "metastable/exact_solver.hpp"
#include "metastable/model.hpp"

namespace metastable::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool needs_model(Command c) {
  return c == Command::spectrum || c == Command::lineshape || c == Command::decay ||
         c == Command::revival;
}

void validate(const RunConfig& cfg) {
  if (cfg.w && cfg.r) throw UsageError("--w and --r are mutually exclusive");
  if (needs_model(cfg.command)) {
    if (!cfg.n) throw UsageError("--n is required for this command");
    if (!cfg.w && !cfg.r) throw UsageError("one of --w or --r is required");
  }
  if (cfg.command == Command::errors && !cfg.n) throw UsageError("--n is required for errors");
  if (cfg.steps && *cfg.steps < 2) throw UsageError("--steps must be >= 2");
  if (cfg.tmax && !(*cfg.tmax > 0.0)) throw UsageError("--tmax must be positive");
  if (cfg.points < 2) throw UsageError("--points must be >= 2");
  if (!(cfg.r_lo > 0.0) || !(cfg.r_hi > cfg.r_lo)) throw UsageError("need 0 < --r-lo < --r-hi");
  if (cfg.multiple < 0) throw UsageError("--multiple must be >= 0");
}

ModelParams model_from(const RunConfig& cfg) {
  if (cfg.r) return params_from_r(*cfg.n, cfg.de, *cfg.r, cfg.eps0, cfg.hbar);
  return make_params(*cfg.n, cfg.de, *cfg.w, cfg.eps0, cfg.hbar);
}

ExactSpectrum spectrum_for(const RunConfig& cfg, const ModelParams& p) {
  return cfg.analytic ? analytic_spectrum(p) : exact_spectrum(p);
}

void cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto p = model_from(cfg);
  const auto exact = exact_spectrum(p);
  const auto levels = approx_spectrum(p);
  out << "k,E_exact,E_zeroth,E_final,w_exact,w_approx,w_lorentz,spacing_approx\n";
  for (int k = 1; k <= p.n; ++k) {
    const auto& l = levels[k - 1];
    out << k << ',' << exact.energies[k - 1] << ',' << l.e_zeroth << ',' << l.e_final << ','
        << exact.weights[k - 1] << ',' << l.weight_approx << ',' << l.weight_lorentz << ','
        << level_spacing_approx(k, p) << '\n';
  }
}

void cmd_lineshape(const RunConfig& cfg, std::ostream& out) {
  const auto p = model_from(cfg);
  const auto exact = exact_spectrum(p);
  out << "k,E_exact,w_exact,w_lorentz,rho_approx\n";
  for (int k = 1; k <= p.n; ++k) {
    out << k << ',' << exact.energies[k - 1] << ',' << exact.weights[k - 1] << ','
        << lorentzian_weight(k, p) << ',' << density_of_states_approx(k, p) << '\n';
  }
}

void cmd_decay(const RunConfig& cfg, std::ostream& out) {
  const auto p = model_from(cfg);
  const auto spectrum = spectrum_for(cfg, p);
  const double gamma = derived_scales(p).gamma;
  const double tmax = cfg.tmax ? *cfg.tmax : 5.0 * p.hbar / gamma;
  const auto grid = uniform_grid(0.0, tmax, cfg.steps.value_or(2000));
  const auto curve = decay_curve(grid, spectrum, p);
  out << "t,P,P_exp,dP\n";
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    out << curve.times[i] << ',' << curve.p[i] << ',' << curve.p_exp[i] << ',' << curve.dp[i]
        << '\n';
  }
}

void cmd_revival(const RunConfig& cfg, std::ostream& out) {
  const auto p = model_from(cfg);
  const auto spectrum = spectrum_for(cfg, p);
  const double t0 = derived_scales(p).t0;
  const double begin = cfg.multiple * t0;
  const double end = begin + cfg.tmax.value_or(800.0);
  const double step = cfg.steps ? (end - begin) / (*cfg.steps - 1) : 0.0;
  const auto profile = revival_profile(begin, end, spectrum, p, step);
  out << "t,P\n";
  for (std::size_t i = 0; i < profile.times.size(); ++i) {
    out << profile.times[i] << ',' << profile.p[i] << '\n';
  }
}

void cmd_errors(const RunConfig& cfg, std::ostream& out) {
  const auto grid = log_grid(cfg.r_lo, cfg.r_hi, cfg.points);
  const auto sweep = sweep_over_r(*cfg.n, grid, cfg.de);
  out << "R,Delta1,Delta1_over_dE,k1,Delta2,k2,Delta3,k3\n";
  for (const auto& t : sweep.triples) {
    out << t.r << ',' << t.delta1 << ',' << t.delta1_in_spacings() << ',' << t.k1 << ','
        << t.delta2 << ',' << t.k2 << ',' << t.delta3 << ',' << t.k3 << '\n';
  }
}

void cmd_table1(const RunConfig& cfg, std::ostream& out) {
  const std::vector<int> sizes = cfg.n ? std::vector<int>{*cfg.n} : std::vector<int>{2000, 4000, 8000};
  write_table1_csv(out, table1_report(cfg.de, sizes));
}

}  // namespace

void execute(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  std::ostringstream buffer;
  buffer.precision(17);
  switch (cfg.command) {
    case Command::spectrum:
      cmd_spectrum(cfg, buffer);
      break;
    case Command::lineshape:
      cmd_lineshape(cfg, buffer);
      break;
    case Command::decay:
      cmd_decay(cfg, buffer);
      break;
    case Command::revival:
      cmd_revival(cfg, buffer);
      break;
    case Command::errors:
      cmd_errors(cfg, buffer);
      break;
    case Command::table1:
      cmd_table1(cfg, buffer);
      break;
  }
  if (cfg.out.empty()) {
    out << buffer.str();
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  file << buffer.str();
  if (!file) throw std::runtime_error("cannot write " + cfg.out);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-dimensional metastable-state model: spectra, line shape, decay, errors"};
  RunConfig cfg;
  const std::map<std::string, Command> commands{
      {"spectrum", Command::spectrum}, {"lineshape", Command::lineshape},
      {"decay", Command::decay},       {"revival", Command::revival},
      {"errors", Command::errors},     {"table1", Command::table1}};

  app.add_option("--command", cfg.command, "spectrum|lineshape|decay|revival|errors|table1")
      ->required()
      ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
  app.add_option("--n", cfg.n, "matrix dimension (even, >= 4)");
  app.add_option("--de", cfg.de, "band level spacing")->capture_default_str();
  app.add_option("--w", cfg.w, "coupling matrix element");
  app.add_option("--r", cfg.r, "width-to-spacing ratio gamma/dE (derives W)");
  app.add_option("--eps0", cfg.eps0, "discrete level energy")->capture_default_str();
  app.add_option("--hbar", cfg.hbar, "reduced Planck constant")->capture_default_str();
  app.add_option("--tmax", cfg.tmax, "decay: end time; revival: window length");
  app.add_option("--steps", cfg.steps, "number of time points");
  app.add_option("--r-lo", cfg.r_lo, "errors: lowest R")->capture_default_str();
  app.add_option("--r-hi", cfg.r_hi, "errors: highest R")->capture_default_str();
  app.add_option("--points", cfg.points, "errors: number of log-spaced R values")
      ->capture_default_str();
  app.add_option("--multiple", cfg.multiple, "revival: window starts at multiple * T0")
      ->capture_default_str();
  app.add_flag("--analytic-spectrum", cfg.analytic,
               "decay/revival: use the analytic spectrum instead of the exact one");
  app.add_option("--out", cfg.out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    execute(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << "Run with --help for more information.\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kOk;
}

}  // namespace metastable::cli
