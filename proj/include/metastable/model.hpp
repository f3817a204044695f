#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace metastable {

// Raised when model parameters violate the arrowhead-model preconditions.
class InvalidModel : public std::invalid_argument {
 public:
  explicit InvalidModel(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a numerical routine cannot meet its contract (bracket failure,
// non-convergence, evaluation on a pole).
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

// Defining numbers of the model: a discrete level |1> at eps0 coupled with a
// constant element w to an equidistant band of n - 1 levels with spacing de.
struct ModelParams {
  int n = 0;
  double de = 0.0;
  double w = 0.0;
  double eps0 = 0.0;
  double hbar = 1.0;
};

struct DerivedScales {
  double gamma = 0.0;   // 2 pi w^2 / de
  double r = 0.0;       // gamma / de
  double t0 = 0.0;      // 2 pi hbar / de, period of the unperturbed dynamics
  double tmin = 0.0;    // hbar / e0_max
  double tmax = 0.0;    // hbar / de
  double e0_min = 0.0;  // band edges, measured from eps0
  double e0_max = 0.0;
};

// Validates and returns the parameter set. Throws InvalidModel.
ModelParams make_params(int n, double de, double w, double eps0 = 0.0, double hbar = 1.0);

// Builds parameters from (n, de, R) with the coupling derived as
// w = de * sqrt(R / 2 pi), so that gamma / de == R.
ModelParams params_from_r(int n, double de, double r, double eps0 = 0.0, double hbar = 1.0);

// Diagonal of H0 in basis order (1-based index n maps to element n - 1):
// entry 1 is eps0, entries n >= 2 are eps0 + de (n - n/2 - 1).
std::vector<double> unperturbed_spectrum(const ModelParams& p);

// Unperturbed band level E_n^(0) for 2 <= n <= N.
inline double band_level(const ModelParams& p, int n) {
  return p.eps0 + p.de * (n - p.n / 2 - 1);
}

DerivedScales derived_scales(const ModelParams& p);

// Dense symmetric N x N matrix, row-major. Meant for small N only.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  // Max absolute row sum.
  double norm_inf() const;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

// H = H0 + H_I with (H_I)_{1f} = (H_I)_{f1} = w for f >= 2 (0-based storage).
DenseMatrix dense_hamiltonian(const ModelParams& p);

}  // namespace metastable
