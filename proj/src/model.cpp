#include "metastable/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace metastable {

ModelParams make_params(int n, double de, double w, double eps0, double hbar) {
  if (n < 4 || n % 2 != 0) {
    throw InvalidModel("N must be even and >= 4, got " + std::to_string(n));
  }
  if (!(de > 0.0) || !std::isfinite(de)) throw InvalidModel("dE must be positive");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw InvalidModel("hbar must be positive");
  if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidModel("W must be non-negative");
  if (!std::isfinite(eps0)) throw InvalidModel("eps0 must be finite");
  return ModelParams{n, de, w, eps0, hbar};
}

ModelParams params_from_r(int n, double de, double r, double eps0, double hbar) {
  if (!(r > 0.0)) throw InvalidModel("R must be positive");
  return make_params(n, de, de * std::sqrt(r / (2.0 * std::numbers::pi)), eps0, hbar);
}

std::vector<double> unperturbed_spectrum(const ModelParams& p) {
  std::vector<double> diag(static_cast<std::size_t>(p.n));
  diag[0] = p.eps0;
  for (int n = 2; n <= p.n; ++n) diag[n - 1] = band_level(p, n);
  return diag;
}

DerivedScales derived_scales(const ModelParams& p) {
  DerivedScales s;
  s.gamma = 2.0 * std::numbers::pi * p.w * p.w / p.de;
  s.r = s.gamma / p.de;
  s.e0_max = p.de * (p.n / 2 - 1);
  s.e0_min = -s.e0_max;
  s.t0 = 2.0 * std::numbers::pi * p.hbar / p.de;
  s.tmin = p.hbar / s.e0_max;
  s.tmax = p.hbar / p.de;
  return s;
}

double DenseMatrix::norm_inf() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

DenseMatrix dense_hamiltonian(const ModelParams& p) {
  DenseMatrix h(p.n);
  const auto diag = unperturbed_spectrum(p);
  for (int i = 0; i < p.n; ++i) h(i, i) = diag[i];
  for (int f = 1; f < p.n; ++f) {
    h(0, f) = p.w;
    h(f, 0) = p.w;
  }
  return h;
}

}  // namespace metastable
