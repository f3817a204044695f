#include <algorithm>
#include <cmath>
#include <numeric>

#include "metastable/exact_solver.hpp"

namespace metastable {
namespace {

constexpr int kMaxSweeps = 100;
constexpr int kMaxOracleSize = 500;

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

// Cyclic Jacobi with Rutishauser's stable rotation formulas.
DenseEigensystem jacobi_eigensystem(DenseMatrix a) {
  const int n = a.size();
  DenseMatrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  const double target = 1e-14 * frobenius_norm(a);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

  DenseEigensystem out;
  out.energies.reserve(n);
  out.vectors.reserve(n);
  for (int col : order) {
    out.energies.push_back(a(col, col));
    std::vector<double> vec(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) vec[k] = v(k, col);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

DenseEigensystem dense_oracle_diagonalize(const ModelParams& p) {
  if (p.n > kMaxOracleSize) {
    throw InvalidModel("dense oracle is limited to N <= 500");
  }
  return jacobi_eigensystem(dense_hamiltonian(p));
}

}  // namespace metastable
