#pragma once

#include <vector>

#include "metastable/model.hpp"

namespace metastable {

// Exact eigenvalues (ascending) and squared first components |psi_1^(k)|^2.
// Index k - 1 in both vectors corresponds to the 1-based level k.
struct ExactSpectrum {
  std::vector<double> energies;
  std::vector<double> weights;
};

struct ExactEigenvector {
  std::vector<double> components;
  double norm_error = 0.0;  // | ||v|| - 1 |
};

// h(lambda) = (lambda - eps0) + sum_{n>=2} w^2 / (E_n^(0) - lambda).
// Its zeros are the exact eigenvalues; it increases strictly between poles.
// Throws NumericalFailure when lambda sits on a pole.
double secular_residual(double lambda, const ModelParams& p);

// All N roots of the secular equation by bracketed bisection, one root per
// interval between consecutive poles plus one beyond each end of the band.
std::vector<double> eigenvalues_exact(const ModelParams& p);

// 1 / (1 + sum_{n>=2} w^2 / (E_n^(0) - ek)^2), the exact normalization.
double first_component_sq_exact(double ek, const ModelParams& p);

// Full eigenvector for the exact eigenvalue ek, with psi_1 > 0.
ExactEigenvector eigenvector_exact(double ek, const ModelParams& p);

ExactSpectrum exact_spectrum(const ModelParams& p);

// Dense eigendecomposition by cyclic Jacobi rotations. Test oracle only,
// O(N^3), refuses N > 500.
struct DenseEigensystem {
  std::vector<double> energies;              // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with energies[k]
};

DenseEigensystem dense_oracle_diagonalize(const ModelParams& p);
DenseEigensystem jacobi_eigensystem(DenseMatrix a);

}  // namespace metastable
