#pragma once

#include <random>

#include "basislab/types.hpp"

namespace testutil {

inline basislab::ComplexMatrix complex_gaussian(std::mt19937_64& rng, Eigen::Index rows,
                                                Eigen::Index cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  basislab::ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = basislab::Complex(dist(rng), dist(rng));
    }
  }
  return m;
}

inline basislab::ComplexVector complex_gaussian_vector(std::mt19937_64& rng,
                                                       Eigen::Index n) {
  return complex_gaussian(rng, n, 1).col(0);
}

// Random matrix with unit columns; almost surely invertible for square shapes.
inline basislab::ComplexMatrix normalized_gaussian(std::mt19937_64& rng,
                                                   Eigen::Index rows,
                                                   Eigen::Index cols) {
  basislab::ComplexMatrix m = complex_gaussian(rng, rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) m.col(c).normalize();
  return m;
}

// Unitary factor of a Gaussian matrix (Householder QR).
inline basislab::ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index d) {
  basislab::ComplexMatrix g = complex_gaussian(rng, d, d);
  Eigen::HouseholderQR<basislab::ComplexMatrix> qr(g);
  return qr.householderQ() * basislab::ComplexMatrix::Identity(d, d);
}

inline double max_abs(const basislab::ComplexMatrix& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace testutil
