#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace basislab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Thrown when a matrix fails the rank tolerance sigma_min/sigma_max < 1e-12,
/// i.e. the column family is not minimal in the ambient space.
class RankDeficiencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_finite(const ComplexMatrix& a);
bool is_finite(const ComplexVector& v);

}  // namespace basislab
