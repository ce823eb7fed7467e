#include "basislab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace basislab {

bool is_finite(const ComplexMatrix& a) { return a.allFinite(); }
bool is_finite(const ComplexVector& v) { return v.allFinite(); }

namespace {

// Jacobi SVD up to this size (best relative accuracy), divide-and-conquer
// beyond it. Both paths are deterministic for fixed input.
constexpr Eigen::Index kJacobiCutoff = 32;

void require_finite(const ComplexMatrix& a, const char* where) {
  if (!a.allFinite()) {
    throw std::invalid_argument(std::string(where) + ": non-finite matrix entry");
  }
}

[[noreturn]] void throw_rank_error(const char* where, double ratio) {
  std::ostringstream msg;
  msg << where << ": rank-deficient matrix (sigma_min/sigma_max = " << ratio
      << " < " << kRankTolerance << ")";
  throw RankDeficiencyError(msg.str());
}

struct ThinSvd {
  ComplexMatrix u;
  Eigen::VectorXd sigma;
  ComplexMatrix v;
};

ThinSvd thin_svd(const ComplexMatrix& a) {
  if (std::min(a.rows(), a.cols()) <= kJacobiCutoff) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
  }
  Eigen::BDCSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

// Throws unless sigma_min/sigma_max clears the rank tolerance.
void check_conditioning(const Eigen::VectorXd& sigma, const char* where) {
  const double smax = sigma(0);
  const double smin = sigma(sigma.size() - 1);
  if (smax == 0.0 || smin / smax < kRankTolerance) {
    throw_rank_error(where, smax == 0.0 ? 0.0 : smin / smax);
  }
}

}  // namespace

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) {
    throw std::invalid_argument("numerics.operator_norm: empty matrix");
  }
  require_finite(a, "numerics.operator_norm");
  if (std::min(a.rows(), a.cols()) <= kJacobiCutoff) {
    return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues()(0);
  }
  return Eigen::BDCSVD<ComplexMatrix>(a).singularValues()(0);
}

ComplexMatrix left_inverse(const ComplexMatrix& f) {
  if (f.size() == 0) {
    throw std::invalid_argument("numerics.left_inverse: empty matrix");
  }
  require_finite(f, "numerics.left_inverse");
  if (f.rows() < f.cols()) {
    throw_rank_error("numerics.left_inverse (cols exceed rows)", 0.0);
  }
  const ThinSvd svd = thin_svd(f);
  check_conditioning(svd.sigma, "numerics.left_inverse");
  return svd.v * svd.sigma.cwiseInverse().asDiagonal() * svd.u.adjoint();
}

ComplexVector solve(const ComplexMatrix& a, const ComplexVector& y) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("numerics.solve: matrix is not square");
  }
  if (a.rows() != y.size()) {
    throw std::invalid_argument("numerics.solve: size mismatch between A and y");
  }
  require_finite(a, "numerics.solve");
  if (!y.allFinite()) {
    throw std::invalid_argument("numerics.solve: non-finite right-hand side");
  }
  const ThinSvd svd = thin_svd(a);
  check_conditioning(svd.sigma, "numerics.solve");
  return svd.v * (svd.sigma.cwiseInverse().asDiagonal() * (svd.u.adjoint() * y));
}

}  // namespace basislab
