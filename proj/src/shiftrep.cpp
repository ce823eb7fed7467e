#include "basislab/shiftrep.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "basislab/numerics.hpp"

namespace basislab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_dim(const DiscreteMeasure& nu, Eigen::Index d, const char* where) {
  if (d < 1) {
    throw std::invalid_argument(std::string(where) + ": dimension must be >= 1");
  }
  if (static_cast<std::size_t>(d) > nu.size()) {
    std::ostringstream msg;
    msg << where << ": dimension " << d << " exceeds atom count " << nu.size();
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

ComplexMatrix multiplication_matrix(const DiscreteMeasure& nu, Eigen::Index d) {
  require_dim(nu, d, "shiftrep.multiplication_matrix");
  ComplexMatrix mz = ComplexMatrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    mz(j, j) = std::polar(1.0, kTwoPi * nu.atoms()[static_cast<std::size_t>(j)].t);
  }
  return mz;
}

ShiftRepresentation shift_representation(const DiscreteMeasure& nu, Eigen::Index d) {
  return shift_representation(nu, d, ComplexVector::Ones(d));
}

ShiftRepresentation shift_representation(const DiscreteMeasure& nu, Eigen::Index d,
                                         const ComplexVector& f) {
  require_dim(nu, d, "shiftrep.shift_representation");
  if (f.size() != d) {
    throw std::invalid_argument(
        "shiftrep.shift_representation: cyclic vector length must equal d");
  }
  if (!f.allFinite()) {
    throw std::invalid_argument(
        "shiftrep.shift_representation: non-finite cyclic vector entry");
  }
  for (Eigen::Index j = 0; j < d; ++j) {
    if (f(j) == Complex(0.0, 0.0)) {
      std::ostringstream msg;
      msg << "shiftrep.shift_representation: cyclic vector vanishes at atom "
          << (j + 1) << " (t = " << nu.atoms()[static_cast<std::size_t>(j)].t
          << "); the orbit cannot span the space";
      throw std::invalid_argument(msg.str());
    }
  }

  const ComplexMatrix mz = multiplication_matrix(nu, d);
  ComplexMatrix basis(d, d);
  basis.col(0) = f;
  for (Eigen::Index k = 1; k < d; ++k) {
    // Diagonal action keeps the orbit recurrence exact.
    basis.col(k) = mz.diagonal().cwiseProduct(basis.col(k - 1));
  }
  const ComplexMatrix g = left_inverse(basis);
  ComplexMatrix companion = g * (mz * basis);
  std::vector<long long> powers(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) powers[static_cast<std::size_t>(k)] = k;
  return ShiftRepresentation{mz, f, SchauderSystem(basis, std::move(powers)),
                             std::move(companion)};
}

ComplexVector cyclic_shift_eigenvalues(Eigen::Index n) {
  if (n < 1) {
    throw std::invalid_argument("shiftrep.cyclic_shift_eigenvalues: n must be >= 1");
  }
  ComplexVector lambdas(n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    lambdas(k - 1) = std::polar(1.0, kTwoPi * static_cast<double>(k) /
                                         static_cast<double>(n));
  }

  // Cross-check against the n x n cyclic permutation: S e_j = e_{j+1 mod n},
  // whose eigenvector for lambda_k is the Fourier vector v_j = lambda_k^{-j}.
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    s((j + 1) % n, j) = 1.0;
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    ComplexVector v(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double phase = static_cast<double>(k + 1) * static_cast<double>(j) /
                           static_cast<double>(n);
      v(j) = scale * std::polar(1.0, -kTwoPi * phase);
    }
    const double residual = (s * v - lambdas(k) * v).norm();
    if (residual > 1e-10) {
      std::ostringstream msg;
      msg << "shiftrep.cyclic_shift_eigenvalues: Fourier residual " << residual
          << " for k = " << (k + 1);
      throw std::runtime_error(msg.str());
    }
  }
  return lambdas;
}

std::vector<DivergenceRow> shift_divergence_experiment(const DiscreteMeasure& nu,
                                                       Eigen::Index d_max) {
  if (d_max < 2) {
    throw std::invalid_argument(
        "shiftrep.shift_divergence_experiment: d_max must be >= 2");
  }
  if (static_cast<std::size_t>(d_max) > nu.size()) {
    throw std::invalid_argument(
        "shiftrep.shift_divergence_experiment: d_max exceeds atom count");
  }
  std::vector<DivergenceRow> rows;
  for (Eigen::Index d = 2; d <= d_max; d += 2) {
    const SchauderSystem sys = monomial_system(nu, interleave_enumeration(d));
    DivergenceRow row;
    row.d = d;
    row.min_angle = min_angle(sys);
    row.pair_bound = 1.0 / (2.0 * std::sqrt(2.0 * (1.0 - std::cos(row.min_angle))));
    try {
      row.basis_constant = basis_constant(sys).basis_constant;
      row.angle_bound = angle_bound(*row.basis_constant);
      row.conditioning_ok = true;
    } catch (const RankDeficiencyError&) {
      row.conditioning_ok = false;  // flagged, never silently dropped
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace basislab
