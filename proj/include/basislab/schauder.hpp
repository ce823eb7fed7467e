#pragma once

#include <vector>

#include "basislab/types.hpp"

namespace basislab {

/// An ordered finite family of vectors in a d-dimensional coordinate space,
/// stored as the d x m matrix whose n-th column is the n-th vector. Order is
/// significant: reordering the columns is a different system. Columns may
/// carry optional integer labels (e.g. monomial exponents).
class SchauderSystem {
 public:
  explicit SchauderSystem(ComplexMatrix f, std::vector<long long> labels = {});

  /// Ambient dimension d.
  Eigen::Index dim() const { return f_.rows(); }
  /// Number of vectors m (m <= d).
  Eigen::Index count() const { return f_.cols(); }

  const ComplexMatrix& matrix() const { return f_; }
  /// Per-column tags; empty when the system is untagged.
  const std::vector<long long>& labels() const { return labels_; }

 private:
  ComplexMatrix f_;
  std::vector<long long> labels_;
};

/// Norms and idempotency residuals of the natural projections Q_1..Q_m,
/// together with their maximum, the basis constant.
struct ProjectionReport {
  std::vector<double> projection_norms;       // ||Q_n||, n = 1..m
  std::vector<double> idempotency_residuals;  // ||Q_n^2 - Q_n||
  double basis_constant = 0.0;                // max_n ||Q_n||, always >= 1
};

struct AngleTheoremReport {
  double basis_constant = 0.0;
  double min_angle = 0.0;
  double bound = 0.0;  // arccos(1 - 1/(8 M^2))
  bool pass = false;   // min_angle >= bound - 1e-9
};

/// The n-th natural projection Q_n = F P_n G* (P_n keeps the first n
/// coordinates). Requires a square invertible system; n is 1-based, and
/// Q_d equals the identity. Counts are 1-based throughout this module.
ComplexMatrix natural_projection(const SchauderSystem& sys, Eigen::Index n);

/// Norms of all natural projections and their maximum M. Scale-invariant:
/// rescaling any column by a nonzero factor leaves every Q_n unchanged.
ProjectionReport basis_constant(const SchauderSystem& sys);

/// Angle between vectors k and l (1-based): arccos of the normalized absolute
/// inner product, with the cosine clamped to [0, 1] to absorb rounding.
double angle(const SchauderSystem& sys, Eigen::Index k, Eigen::Index l);

/// Minimum angle over all pairs; requires at least two vectors.
double min_angle(const SchauderSystem& sys);

/// The angle lower bound arccos(1 - 1/(8 M^2)) valid for any system with
/// basis constant M >= 1. Decreases monotonically to 0 as M grows.
double angle_bound(double m);

/// Lower bound 1/(2 sqrt(2 (1 - cos theta_kl))) for the basis constant of any
/// system containing the (normalized) pair k, l. Grows without bound as the
/// pair angle shrinks; throws for collinear pairs (the system is not minimal).
double pair_lower_bound(const SchauderSystem& sys, Eigen::Index k, Eigen::Index l);

/// Checks min_angle >= angle_bound(M) - 1e-9 on a square invertible system.
AngleTheoremReport verify_angle_theorem(const SchauderSystem& sys);

/// Block-diagonal 2N-dimensional system of unit-vector pairs whose inner
/// products approach 1: block n holds (1, 0) and (c_n, s_n) with
/// c_n = 1 - 1/n (block 1 uses c_1 = 1/2). Minimal for every N, but the
/// minimum angle arccos(1 - 1/N) tends to zero.
SchauderSystem example_minimal_sequence(Eigen::Index n_blocks);

}  // namespace basislab
