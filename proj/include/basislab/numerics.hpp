#pragma once

#include "basislab/types.hpp"

namespace basislab {

/// Hard threshold: sigma_min/sigma_max below this is treated as rank deficiency.
inline constexpr double kRankTolerance = 1e-12;

/// Induced 2-norm, i.e. the largest singular value. Deterministic for fixed
/// input; rejects empty matrices and non-finite entries.
double operator_norm(const ComplexMatrix& a);

/// The unique left inverse G with G*F = I for a matrix F of full column rank.
/// For square F this is the inverse. Throws RankDeficiencyError when
/// sigma_min/sigma_max < kRankTolerance.
ComplexMatrix left_inverse(const ComplexMatrix& f);

/// Solves A x = y for square A, subject to the same conditioning tolerance.
ComplexVector solve(const ComplexMatrix& a, const ComplexVector& y);

}  // namespace basislab
