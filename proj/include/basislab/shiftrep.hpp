#pragma once

#include <optional>
#include <vector>

#include "basislab/measure.hpp"
#include "basislab/schauder.hpp"
#include "basislab/types.hpp"

namespace basislab {

/// The multiplication operator M_z rendered as a shift: basis columns are
/// {f, M_z f, ..., M_z^{d-1} f} and companion is the matrix of M_z in that
/// basis (ones on the subdiagonal, characteristic coefficients in the last
/// column).
struct ShiftRepresentation {
  ComplexMatrix mz;             // diagonal, unimodular entries
  ComplexVector cyclic_vector;  // f, no zero coordinate
  SchauderSystem basis;         // columns satisfy col_{k+1} = mz * col_k
  ComplexMatrix companion;      // G* mz F
};

/// One truncation level of the divergence experiment. basis_constant and
/// angle_bound are absent when the truncated system failed the conditioning
/// tolerance (the row is flagged, not dropped).
struct DivergenceRow {
  Eigen::Index d = 0;
  std::optional<double> basis_constant;
  double min_angle = 0.0;
  std::optional<double> angle_bound;
  double pair_bound = 0.0;
  bool conditioning_ok = true;
};

/// diag(e^{i 2 pi t_j}), j = 1..d over the first d atoms. Distinct atoms give
/// distinct eigenvalues.
ComplexMatrix multiplication_matrix(const DiscreteMeasure& nu, Eigen::Index d);

/// Shift representation with the default cyclic vector (all-ones in embedded
/// coordinates). Throws when some coordinate of f is zero (not cyclic),
/// naming the offending atom; conditioning failures propagate from the
/// basis-change inverse.
ShiftRepresentation shift_representation(const DiscreteMeasure& nu, Eigen::Index d);
ShiftRepresentation shift_representation(const DiscreteMeasure& nu, Eigen::Index d,
                                         const ComplexVector& f);

/// The n-th roots of unity e^{i 2 pi k / n}, k = 1..n; verified internally to
/// be the eigenvalues of the n x n cyclic permutation matrix via Fourier
/// eigenvector residuals.
ComplexVector cyclic_shift_eigenvalues(Eigen::Index n);

/// For each even d <= d_max, the monomial system on the interleave exponents
/// over the first d atoms: its basis constant, minimum angle, the angle
/// bound arccos(1 - 1/(8 M^2)), and the pair bound at the closest pair.
/// Ill-conditioned truncations yield flagged rows.
std::vector<DivergenceRow> shift_divergence_experiment(const DiscreteMeasure& nu,
                                                       Eigen::Index d_max);

}  // namespace basislab
