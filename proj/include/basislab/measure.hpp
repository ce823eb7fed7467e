#pragma once

#include <cstddef>
#include <vector>

#include "basislab/schauder.hpp"
#include "basislab/types.hpp"

namespace basislab {

/// One atom of a discrete measure on the circle: the point e^{i 2 pi t} with
/// positive weight w, t in [0, 1).
struct Atom {
  double t = 0.0;
  double w = 0.0;
};

/// Finite positive discrete measure on the unit circle. Atoms are
/// canonicalized on construction: sorted by descending weight (ties by
/// ascending position), positions pairwise distinct. Immutable afterwards.
class DiscreteMeasure {
 public:
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double total_mass() const { return total_mass_; }

 private:
  std::vector<Atom> atoms_;
  double total_mass_ = 0.0;
};

/// Output of the near-unimodular exponent search. The theoretical ceiling n
/// (smallest integer with n^(1/k) > 1/delta) is saturated at the int64 max
/// when it overflows; the witness b found by the scan is always far smaller.
struct MomentSearchResult {
  long long b = 0;
  double moment_abs = 0.0;
  double epsilon = 0.0;
  long long k = 0;       // tail cutoff count
  double delta = 0.0;    // phase window
  long long n_ceiling = 0;
  long long scanned = 0;
  bool satisfied = false;  // moment_abs > (1 - 4 eps) * total_mass
};

/// Trigonometric moment of exponent b: sum_j w_j e^{i 2 pi b t_j}.
/// moment(nu, 0) equals the total mass; |moment| never exceeds it.
Complex moment(const DiscreteMeasure& nu, long long b);

/// Smallest k >= 1 such that the k heaviest atoms carry mass
/// >= (1 - eps) * total_mass. eps is clamped into (0, 1).
long long tail_cutoff(const DiscreteMeasure& nu, double eps);

/// Largest closed-form delta with cos(2 pi x) > 1 - eps and |sin(2 pi x)| < eps
/// for all |x| < delta: min(arccos(1 - eps), arcsin(eps)) / (2 pi), eps in (0, 1].
double delta_for(double eps);

/// Scans b = 1, 2, ... and returns the first exponent whose moment modulus
/// exceeds (1 - 4 eps) * total_mass, together with the parameters (k, delta,
/// n) of the underlying existence argument. If the cap is reached first, the
/// best exponent seen is returned flagged (satisfied = false).
MomentSearchResult near_unimodular_exponent(const DiscreteMeasure& nu, double eps,
                                            long long cap);

/// Pushforward under multiplication by f: atom weights become |f(t_k)|^2 w_k,
/// zero-weight atoms are dropped. Multiplication by f is then an isometry
/// from L2 of the result onto its range in L2 of nu. Throws when every
/// value is zero (the empty measure is not representable).
DiscreteMeasure pushforward(const DiscreteMeasure& nu, const ComplexVector& f_values);

/// Monomial family over the first d atoms (d = exponents.size()): embeds
/// g -> (g(t_j) sqrt(w_j))_j and takes column n = z^{exponents[n]}, so inner
/// products of columns equal L2 inner products over the truncated measure.
/// Column labels record the exponents.
SchauderSystem monomial_system(const DiscreteMeasure& nu,
                               const std::vector<long long>& exponents);

/// Canonical exponent enumeration 0, 1, -1, 2, -2, ... (first d terms).
std::vector<long long> interleave_enumeration(Eigen::Index d);

}  // namespace basislab
