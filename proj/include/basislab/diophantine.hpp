#pragma once

#include <vector>

namespace basislab {

/// Result of a simultaneous rational approximation: integers a_1..a_k and a
/// denominator b with 0 < b <= n, approximating x_i by a_i/b. err is
/// max_i |b x_i - a_i|; satisfied means err < n^(-1/k).
struct ApproxResult {
  std::vector<long long> a;
  long long b = 0;
  double err = 0.0;
  bool satisfied = false;
};

/// Scans b = 1..n with a_i = round(b x_i) (ties to even) and returns the
/// first b with err < n^(-1/k). If no b qualifies (a flagged result, not an
/// error), returns the b with the smallest err and satisfied = false.
ApproxResult simultaneous_approx(const std::vector<double>& x, long long n);

/// Independent re-check: max_i |x_i - a_i/b| <= 1/(b n^(1/k)) + 1e-12.
bool verify_bound(const std::vector<double>& x, const ApproxResult& r, long long n);

}  // namespace basislab
