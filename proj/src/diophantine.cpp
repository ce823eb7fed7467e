#include "basislab/diophantine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace basislab {

namespace {

// Nearest integer with ties to even (the default FP rounding mode).
double round_even(double x) { return std::nearbyint(x); }

void check_inputs(const std::vector<double>& x, long long n, const char* where) {
  if (x.empty()) {
    throw std::invalid_argument(std::string(where) + ": empty target vector");
  }
  if (n < 1) {
    throw std::invalid_argument(std::string(where) + ": n must be positive");
  }
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(where) + ": non-finite entry");
    }
  }
}

}  // namespace

ApproxResult simultaneous_approx(const std::vector<double>& x, long long n) {
  check_inputs(x, n, "diophantine.simultaneous_approx");
  const std::size_t k = x.size();
  const double threshold = std::pow(static_cast<double>(n), -1.0 / static_cast<double>(k));

  ApproxResult best;
  best.err = std::numeric_limits<double>::infinity();
  std::vector<long long> a(k);
  for (long long b = 1; b <= n; ++b) {
    double err = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double target = static_cast<double>(b) * x[i];
      const double rounded = round_even(target);
      if (std::abs(rounded) > 9.0e18) {
        throw std::invalid_argument(
            "diophantine.simultaneous_approx: numerator exceeds integer range");
      }
      a[i] = static_cast<long long>(rounded);
      err = std::max(err, std::abs(target - rounded));
    }
    if (err < best.err) {
      best.a = a;
      best.b = b;
      best.err = err;
    }
    if (err < threshold) {
      return ApproxResult{a, b, err, true};
    }
  }
  best.satisfied = false;
  return best;
}

bool verify_bound(const std::vector<double>& x, const ApproxResult& r, long long n) {
  check_inputs(x, n, "diophantine.verify_bound");
  if (r.a.size() != x.size()) {
    throw std::invalid_argument("diophantine.verify_bound: shape mismatch");
  }
  if (r.b < 1) {
    throw std::invalid_argument("diophantine.verify_bound: b must be positive");
  }
  const double k = static_cast<double>(x.size());
  const double b = static_cast<double>(r.b);
  const double limit = 1.0 / (b * std::pow(static_cast<double>(n), 1.0 / k)) + 1e-12;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - static_cast<double>(r.a[i]) / b) > limit) {
      return false;
    }
  }
  return true;
}

}  // namespace basislab
