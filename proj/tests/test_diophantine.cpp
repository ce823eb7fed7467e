#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "basislab/diophantine.hpp"

using namespace basislab;

namespace {

// Independent scan oracle: smallest qualifying b, or -1 when none qualifies.
long long oracle_first_b(const std::vector<double>& x, long long n) {
  const double thr = std::pow(static_cast<double>(n), -1.0 / static_cast<double>(x.size()));
  for (long long b = 1; b <= n; ++b) {
    double err = 0.0;
    for (double v : x) {
      const double t = static_cast<double>(b) * v;
      err = std::max(err, std::abs(t - std::nearbyint(t)));
    }
    if (err < thr) return b;
  }
  return -1;
}

}  // namespace

TEST_CASE("exact rational at the boundary: x = 1/2, n = 2") {
  const ApproxResult r = simultaneous_approx({0.5}, 2);
  // b = 1 has err exactly at the threshold and must not qualify.
  CHECK(r.b == 2);
  CHECK(r.a == std::vector<long long>{1});
  CHECK(r.err == 0.0);
  CHECK(r.satisfied);
  CHECK(verify_bound({0.5}, r, 2));
}

TEST_CASE("golden ratio stress case, n = 10") {
  const std::vector<double> x{0.6180339887};
  const ApproxResult r = simultaneous_approx(x, 10);
  CHECK(r.b == oracle_first_b(x, 10));
  CHECK(r.b == 5);  // Fibonacci denominator
  CHECK(r.a == std::vector<long long>{3});
  CHECK(std::abs(r.err - 0.0901699435) <= 1e-9);
  CHECK(r.satisfied);
  CHECK(verify_bound(x, r, 10));
}

TEST_CASE("simultaneous pair with a common denominator") {
  const std::vector<double> x{1.0 / 3.0, 2.0 / 3.0};
  const ApproxResult r = simultaneous_approx(x, 9);
  CHECK(r.b == 3);
  CHECK(r.a == std::vector<long long>{1, 2});
  CHECK(r.err <= 1e-12);
  CHECK(r.satisfied);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(simultaneous_approx({}, 5), std::invalid_argument);
  CHECK_THROWS_AS(simultaneous_approx({0.5}, 0), std::invalid_argument);
  CHECK_THROWS_AS(simultaneous_approx({std::nan("")}, 5), std::invalid_argument);
  const ApproxResult r = simultaneous_approx({0.25}, 4);
  CHECK_THROWS_AS(verify_bound({0.25, 0.5}, r, 4), std::invalid_argument);
}

TEST_CASE("verify_bound accepts results and rejects perturbed numerators") {
  const std::vector<double> x{0.125, 0.375};
  const ApproxResult r = simultaneous_approx(x, 16);
  CHECK(r.satisfied);
  CHECK(verify_bound(x, r, 16));
  ApproxResult tampered = r;
  tampered.a[0] += 1;
  CHECK_FALSE(verify_bound(x, tampered, 16));
}

TEST_CASE("returned b is the minimal qualifying denominator") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const long long n = 5 + static_cast<long long>(rng() % 46);
    std::vector<double> x(k);
    for (double& v : x) v = unif(rng);
    const ApproxResult r = simultaneous_approx(x, n);
    CHECK(r.satisfied);
    CHECK(r.b == oracle_first_b(x, n));
    CHECK(verify_bound(x, r, n));
    // Stored error must match a recomputation from (a, b, x).
    double err = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      err = std::max(err, std::abs(static_cast<double>(r.b) * x[i] -
                                   static_cast<double>(r.a[i])));
    }
    CHECK(std::abs(err - r.err) <= 1e-12);
  }
}

TEST_CASE("error is invariant under integer shifts of the targets") {
  std::mt19937_64 rng(405);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x{unif(rng), unif(rng)};
    const long long n = 7 + static_cast<long long>(rng() % 20);
    const ApproxResult base = simultaneous_approx(x, n);
    std::vector<double> shifted{x[0] + 2.0, x[1] - 3.0};
    const ApproxResult moved = simultaneous_approx(shifted, n);
    CHECK(moved.b == base.b);
    CHECK(std::abs(moved.err - base.err) <= 1e-12);
    CHECK(moved.a[0] == base.a[0] + 2 * base.b);
    CHECK(moved.a[1] == base.a[1] - 3 * base.b);
  }
}
