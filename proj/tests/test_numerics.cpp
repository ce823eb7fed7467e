#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "basislab/numerics.hpp"
#include "test_util.hpp"

using namespace basislab;
using testutil::complex_gaussian;
using testutil::complex_gaussian_vector;
using testutil::normalized_gaussian;
using testutil::random_unitary;

namespace {

// 2x2 basis [[1, cos t], [0, sin t]] whose first natural projection has norm
// 1/sin t.
ComplexMatrix angle_system(double theta) {
  ComplexMatrix f(2, 2);
  f << 1.0, std::cos(theta), 0.0, std::sin(theta);
  return f;
}

}  // namespace

TEST_CASE("operator_norm on identity and zero") {
  CHECK(operator_norm(ComplexMatrix::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(ComplexMatrix::Zero(2, 2)) == 0.0);
}

TEST_CASE("operator_norm of the first projection at theta = pi/6 is 1/sin") {
  const double theta = std::numbers::pi / 6.0;
  const ComplexMatrix f = angle_system(theta);
  const ComplexMatrix g = left_inverse(f);
  ComplexMatrix q = f.leftCols(1) * g.topRows(1);
  CHECK(std::abs(operator_norm(q) - 2.0) <= 1e-10);

  // Independent oracle: exhaustive sampling of unit vectors (real sweep plus
  // a relative-phase sweep; the norm of a 2-column matrix is attained there).
  double best = 0.0;
  const int steps = 2000;
  for (int i = 0; i < steps; ++i) {
    const double phi = std::numbers::pi * i / steps;
    for (int p = 0; p < 64; ++p) {
      const double alpha = 2.0 * std::numbers::pi * p / 64;
      ComplexVector v(2);
      v << std::cos(phi), std::polar(std::sin(phi), alpha);
      best = std::max(best, (q * v).norm());
    }
  }
  CHECK(best == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("operator_norm rejects bad input") {
  CHECK_THROWS_AS(operator_norm(ComplexMatrix()), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 1) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(operator_norm(bad), std::invalid_argument);
}

TEST_CASE("left_inverse on simple matrices") {
  CHECK(testutil::max_abs(left_inverse(ComplexMatrix::Identity(4, 4)) -
                          ComplexMatrix::Identity(4, 4)) <= 1e-14);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 4.0;
  const ComplexMatrix g = left_inverse(d);
  CHECK(std::abs(g(0, 0) - Complex(0.5)) <= 1e-14);
  CHECK(std::abs(g(1, 1) - Complex(0.25)) <= 1e-14);

  // Orthonormal columns: the left inverse is the adjoint (here the identity).
  const ComplexMatrix f = angle_system(std::numbers::pi / 2.0);
  CHECK(testutil::max_abs(left_inverse(f) - ComplexMatrix::Identity(2, 2)) <= 1e-14);
}

TEST_CASE("left_inverse detects rank deficiency") {
  ComplexMatrix f(3, 2);
  f << 1.0, 1.0, 2.0, 2.0, Complex(0, 1), Complex(0, 1);
  CHECK_THROWS_AS(left_inverse(f), RankDeficiencyError);
  CHECK_THROWS_AS(left_inverse(ComplexMatrix::Zero(3, 3)), RankDeficiencyError);
  // More columns than rows can never have full column rank.
  CHECK_THROWS_AS(left_inverse(ComplexMatrix::Ones(2, 3)), RankDeficiencyError);
}

TEST_CASE("left_inverse of tall full-rank matrices") {
  std::mt19937_64 rng(101);
  const ComplexMatrix f = complex_gaussian(rng, 8, 5);
  const ComplexMatrix g = left_inverse(f);
  CHECK(operator_norm(g * f - ComplexMatrix::Identity(5, 5)) <= 1e-12);
}

TEST_CASE("solve basics and Vandermonde residual check") {
  ComplexVector y(2);
  y << Complex(2.0), Complex(4.0);
  CHECK((solve(ComplexMatrix::Identity(2, 2), y) - y).norm() <= 1e-14);

  ComplexMatrix d2 = 2.0 * ComplexMatrix::Identity(2, 2);
  const ComplexVector x = solve(d2, y);
  CHECK(std::abs(x(0) - Complex(1.0)) <= 1e-14);
  CHECK(std::abs(x(1) - Complex(2.0)) <= 1e-14);

  // Vandermonde on the square roots of unity {1, -1}; the residual is the
  // oracle.
  ComplexMatrix v(2, 2);
  v << 1.0, 1.0, 1.0, -1.0;
  ComplexVector moments(2);
  moments << Complex(0.3, 0.1), Complex(-0.2, 0.7);
  const ComplexVector c = solve(v, moments);
  CHECK((v * c - moments).norm() <= 1e-9 * operator_norm(v) * c.norm());

  CHECK_THROWS_AS(solve(ComplexMatrix::Zero(2, 2), y), RankDeficiencyError);
  CHECK_THROWS_AS(solve(ComplexMatrix::Ones(2, 3), y), std::invalid_argument);
}

TEST_CASE("operator_norm is unitarily invariant") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 10);
    const ComplexMatrix a = complex_gaussian(rng, d, d);
    const ComplexMatrix u = random_unitary(rng, d);
    const ComplexMatrix v = random_unitary(rng, d);
    const double base = operator_norm(a);
    CHECK(std::abs(operator_norm(u * a * v) - base) <= 1e-9 * std::max(1.0, base));
  }
}

TEST_CASE("operator_norm dominates column norms") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix a = complex_gaussian(rng, 6, 4);
    double colmax = 0.0;
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      colmax = std::max(colmax, a.col(c).norm());
    }
    CHECK(operator_norm(a) >= colmax - 1e-12);
  }
}

TEST_CASE("rank-one norm equals the product of vector norms") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexVector u = complex_gaussian_vector(rng, 7);
    const ComplexVector v = complex_gaussian_vector(rng, 5);
    const ComplexMatrix a = u * v.adjoint();
    CHECK(std::abs(operator_norm(a) - u.norm() * v.norm()) <=
          1e-10 * u.norm() * v.norm());
  }
}

TEST_CASE("left inverse times F stays close to the identity up to 32x32") {
  std::mt19937_64 rng(99);
  for (Eigen::Index d : {2, 5, 11, 19, 32}) {
    const ComplexMatrix f = normalized_gaussian(rng, d, d);
    const ComplexMatrix g = left_inverse(f);
    CHECK(operator_norm(g * f - ComplexMatrix::Identity(d, d)) <= 1e-9);
  }
}

TEST_CASE("large-path SVD agrees with the small-path result") {
  // Zero-padding does not change singular values, but pushes the computation
  // from the Jacobi branch into the divide-and-conquer branch.
  std::mt19937_64 rng(7);
  const ComplexMatrix a = complex_gaussian(rng, 30, 30);
  ComplexMatrix padded = ComplexMatrix::Zero(40, 40);
  padded.topLeftCorner(30, 30) = a;
  const double small_path = operator_norm(a);
  const double large_path = operator_norm(padded);
  CHECK(std::abs(small_path - large_path) <= 1e-10 * small_path);
}
