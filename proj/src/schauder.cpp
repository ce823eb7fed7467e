#include "basislab/schauder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "basislab/numerics.hpp"

namespace basislab {

SchauderSystem::SchauderSystem(ComplexMatrix f, std::vector<long long> labels)
    : f_(std::move(f)), labels_(std::move(labels)) {
  if (f_.size() == 0) {
    throw std::invalid_argument("schauder.SchauderSystem: empty matrix");
  }
  if (!f_.allFinite()) {
    throw std::invalid_argument("schauder.SchauderSystem: non-finite entry");
  }
  if (f_.cols() > f_.rows()) {
    throw std::invalid_argument(
        "schauder.SchauderSystem: more vectors than ambient dimensions");
  }
  for (Eigen::Index c = 0; c < f_.cols(); ++c) {
    if (f_.col(c).norm() == 0.0) {
      std::ostringstream msg;
      msg << "schauder.SchauderSystem: column " << (c + 1) << " has zero norm";
      throw std::invalid_argument(msg.str());
    }
  }
  if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != f_.cols()) {
    throw std::invalid_argument(
        "schauder.SchauderSystem: label count does not match column count");
  }
}

namespace {

void require_square(const SchauderSystem& sys, const char* where) {
  if (sys.count() != sys.dim()) {
    throw std::invalid_argument(std::string(where) +
                                ": system must be square (count == dim)");
  }
}

void require_index(const SchauderSystem& sys, Eigen::Index i, const char* where) {
  if (i < 1 || i > sys.count()) {
    std::ostringstream msg;
    msg << where << ": index " << i << " out of range 1.." << sys.count();
    throw std::invalid_argument(msg.str());
  }
}

// Q_n = F P_n G* = (first n columns of F) * (first n rows of G*).
ComplexMatrix projection_from(const ComplexMatrix& f, const ComplexMatrix& g,
                              Eigen::Index n) {
  return f.leftCols(n) * g.topRows(n);
}

}  // namespace

ComplexMatrix natural_projection(const SchauderSystem& sys, Eigen::Index n) {
  require_square(sys, "schauder.natural_projection");
  require_index(sys, n, "schauder.natural_projection");
  const ComplexMatrix g = left_inverse(sys.matrix());
  return projection_from(sys.matrix(), g, n);
}

ProjectionReport basis_constant(const SchauderSystem& sys) {
  require_square(sys, "schauder.basis_constant");
  const ComplexMatrix& f = sys.matrix();
  const ComplexMatrix g = left_inverse(f);
  ProjectionReport report;
  report.projection_norms.reserve(sys.count());
  report.idempotency_residuals.reserve(sys.count());
  for (Eigen::Index n = 1; n <= sys.count(); ++n) {
    const ComplexMatrix q = projection_from(f, g, n);
    report.projection_norms.push_back(operator_norm(q));
    report.idempotency_residuals.push_back(operator_norm(q * q - q));
  }
  report.basis_constant =
      *std::max_element(report.projection_norms.begin(), report.projection_norms.end());
  return report;
}

double angle(const SchauderSystem& sys, Eigen::Index k, Eigen::Index l) {
  require_index(sys, k, "schauder.angle");
  require_index(sys, l, "schauder.angle");
  if (k == l) {
    throw std::invalid_argument("schauder.angle: indices must differ");
  }
  const auto fk = sys.matrix().col(k - 1);
  const auto fl = sys.matrix().col(l - 1);
  const double c = std::abs(fk.dot(fl)) / (fk.norm() * fl.norm());
  return std::acos(std::clamp(c, 0.0, 1.0));
}

double min_angle(const SchauderSystem& sys) {
  if (sys.count() < 2) {
    throw std::invalid_argument("schauder.min_angle: need at least two vectors");
  }
  double best = std::acos(0.0);
  for (Eigen::Index k = 1; k <= sys.count(); ++k) {
    for (Eigen::Index l = k + 1; l <= sys.count(); ++l) {
      best = std::min(best, angle(sys, k, l));
    }
  }
  return best;
}

double angle_bound(double m) {
  if (!(m >= 1.0)) {
    throw std::domain_error("schauder.angle_bound: basis constant must be >= 1");
  }
  return std::acos(1.0 - 1.0 / (8.0 * m * m));
}

double pair_lower_bound(const SchauderSystem& sys, Eigen::Index k, Eigen::Index l) {
  const double theta = angle(sys, k, l);
  const double r = std::cos(theta);
  if (r >= 1.0) {
    std::ostringstream msg;
    msg << "schauder.pair_lower_bound: vectors " << k << " and " << l
        << " are collinear; the system is not minimal";
    throw std::domain_error(msg.str());
  }
  return 1.0 / (2.0 * std::sqrt(2.0 * (1.0 - r)));
}

AngleTheoremReport verify_angle_theorem(const SchauderSystem& sys) {
  AngleTheoremReport report;
  report.basis_constant = basis_constant(sys).basis_constant;
  report.min_angle = min_angle(sys);
  report.bound = angle_bound(report.basis_constant);
  report.pass = report.min_angle >= report.bound - 1e-9;
  return report;
}

SchauderSystem example_minimal_sequence(Eigen::Index n_blocks) {
  if (n_blocks < 1) {
    throw std::invalid_argument("schauder.example_minimal_sequence: N must be >= 1");
  }
  const Eigen::Index d = 2 * n_blocks;
  ComplexMatrix f = ComplexMatrix::Zero(d, d);
  for (Eigen::Index n = 1; n <= n_blocks; ++n) {
    // Inner product c_n = 1 - 1/n; the degenerate n = 1 block uses 1/2.
    const double c = (n == 1) ? 0.5 : 1.0 - 1.0 / static_cast<double>(n);
    const double s = std::sqrt(1.0 - c * c);
    const Eigen::Index base = 2 * (n - 1);
    f(base, base) = 1.0;
    f(base, base + 1) = c;
    f(base + 1, base + 1) = s;
  }
  return SchauderSystem(std::move(f));
}

}  // namespace basislab
