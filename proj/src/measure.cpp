#include "basislab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <unordered_set>

namespace basislab {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw std::invalid_argument("measure.DiscreteMeasure: no atoms");
  }
  for (const Atom& a : atoms_) {
    if (!std::isfinite(a.t) || !std::isfinite(a.w)) {
      throw std::invalid_argument("measure.DiscreteMeasure: non-finite atom");
    }
    if (a.t < 0.0 || a.t >= 1.0) {
      std::ostringstream msg;
      msg << "measure.DiscreteMeasure: position " << a.t << " outside [0, 1)";
      throw std::invalid_argument(msg.str());
    }
    if (a.w <= 0.0) {
      std::ostringstream msg;
      msg << "measure.DiscreteMeasure: weight " << a.w << " is not positive";
      throw std::invalid_argument(msg.str());
    }
  }
  // Positions are compared exactly; merging nearby atoms would hide modeling
  // errors in the caller.
  std::unordered_set<double> seen;
  for (const Atom& a : atoms_) {
    if (!seen.insert(a.t).second) {
      std::ostringstream msg;
      msg << "measure.DiscreteMeasure: duplicate atom position " << a.t;
      throw std::invalid_argument(msg.str());
    }
  }
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) {
    if (a.w != b.w) return a.w > b.w;
    return a.t < b.t;
  });
  total_mass_ = 0.0;
  for (const Atom& a : atoms_) total_mass_ += a.w;
}

Complex moment(const DiscreteMeasure& nu, long long b) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  Complex sum = 0.0;
  for (const Atom& a : nu.atoms()) {
    sum += a.w * std::polar(1.0, two_pi * static_cast<double>(b) * a.t);
  }
  return sum;
}

long long tail_cutoff(const DiscreteMeasure& nu, double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("measure.tail_cutoff: eps must be positive");
  }
  eps = std::min(eps, 1.0 - 1e-12);  // eps >= 1 would allow the empty head
  const double target = (1.0 - eps) * nu.total_mass();
  double head = 0.0;
  long long k = 0;
  for (const Atom& a : nu.atoms()) {
    head += a.w;
    ++k;
    if (head >= target) return k;
  }
  return k;  // finite representation: the whole support always suffices
}

double delta_for(double eps) {
  if (!(eps > 0.0) || eps > 1.0) {
    throw std::invalid_argument("measure.delta_for: eps must lie in (0, 1]");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return std::min(std::acos(1.0 - eps), std::asin(eps)) / two_pi;
}

MomentSearchResult near_unimodular_exponent(const DiscreteMeasure& nu, double eps,
                                            long long cap) {
  if (!(eps > 0.0) || eps >= 1.0) {
    throw std::invalid_argument(
        "measure.near_unimodular_exponent: eps must lie in (0, 1)");
  }
  if (cap < 1) {
    throw std::invalid_argument("measure.near_unimodular_exponent: cap must be >= 1");
  }

  MomentSearchResult result;
  result.epsilon = eps;
  result.k = tail_cutoff(nu, eps);
  result.delta = delta_for(eps);

  // Smallest n with n^(1/k) > 1/delta, saturated at the int64 range.
  const double ceiling = std::pow(1.0 / result.delta, static_cast<double>(result.k));
  result.n_ceiling = ceiling < 9.0e18
                         ? static_cast<long long>(std::floor(ceiling)) + 1
                         : std::numeric_limits<long long>::max();

  const double threshold = (1.0 - 4.0 * eps) * nu.total_mass();
  double best_abs = -1.0;
  long long best_b = 0;
  for (long long b = 1; b <= cap; ++b) {
    const double m = std::abs(moment(nu, b));
    if (m > best_abs) {
      best_abs = m;
      best_b = b;
    }
    result.scanned = b;
    if (m > threshold) {
      result.b = b;
      result.moment_abs = m;
      result.satisfied = true;
      return result;
    }
  }
  result.b = best_b;
  result.moment_abs = best_abs;
  result.satisfied = false;
  return result;
}

DiscreteMeasure pushforward(const DiscreteMeasure& nu, const ComplexVector& f_values) {
  if (f_values.size() != static_cast<Eigen::Index>(nu.size())) {
    throw std::invalid_argument(
        "measure.pushforward: f_values must align with the atoms");
  }
  if (!f_values.allFinite()) {
    throw std::invalid_argument("measure.pushforward: non-finite multiplier value");
  }
  std::vector<Atom> out;
  out.reserve(nu.size());
  for (std::size_t j = 0; j < nu.size(); ++j) {
    const double w = std::norm(f_values(static_cast<Eigen::Index>(j))) * nu.atoms()[j].w;
    if (w > 0.0) {
      out.push_back({nu.atoms()[j].t, w});
    }
  }
  if (out.empty()) {
    throw std::invalid_argument(
        "measure.pushforward: multiplier vanishes on the whole support");
  }
  return DiscreteMeasure(std::move(out));
}

SchauderSystem monomial_system(const DiscreteMeasure& nu,
                               const std::vector<long long>& exponents) {
  const Eigen::Index d = static_cast<Eigen::Index>(exponents.size());
  if (d < 1) {
    throw std::invalid_argument("measure.monomial_system: empty exponent list");
  }
  if (static_cast<std::size_t>(d) > nu.size()) {
    throw std::invalid_argument(
        "measure.monomial_system: more exponents than atoms");
  }
  std::unordered_set<long long> distinct(exponents.begin(), exponents.end());
  if (distinct.size() != exponents.size()) {
    throw std::invalid_argument("measure.monomial_system: exponents must be distinct");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  ComplexMatrix f(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Atom& atom = nu.atoms()[static_cast<std::size_t>(j)];
    const double scale = std::sqrt(atom.w);
    for (Eigen::Index n = 0; n < d; ++n) {
      f(j, n) = scale * std::polar(1.0, two_pi * static_cast<double>(exponents[n]) *
                                            atom.t);
    }
  }
  return SchauderSystem(std::move(f), exponents);
}

std::vector<long long> interleave_enumeration(Eigen::Index d) {
  if (d < 1) {
    throw std::invalid_argument("measure.interleave_enumeration: d must be >= 1");
  }
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(d));
  out.push_back(0);
  for (long long m = 1; static_cast<Eigen::Index>(out.size()) < d; ++m) {
    out.push_back(m);
    if (static_cast<Eigen::Index>(out.size()) < d) out.push_back(-m);
  }
  return out;
}

}  // namespace basislab
