#include "basislab/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace basislab {

double round_sig12(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("io.round_sig12: non-finite value");
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

double finite_or_throw(double x, const char* field) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string("io: non-finite value for field ") + field);
  }
  return x;
}

double reported(double x, const char* field) {
  return round_sig12(finite_or_throw(x, field));
}

const Json& require_field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(std::string(where) + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::string format_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& a) {
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  std::vector<double> re, im;
  re.reserve(static_cast<std::size_t>(a.size()));
  im.reserve(static_cast<std::size_t>(a.size()));
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      re.push_back(finite_or_throw(a(r, c).real(), "re"));
      im.push_back(finite_or_throw(a(r, c).imag(), "im"));
    }
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const char* where = "io.matrix_from_json";
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(where) + ": expected an object");
  }
  const auto rows = require_field(j, "rows", where).get<Eigen::Index>();
  const auto cols = require_field(j, "cols", where).get<Eigen::Index>();
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument(std::string(where) + ": rows and cols must be positive");
  }
  const auto re = require_field(j, "re", where).get<std::vector<double>>();
  const auto im = require_field(j, "im", where).get<std::vector<double>>();
  const std::size_t expected = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (re.size() != expected || im.size() != expected) {
    std::ostringstream msg;
    msg << where << ": expected " << expected << " entries, got re=" << re.size()
        << " im=" << im.size();
    throw std::invalid_argument(msg.str());
  }
  ComplexMatrix a(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const std::size_t i = static_cast<std::size_t>(r * cols + c);
      if (!std::isfinite(re[i]) || !std::isfinite(im[i])) {
        throw std::invalid_argument(std::string(where) + ": non-finite entry");
      }
      a(r, c) = Complex(re[i], im[i]);
    }
  }
  return a;
}

Json system_to_json(const SchauderSystem& sys) {
  Json j = matrix_to_json(sys.matrix());
  if (!sys.labels().empty()) {
    j["labels"] = sys.labels();
  }
  return j;
}

SchauderSystem system_from_json(const Json& j) {
  ComplexMatrix f = matrix_from_json(j);
  std::vector<long long> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<long long>>();
  }
  return SchauderSystem(std::move(f), std::move(labels));
}

Json measure_to_json(const DiscreteMeasure& nu) {
  Json atoms = Json::array();
  for (const Atom& a : nu.atoms()) {
    atoms.push_back({{"t", a.t}, {"w", a.w}});
  }
  return Json{{"atoms", std::move(atoms)}};
}

DiscreteMeasure measure_from_json(const Json& j) {
  const char* where = "io.measure_from_json";
  const Json& atoms = require_field(j, "atoms", where);
  if (!atoms.is_array() || atoms.empty()) {
    throw std::invalid_argument(std::string(where) + ": \"atoms\" must be a non-empty array");
  }
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const Json& a : atoms) {
    out.push_back({require_field(a, "t", where).get<double>(),
                   require_field(a, "w", where).get<double>()});
  }
  return DiscreteMeasure(std::move(out));
}

Json approx_to_json(const ApproxResult& r) {
  return Json{{"a", r.a},
              {"b", r.b},
              {"err", reported(r.err, "err")},
              {"satisfied", r.satisfied}};
}

Json moment_search_to_json(const MomentSearchResult& r) {
  return Json{{"b", r.b},
              {"moment_abs", reported(r.moment_abs, "moment_abs")},
              {"epsilon", reported(r.epsilon, "epsilon")},
              {"k", r.k},
              {"delta", reported(r.delta, "delta")},
              {"n_ceiling", r.n_ceiling},
              {"scanned", r.scanned},
              {"satisfied", r.satisfied}};
}

Json projection_report_to_json(const ProjectionReport& r) {
  Json norms = Json::array();
  Json residuals = Json::array();
  for (double v : r.projection_norms) norms.push_back(reported(v, "projection_norms"));
  for (double v : r.idempotency_residuals)
    residuals.push_back(reported(v, "idempotency_residuals"));
  return Json{{"projection_norms", std::move(norms)},
              {"idempotency_residuals", std::move(residuals)},
              {"basis_constant", reported(r.basis_constant, "basis_constant")}};
}

Json angle_theorem_to_json(const AngleTheoremReport& r) {
  return Json{{"basis_constant", reported(r.basis_constant, "basis_constant")},
              {"min_angle", reported(r.min_angle, "min_angle")},
              {"angle_bound", reported(r.bound, "angle_bound")},
              {"pass", r.pass}};
}

Json angles_to_json(const SchauderSystem& sys) {
  Json pairs = Json::array();
  for (Eigen::Index k = 1; k <= sys.count(); ++k) {
    for (Eigen::Index l = k + 1; l <= sys.count(); ++l) {
      pairs.push_back(
          {{"k", k}, {"l", l}, {"angle", reported(angle(sys, k, l), "angle")}});
    }
  }
  return Json{{"min_angle", reported(min_angle(sys), "min_angle")},
              {"pairs", std::move(pairs)}};
}

Json shift_representation_to_json(const ShiftRepresentation& rep) {
  const Eigen::Index d = rep.mz.rows();
  std::vector<double> eig_re, eig_im, f_re, f_im;
  for (Eigen::Index j = 0; j < d; ++j) {
    eig_re.push_back(reported(rep.mz(j, j).real(), "eigenvalues"));
    eig_im.push_back(reported(rep.mz(j, j).imag(), "eigenvalues"));
    f_re.push_back(reported(rep.cyclic_vector(j).real(), "cyclic_vector"));
    f_im.push_back(reported(rep.cyclic_vector(j).imag(), "cyclic_vector"));
  }

  // Residuals against the shift pattern and the similarity relation.
  ComplexMatrix shift_pattern = ComplexMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k + 1 < d; ++k) shift_pattern(k + 1, k) = 1.0;
  ComplexMatrix off = rep.companion - shift_pattern;
  off.col(d - 1).setZero();
  const double subdiag = off.norm();
  const double similarity =
      (rep.basis.matrix() * rep.companion - rep.mz * rep.basis.matrix()).norm();

  return Json{{"d", d},
              {"eigenvalues", Json{{"re", eig_re}, {"im", eig_im}}},
              {"cyclic_vector", Json{{"re", f_re}, {"im", f_im}}},
              {"basis", matrix_to_json(rep.basis.matrix())},
              {"companion", matrix_to_json(rep.companion)},
              {"subdiagonal_residual", reported(subdiag, "subdiagonal_residual")},
              {"similarity_residual", reported(similarity, "similarity_residual")}};
}

Json divergence_to_json(const std::vector<DivergenceRow>& rows) {
  Json out = Json::array();
  for (const DivergenceRow& row : rows) {
    Json j{{"d", row.d}};
    if (row.basis_constant) j["basis_constant"] = reported(*row.basis_constant, "basis_constant");
    j["min_angle"] = reported(row.min_angle, "min_angle");
    if (row.angle_bound) j["angle_bound"] = reported(*row.angle_bound, "angle_bound");
    if (std::isfinite(row.pair_bound)) j["pair_bound"] = reported(row.pair_bound, "pair_bound");
    j["conditioning_ok"] = row.conditioning_ok;
    out.push_back(std::move(j));
  }
  return Json{{"rows", std::move(out)}};
}

std::string divergence_to_csv(const std::vector<DivergenceRow>& rows) {
  std::ostringstream csv;
  csv << "d,M,theta_min,angle_bound,pair_bound,conditioning_flag\n";
  for (const DivergenceRow& row : rows) {
    csv << row.d << ',';
    if (row.basis_constant) csv << format_sig12(*row.basis_constant);
    csv << ',' << format_sig12(row.min_angle) << ',';
    if (row.angle_bound) csv << format_sig12(*row.angle_bound);
    csv << ',';
    if (std::isfinite(row.pair_bound)) csv << format_sig12(row.pair_bound);
    csv << ',' << (row.conditioning_ok ? 0 : 1) << '\n';
  }
  return csv.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("io.load_json_file: cannot open " + path);
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("io.load_json_file: " + path + ": " + e.what());
  }
}

}  // namespace basislab
