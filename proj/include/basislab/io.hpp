#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "basislab/diophantine.hpp"
#include "basislab/measure.hpp"
#include "basislab/schauder.hpp"
#include "basislab/shiftrep.hpp"
#include "basislab/types.hpp"

namespace basislab {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits; reported reals (angles in particular) use
/// this so downstream comparisons are unambiguous.
double round_sig12(double x);

// Matrix interchange: {"rows": r, "cols": c, "re": [...], "im": [...]},
// arrays row-major of length r*c.
Json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const Json& j);

// System interchange: the matrix object plus optional "labels": [integers].
Json system_to_json(const SchauderSystem& sys);
SchauderSystem system_from_json(const Json& j);

// Measure interchange: {"atoms": [{"t": ..., "w": ...}, ...]}.
Json measure_to_json(const DiscreteMeasure& nu);
DiscreteMeasure measure_from_json(const Json& j);

// Machine-readable reports (stable field order, all values finite).
Json approx_to_json(const ApproxResult& r);
Json moment_search_to_json(const MomentSearchResult& r);
Json projection_report_to_json(const ProjectionReport& r);
Json angle_theorem_to_json(const AngleTheoremReport& r);
Json angles_to_json(const SchauderSystem& sys);
Json shift_representation_to_json(const ShiftRepresentation& rep);
Json divergence_to_json(const std::vector<DivergenceRow>& rows);

/// CSV with header d,M,theta_min,angle_bound,pair_bound,conditioning_flag;
/// one row per truncation, unavailable fields empty, flag 1 on failed rows.
std::string divergence_to_csv(const std::vector<DivergenceRow>& rows);

/// Parses a JSON document from a file, with the path in error messages.
Json load_json_file(const std::string& path);

}  // namespace basislab
