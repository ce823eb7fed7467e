#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "basislab/diophantine.hpp"
#include "basislab/io.hpp"
#include "basislab/measure.hpp"
#include "basislab/schauder.hpp"
#include "basislab/shiftrep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;    // input or conditioning failure
constexpr int kExitFlagged = 2;  // valid run, unsatisfied/failed result

void emit(const basislab::Json& j) { std::cout << j.dump(2) << '\n'; }

basislab::SchauderSystem load_system(const std::string& path) {
  return basislab::system_from_json(basislab::load_json_file(path));
}

basislab::DiscreteMeasure load_measure(const std::string& path) {
  return basislab::measure_from_json(basislab::load_json_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schauder-basis diagnostics: basis constants, natural projections,"
               " angle bounds, simultaneous rational approximation, and moments of"
               " discrete measures on the circle."};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "json";
  app.add_option("--format", format, "Output format: json or csv (csv: divergence only)")
      ->check(CLI::IsMember({"json", "csv"}));
  std::int64_t seed = 0;
  app.add_option("--seed", seed, "Reserved for randomized suites; accepted for "
                                 "reproducibility bookkeeping");

  std::string system_path, measure_path, out_path;
  std::vector<double> xs;
  std::int64_t n = 0, cap = 10000000, dmax = 0, d = 0, blocks = 0;
  double eps = 0.1;

  auto* cmd_basis = app.add_subcommand("basis-constant",
                                       "Projection norms and basis constant of a system");
  cmd_basis->add_option("--system", system_path, "System JSON file")->required();

  auto* cmd_angles = app.add_subcommand("angles", "Pairwise angles of a system");
  cmd_angles->add_option("--system", system_path, "System JSON file")->required();

  auto* cmd_verify = app.add_subcommand("verify-theorem",
                                        "Check min angle against arccos(1 - 1/(8 M^2))");
  cmd_verify->add_option("--system", system_path, "System JSON file")->required();

  auto* cmd_approx = app.add_subcommand("approx", "Simultaneous rational approximation");
  cmd_approx->add_option("--x", xs, "Target reals, comma separated")
      ->required()
      ->delimiter(',');
  cmd_approx->add_option("--n", n, "Denominator ceiling")->required()
      ->check(CLI::PositiveNumber);

  auto* cmd_moment = app.add_subcommand("moment-search",
                                        "Near-unimodular moment exponent search");
  cmd_moment->add_option("--measure", measure_path, "Measure JSON file")->required();
  cmd_moment->add_option("--eps", eps, "Epsilon in (0, 1)")->required();
  cmd_moment->add_option("--cap", cap, "Scan cap (default 10^7)")
      ->check(CLI::PositiveNumber);

  auto* cmd_div = app.add_subcommand("divergence",
                                     "Basis-constant growth of monomial truncations");
  cmd_div->add_option("--measure", measure_path, "Measure JSON file")->required();
  cmd_div->add_option("--dmax", dmax, "Largest truncation dimension")->required()
      ->check(CLI::PositiveNumber);

  auto* cmd_shift = app.add_subcommand("shift-rep",
                                       "Shift representation of the multiplication operator");
  cmd_shift->add_option("--measure", measure_path, "Measure JSON file")->required();
  cmd_shift->add_option("--d", d, "Dimension (atoms used)")->required()
      ->check(CLI::PositiveNumber);

  auto* cmd_example = app.add_subcommand("example-2-2",
                                         "Minimal-sequence family with collapsing angles");
  cmd_example->add_option("--n", blocks, "Number of 2x2 blocks")->required()
      ->check(CLI::PositiveNumber);
  cmd_example->add_option("--out", out_path, "Also write the system JSON to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (format == "csv" && !cmd_div->parsed()) {
      std::cerr << "error: cli.run: csv output is only available for divergence\n";
      return kExitError;
    }

    if (cmd_basis->parsed()) {
      emit(basislab::projection_report_to_json(
          basislab::basis_constant(load_system(system_path))));
      return kExitOk;
    }
    if (cmd_angles->parsed()) {
      emit(basislab::angles_to_json(load_system(system_path)));
      return kExitOk;
    }
    if (cmd_verify->parsed()) {
      const auto report = basislab::verify_angle_theorem(load_system(system_path));
      emit(basislab::angle_theorem_to_json(report));
      return report.pass ? kExitOk : kExitFlagged;
    }
    if (cmd_approx->parsed()) {
      const auto result = basislab::simultaneous_approx(xs, n);
      emit(basislab::approx_to_json(result));
      return result.satisfied ? kExitOk : kExitFlagged;
    }
    if (cmd_moment->parsed()) {
      const auto result =
          basislab::near_unimodular_exponent(load_measure(measure_path), eps, cap);
      emit(basislab::moment_search_to_json(result));
      return result.satisfied ? kExitOk : kExitFlagged;
    }
    if (cmd_div->parsed()) {
      const auto rows =
          basislab::shift_divergence_experiment(load_measure(measure_path), dmax);
      if (format == "csv") {
        std::cout << basislab::divergence_to_csv(rows);
      } else {
        emit(basislab::divergence_to_json(rows));
      }
      for (const auto& row : rows) {
        if (!row.conditioning_ok) return kExitFlagged;
      }
      return kExitOk;
    }
    if (cmd_shift->parsed()) {
      emit(basislab::shift_representation_to_json(
          basislab::shift_representation(load_measure(measure_path), d)));
      return kExitOk;
    }
    if (cmd_example->parsed()) {
      const auto sys = basislab::example_minimal_sequence(blocks);
      const auto system_json = basislab::system_to_json(sys);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
          throw std::invalid_argument("cli.example-2-2: cannot write " + out_path);
        }
        out << system_json.dump(2) << '\n';
      }
      emit(basislab::Json{
          {"system", system_json},
          {"report", basislab::angle_theorem_to_json(basislab::verify_angle_theorem(sys))}});
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;  // unreachable: a subcommand is required
}
