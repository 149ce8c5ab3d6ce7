#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "opmeans/inequalities.hpp"
#include "opmeans/random.hpp"

namespace opmeans {

enum class ReportFormat { kJson, kCsv };

// Grid sweep configuration. Empty per-parameter grids (alphas, betas,
// gammas, deltas) fall back to weight_grid. Empty function_specs selects
// the default catalog; empty map_specs selects the default map set.
//
// Besides the concrete map syntax of PositiveLinearMapSpec::parse, map
// specs accept per-dimension forms resolved for every grid dimension:
//   compression:random     n x ceil(n/2) random orthonormal V (fixed per cell)
//   compression:identity   V = I
//   pinching:auto          two blocks of sizes ceil(n/2), floor(n/2)
//   block_sum:auto         p blocks of size n/p, p the smallest prime factor of n
//   weighted_trace:identity  W = I / n
// Concrete maps only apply to dimensions equal to their input dimension.
struct HarnessConfig {
  std::vector<TheoremId> theorem_ids;
  std::vector<int> dims{1, 2, 3, 5, 8};
  std::vector<double> weight_grid{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> alphas, betas, gammas, deltas;
  std::vector<double> triangle_alphas{-2.0, -0.5, 0.0, 0.3, 0.5, 1.0, 2.0};
  std::vector<double> upsilon_grid{-1.0, 0.0, 1.0};
  std::vector<std::string> function_specs;
  std::vector<std::string> map_specs;
  int trials_per_cell = 100;
  int list_length = 3;  // pairs per E18 instance
  std::uint64_t seed = 42;
  EigRange eig_range{0.1, 10.0};
  std::string output_path;
  ReportFormat format = ReportFormat::kJson;
  int workers = 1;
  bool include_terms = false;

  // Throws DomainError / ParseError on an invalid configuration.
  void validate() const;

  // Echo of everything that determines report content. workers and
  // output_path are left out so they cannot change the bytes of a report.
  nlohmann::json to_json() const;
  static HarnessConfig from_json(const nlohmann::json& j);
};

std::vector<std::string> default_decreasing_functions();
std::vector<std::string> default_increasing_functions();
std::vector<std::string> default_map_specs();

// One grid cell: a theorem with every parameter fixed except the random
// inputs, which come from trials_per_cell draws of the cell's own stream.
struct Cell {
  std::size_t index = 0;
  TheoremId id = TheoremId::kT25;
  int dim = 1;
  std::optional<std::string> function;
  std::optional<PositiveLinearMapSpec> map;
  std::optional<double> upsilon;
  std::optional<double> alpha, beta, gamma, delta;
  std::string key;  // canonical coordinates; seeds the cell's stream

  nlohmann::json params() const;
};

std::vector<Cell> enumerate_cells(const HarnessConfig& config);

// Outcome of all trials of one cell. `report` is the trial with the
// smallest weakest_gap (the first on ties).
struct CellResult {
  Cell cell;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  int observation_violations = 0;
  int worst_trial = -1;
  ChainReport report;
  std::vector<SymMatrix> inputs;  // a_list then b_list of the worst trial
  std::optional<std::string> error;
};

struct RunSummary {
  long total = 0;
  long passed = 0;
  long failed = 0;
  double weakest_gap = 0.0;
  long argmin_cell = -1;
};

struct RunReport {
  HarnessConfig config;
  std::vector<CellResult> cells;
  RunSummary summary;

  bool ok() const { return summary.failed == 0; }
};

CellResult run_cell(const Cell& cell, const HarnessConfig& config);

// Evaluates every cell, in parallel over config.workers threads. The
// result does not depend on the worker count.
RunReport run(const HarnessConfig& config);

nlohmann::json to_json(const CellResult& r, bool include_terms);
nlohmann::json to_json(const RunReport& report);
std::string render_json(const RunReport& report);
// One row per link or observation of each cell's worst trial.
std::string render_csv(const RunReport& report);
std::string render(const RunReport& report);

// Runs, writes config.output_path (stdout when empty) and returns the
// process exit status: 0 iff every claimed link held.
int run_and_write(const HarnessConfig& config);

// Random search for violations of t21_chain with exp_neg forced through
// the hypothesis check.
struct SensitivityConfig {
  std::uint64_t seed = 7;
  int trials = 10000;
  int dim = 2;
  EigRange eig_range{0.1, 10.0};
  double threshold = -1e-4;  // normalized gap that counts as a violation
};

struct SensitivityResult {
  int trials = 0;
  int violations = 0;
  double most_negative_gap = 0.0;
  int witness_trial = -1;
  double witness_alpha = 0.0;
  double witness_beta = 0.0;
  std::optional<SymMatrix> witness_a, witness_b;
  ChainReport witness_report;

  bool found() const { return violations > 0; }
};

SensitivityResult run_sensitivity(const SensitivityConfig& config);
nlohmann::json to_json(const SensitivityResult& r);

}  // namespace opmeans
