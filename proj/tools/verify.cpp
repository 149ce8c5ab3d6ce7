#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opmeans/error.hpp"
#include "opmeans/harness.hpp"
#include "opmeans/oracle.hpp"
#include "opmeans/serialize.hpp"

using namespace opmeans;

namespace {

constexpr int kUsageError = 2;

std::vector<TheoremId> parse_theorems(const std::vector<std::string>& names) {
  std::vector<TheoremId> ids;
  for (const auto& n : names) {
    if (n == "all") {
      for (auto id : {TheoremId::kT21, TheoremId::kC22, TheoremId::kR23, TheoremId::kC24,
                      TheoremId::kR25, TheoremId::kT25, TheoremId::kC27, TheoremId::kR27,
                      TheoremId::kT31, TheoremId::kE18, TheoremId::kT32, TheoremId::kR33}) {
        ids.push_back(id);
      }
    } else {
      ids.push_back(parse_theorem_id(n));
    }
  }
  return ids;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized Loewner-order checks for operator mean inequalities"};
  app.set_help_all_flag("--help-all");

  std::string config_path;
  std::vector<std::string> theorems, functions, maps;
  std::vector<int> dims;
  std::vector<double> weights, alphas, betas, gammas, deltas, triangle_alphas, upsilons, eig_range;
  int trials = 0, list_length = 0, workers = 1;
  std::uint64_t seed = 0;
  std::string out, format;
  bool terms = false;

  app.add_option("--config", config_path, "JSON config; explicit flags override it")
      ->check(CLI::ExistingFile);
  auto* o_theorems = app.add_option("--theorems", theorems, "T21,C22,... or all")->delimiter(',');
  auto* o_dims = app.add_option("--dims", dims, "matrix dimensions")->delimiter(',');
  auto* o_weights = app.add_option("--weights", weights, "default weight grid")->delimiter(',');
  auto* o_alphas = app.add_option("--alphas", alphas)->delimiter(',');
  auto* o_betas = app.add_option("--betas", betas)->delimiter(',');
  auto* o_gammas = app.add_option("--gammas", gammas)->delimiter(',');
  auto* o_deltas = app.add_option("--deltas", deltas)->delimiter(',');
  auto* o_tri = app.add_option("--triangle-alphas", triangle_alphas, "alphas for C27 and R27")
                    ->delimiter(',');
  auto* o_ups = app.add_option("--upsilons", upsilons, "power-mean path grid")->delimiter(',');
  auto* o_functions = app.add_option("--functions", functions, "e.g. neg_power:0.5,log1p")
                          ->delimiter(',');
  auto* o_maps = app.add_option("--maps", maps, "';'-separated map specs")->delimiter(';');
  auto* o_trials = app.add_option("--trials", trials, "trials per cell");
  auto* o_list = app.add_option("--list-length", list_length, "pairs per E18 instance");
  auto* o_seed = app.add_option("--seed", seed);
  auto* o_eig = app.add_option("--eig-range", eig_range, "lo,hi")->delimiter(',')->expected(2);
  auto* o_out = app.add_option("--out", out, "output file (stdout by default)");
  auto* o_format = app.add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  auto* o_workers = app.add_option("--workers", workers);
  auto* o_terms = app.add_flag("--terms", terms, "include chain terms and inputs of worst trials");

  auto* sens = app.add_subcommand("sensitivity", "search for exp_neg counterexamples to T21");
  SensitivityConfig sc;
  std::string sens_out;
  sens->add_option("--seed", sc.seed);
  sens->add_option("--trials", sc.trials);
  sens->add_option("--dim", sc.dim);
  sens->add_option("--out", sens_out);

  auto* oracle = app.add_subcommand("oracle", "closed-form fixture values");
  std::string oracle_out, oracle_check;
  double oracle_atol = 1e-4;
  oracle->add_option("--out", oracle_out);
  oracle->add_option("--check", oracle_check, "expected fixtures to compare against")
      ->check(CLI::ExistingFile);
  oracle->add_option("--atol", oracle_atol);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sens) {
      const SensitivityResult r = run_sensitivity(sc);
      emit(dump_json(to_json(r)) + "\n", sens_out);
      std::fprintf(stderr, "sensitivity: %d of %d trials violate the chain\n", r.violations,
                   r.trials);
      return r.found() ? 0 : 1;
    }
    if (*oracle) {
      const auto actual = compute_oracle_fixtures();
      if (!oracle_out.empty() || oracle_check.empty()) emit(dump_json(actual) + "\n", oracle_out);
      if (oracle_check.empty()) return 0;
      const auto mismatches = compare_fixtures(read_json_file(oracle_check), actual, oracle_atol);
      for (const auto& m : mismatches) {
        std::fprintf(stderr, "mismatch %s: %s\n", m.name.c_str(), m.detail.c_str());
      }
      std::fprintf(stderr, "oracle: %zu mismatches\n", mismatches.size());
      return mismatches.empty() ? 0 : 1;
    }

    HarnessConfig config;
    if (!config_path.empty()) config = HarnessConfig::from_json(read_json_file(config_path));
    if (*o_theorems) config.theorem_ids = parse_theorems(theorems);
    if (*o_dims) config.dims = dims;
    if (*o_weights) config.weight_grid = weights;
    if (*o_alphas) config.alphas = alphas;
    if (*o_betas) config.betas = betas;
    if (*o_gammas) config.gammas = gammas;
    if (*o_deltas) config.deltas = deltas;
    if (*o_tri) config.triangle_alphas = triangle_alphas;
    if (*o_ups) config.upsilon_grid = upsilons;
    if (*o_functions) config.function_specs = functions;
    if (*o_maps) config.map_specs = maps;
    if (*o_trials) config.trials_per_cell = trials;
    if (*o_list) config.list_length = list_length;
    if (*o_seed) config.seed = seed;
    if (*o_eig) config.eig_range = {eig_range[0], eig_range[1]};
    if (*o_out) config.output_path = out;
    if (*o_format) config.format = format == "csv" ? ReportFormat::kCsv : ReportFormat::kJson;
    if (*o_workers) config.workers = workers;
    if (*o_terms) config.include_terms = terms;
    config.validate();
    return run_and_write(config);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad config: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
