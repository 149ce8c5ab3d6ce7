#include "opmeans/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "opmeans/serialize.hpp"
#include "text.hpp"

namespace opmeans {

namespace {

constexpr int kMaxDim = 64;

bool takes_function(TheoremId id) {
  switch (id) {
    case TheoremId::kT21:
    case TheoremId::kC22:
    case TheoremId::kR23:
    case TheoremId::kC24:
    case TheoremId::kR25:
      return true;
    default:
      return false;
  }
}

MonotoneClass function_class(TheoremId id) {
  return id == TheoremId::kC24 ? MonotoneClass::kIncreasing : MonotoneClass::kDecreasing;
}

bool takes_map(TheoremId id) {
  return id == TheoremId::kT31 || id == TheoremId::kT32 || id == TheoremId::kR33;
}

bool takes_path(TheoremId id) {
  return id == TheoremId::kR25 || id == TheoremId::kT32 || id == TheoremId::kR33;
}

bool takes_beta(TheoremId id) {
  return id != TheoremId::kC22 && id != TheoremId::kR23 && id != TheoremId::kC27 &&
         id != TheoremId::kR27;
}

bool is_triangle(TheoremId id) { return id == TheoremId::kC27 || id == TheoremId::kR27; }

const std::vector<double>& grid_or(const std::vector<double>& g, const std::vector<double>& fallback) {
  return g.empty() ? fallback : g;
}

int smallest_prime_factor(int n) {
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

std::string map_dim_key(const std::string& spec, int dim) {
  return fmt::format("map|{}|dim={}", spec, dim);
}

// Resolves a map spec for one grid dimension; nullopt when it does not
// apply to that dimension.
std::optional<PositiveLinearMapSpec> resolve_map(const std::string& spec, int dim,
                                                 std::uint64_t seed) {
  if (spec == "compression:random") {
    const int k = (dim + 1) / 2;
    Rng rng(derive_seed(seed, map_dim_key(spec, dim)));
    return PositiveLinearMapSpec::compression(gen_orthonormal_columns(dim, k, rng),
                                              fmt::format("random:{}x{}", dim, k));
  }
  if (spec == "compression:identity") {
    return PositiveLinearMapSpec::compression(Eigen::MatrixXd::Identity(dim, dim), "identity");
  }
  if (spec == "pinching:auto") {
    if (dim == 1) return PositiveLinearMapSpec::pinching({1});
    return PositiveLinearMapSpec::pinching({(dim + 1) / 2, dim / 2});
  }
  if (spec == "block_sum:auto") {
    const int p = dim == 1 ? 1 : smallest_prime_factor(dim);
    return PositiveLinearMapSpec::block_sum(p, dim / p);
  }
  if (spec == "weighted_trace:identity") {
    return PositiveLinearMapSpec::weighted_trace(
        detail::assume_posdef(SymMatrix((1.0 / dim) * Eigen::MatrixXd::Identity(dim, dim))),
        "identity");
  }
  PositiveLinearMapSpec map = PositiveLinearMapSpec::parse(spec);
  if (map.in_dim() != dim) return std::nullopt;
  return map;
}

std::string fmt_param(double x) { return fmt::format("{}", x); }

std::vector<double> json_doubles(const nlohmann::json& j) { return j.get<std::vector<double>>(); }

std::string format_name(ReportFormat f) { return f == ReportFormat::kCsv ? "csv" : "json"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_double(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string();
}

}  // namespace

std::vector<std::string> default_decreasing_functions() {
  return {"neg_power:0.25", "neg_power:0.5", "neg_power:1", "shifted_inverse:1:1"};
}

std::vector<std::string> default_increasing_functions() {
  return {"power:0.5", "power:1", "log1p"};
}

std::vector<std::string> default_map_specs() {
  return {"compression:random", "pinching:auto", "block_sum:auto", "weighted_trace:identity"};
}

void HarnessConfig::validate() const {
  for (int d : dims) {
    if (d < 1 || d > kMaxDim) throw DomainError(fmt::format("dimension {} outside [1, {}]", d, kMaxDim));
  }
  for (const auto* grid : {&weight_grid, &alphas, &betas, &gammas, &deltas}) {
    for (double w : *grid) (void)Weight(w);
  }
  for (double a : triangle_alphas) (void)UnrestrictedWeight(a);
  for (double u : upsilon_grid) (void)PathSpec(u);
  if (trials_per_cell < 1) throw DomainError("trials_per_cell must be at least 1");
  if (list_length < 1) throw DomainError("list_length must be at least 1");
  if (workers < 1) throw DomainError("workers must be at least 1");
  if (!(eig_range.lo > 0.0) || !(eig_range.hi > eig_range.lo)) {
    throw DomainError(fmt::format("eig_range needs 0 < lo < hi, got ({}, {})", eig_range.lo, eig_range.hi));
  }
  for (const auto& f : function_specs) (void)ScalarFunctionSpec::parse(f);
  for (const auto& m : map_specs) {
    for (int d : dims) (void)resolve_map(m, d, seed);
  }
}

nlohmann::json HarnessConfig::to_json() const {
  std::vector<std::string> ids;
  for (auto id : theorem_ids) ids.emplace_back(opmeans::to_string(id));
  return {
      {"theorems", ids},
      {"dims", dims},
      {"weights", weight_grid},
      {"alphas", alphas},
      {"betas", betas},
      {"gammas", gammas},
      {"deltas", deltas},
      {"triangle_alphas", triangle_alphas},
      {"upsilons", upsilon_grid},
      {"functions", function_specs},
      {"maps", map_specs},
      {"trials", trials_per_cell},
      {"list_length", list_length},
      {"seed", seed},
      {"eig_range", {eig_range.lo, eig_range.hi}},
      {"format", format_name(format)},
      {"include_terms", include_terms},
  };
}

HarnessConfig HarnessConfig::from_json(const nlohmann::json& j) {
  HarnessConfig c;
  if (j.contains("theorems")) {
    for (const auto& s : j.at("theorems")) c.theorem_ids.push_back(parse_theorem_id(s.get<std::string>()));
  }
  if (j.contains("dims")) c.dims = j.at("dims").get<std::vector<int>>();
  if (j.contains("weights")) c.weight_grid = json_doubles(j.at("weights"));
  if (j.contains("alphas")) c.alphas = json_doubles(j.at("alphas"));
  if (j.contains("betas")) c.betas = json_doubles(j.at("betas"));
  if (j.contains("gammas")) c.gammas = json_doubles(j.at("gammas"));
  if (j.contains("deltas")) c.deltas = json_doubles(j.at("deltas"));
  if (j.contains("triangle_alphas")) c.triangle_alphas = json_doubles(j.at("triangle_alphas"));
  if (j.contains("upsilons")) c.upsilon_grid = json_doubles(j.at("upsilons"));
  if (j.contains("functions")) c.function_specs = j.at("functions").get<std::vector<std::string>>();
  if (j.contains("maps")) c.map_specs = j.at("maps").get<std::vector<std::string>>();
  if (j.contains("trials")) c.trials_per_cell = j.at("trials").get<int>();
  if (j.contains("list_length")) c.list_length = j.at("list_length").get<int>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("eig_range")) {
    const auto r = json_doubles(j.at("eig_range"));
    if (r.size() != 2) throw DomainError("eig_range must have two entries");
    c.eig_range = {r[0], r[1]};
  }
  if (j.contains("format")) {
    const auto f = j.at("format").get<std::string>();
    if (f != "json" && f != "csv") throw DomainError(fmt::format("unknown format '{}'", f));
    c.format = f == "csv" ? ReportFormat::kCsv : ReportFormat::kJson;
  }
  if (j.contains("include_terms")) c.include_terms = j.at("include_terms").get<bool>();
  if (j.contains("output")) c.output_path = j.at("output").get<std::string>();
  if (j.contains("workers")) c.workers = j.at("workers").get<int>();
  return c;
}

nlohmann::json Cell::params() const {
  nlohmann::json p = {{"dim", dim}};
  if (function) p["function"] = *function;
  if (map) p["map"] = map->to_string();
  if (upsilon) p["upsilon"] = *upsilon;
  if (alpha) p["alpha"] = *alpha;
  if (beta) p["beta"] = *beta;
  if (gamma) p["gamma"] = *gamma;
  if (delta) p["delta"] = *delta;
  return p;
}

std::vector<Cell> enumerate_cells(const HarnessConfig& config) {
  config.validate();
  const auto& alphas = grid_or(config.alphas, config.weight_grid);
  const auto& betas = grid_or(config.betas, config.weight_grid);
  const auto& gammas = grid_or(config.gammas, config.weight_grid);
  const auto& deltas = grid_or(config.deltas, config.weight_grid);
  const std::vector<double> none{std::numeric_limits<double>::quiet_NaN()};
  const auto& map_specs = config.map_specs.empty() ? default_map_specs() : config.map_specs;

  std::vector<TheoremId> ids;
  for (auto id : config.theorem_ids) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }

  std::vector<Cell> cells;
  for (TheoremId id : ids) {
    std::vector<std::string> functions{""};
    if (takes_function(id)) {
      functions.clear();
      const MonotoneClass klass = function_class(id);
      std::vector<std::string> candidates = config.function_specs;
      if (candidates.empty()) {
        candidates = klass == MonotoneClass::kIncreasing ? default_increasing_functions()
                                                         : default_decreasing_functions();
      }
      for (const auto& s : candidates) {
        const auto f = ScalarFunctionSpec::parse(s);
        if (f.klass() == klass) functions.push_back(f.to_string());
      }
    }
    const auto& a_grid = is_triangle(id) ? config.triangle_alphas
                         : (id == TheoremId::kC22) ? none
                                                   : alphas;
    const auto& b_grid = takes_beta(id) ? betas : none;
    const auto& g_grid = id == TheoremId::kR33 ? gammas : none;
    const auto& d_grid = id == TheoremId::kR33 ? deltas : none;
    const auto& u_grid = takes_path(id) ? config.upsilon_grid : none;

    for (int dim : config.dims) {
      std::vector<std::optional<PositiveLinearMapSpec>> maps{std::nullopt};
      if (takes_map(id)) {
        maps.clear();
        for (const auto& spec : map_specs) {
          if (auto m = resolve_map(spec, dim, config.seed)) maps.push_back(std::move(m));
        }
      }
      for (const auto& fn : functions) {
        for (const auto& map : maps) {
          for (double u : u_grid) {
            for (double a : a_grid) {
              for (double b : b_grid) {
                for (double g : g_grid) {
                  for (double d : d_grid) {
                    Cell c;
                    c.index = cells.size();
                    c.id = id;
                    c.dim = dim;
                    if (!fn.empty()) c.function = fn;
                    c.map = map;
                    auto set = [](std::optional<double>& slot, double v) {
                      if (!std::isnan(v)) slot = v;
                    };
                    set(c.upsilon, u);
                    set(c.alpha, a);
                    set(c.beta, b);
                    set(c.gamma, g);
                    set(c.delta, d);
                    std::string key = fmt::format("{}|dim={}", to_string(id), dim);
                    if (c.function) key += "|f=" + *c.function;
                    if (c.map) key += "|map=" + c.map->to_string();
                    if (c.upsilon) key += "|upsilon=" + fmt_param(*c.upsilon);
                    if (c.alpha) key += "|alpha=" + fmt_param(*c.alpha);
                    if (c.beta) key += "|beta=" + fmt_param(*c.beta);
                    if (c.gamma) key += "|gamma=" + fmt_param(*c.gamma);
                    if (c.delta) key += "|delta=" + fmt_param(*c.delta);
                    c.key = std::move(key);
                    cells.push_back(std::move(c));
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return cells;
}

CellResult run_cell(const Cell& cell, const HarnessConfig& config) {
  CellResult result;
  result.cell = cell;
  Rng rng(derive_seed(config.seed, cell.key));
  const bool triangle = is_triangle(cell.id);
  const int pairs = cell.id == TheoremId::kE18 ? config.list_length : 1;
  double worst = std::numeric_limits<double>::infinity();

  TheoremInstance inst;
  inst.id = cell.id;
  if (cell.function) inst.function = ScalarFunctionSpec::parse(*cell.function);
  inst.map = cell.map;
  if (cell.upsilon) inst.path = PathSpec(*cell.upsilon);
  inst.alpha = cell.alpha;
  inst.beta = cell.beta;
  inst.gamma = cell.gamma;
  inst.delta = cell.delta;

  for (int t = 0; t < config.trials_per_cell; ++t) {
    inst.a_list.clear();
    inst.b_list.clear();
    for (int j = 0; j < pairs; ++j) {
      if (triangle) {
        inst.a_list.push_back(gen_symmetric(cell.dim, rng));
        inst.b_list.push_back(gen_symmetric(cell.dim, rng));
      } else {
        inst.a_list.push_back(gen_posdef(cell.dim, config.eig_range, rng));
        inst.b_list.push_back(gen_posdef(cell.dim, config.eig_range, rng));
      }
    }
    ++result.trials;
    try {
      ChainReport r = evaluate(inst);
      if (r.all_hold) {
        ++result.passed;
      } else {
        ++result.failed;
      }
      if (std::any_of(r.observations.begin(), r.observations.end(),
                      [](const OrderVerdict& v) { return !v.holds; })) {
        ++result.observation_violations;
      }
      if (r.weakest_gap < worst) {
        worst = r.weakest_gap;
        result.worst_trial = t;
        if (config.include_terms) {
          result.inputs = inst.a_list;
          result.inputs.insert(result.inputs.end(), inst.b_list.begin(), inst.b_list.end());
        } else {
          r.terms.clear();
        }
        result.report = std::move(r);
      }
    } catch (const Error& e) {
      ++result.failed;
      if (!result.error) result.error = fmt::format("trial {}: {}", t, e.what());
    }
  }
  return result;
}

RunReport run(const HarnessConfig& config) {
  RunReport report;
  report.config = config;
  const std::vector<Cell> cells = enumerate_cells(config);
  report.cells.resize(cells.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      report.cells[i] = run_cell(cells[i], config);
    }
  };
  const int n_threads = std::min<int>(config.workers, static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  RunSummary& s = report.summary;
  s.weakest_gap = std::numeric_limits<double>::infinity();
  for (const auto& c : report.cells) {
    s.total += c.trials;
    s.passed += c.passed;
    s.failed += c.failed;
    if (c.worst_trial >= 0 && c.report.weakest_gap < s.weakest_gap) {
      s.weakest_gap = c.report.weakest_gap;
      s.argmin_cell = static_cast<long>(c.cell.index);
    }
  }
  if (s.argmin_cell < 0) s.weakest_gap = 0.0;
  return report;
}

nlohmann::json to_json(const CellResult& r, bool include_terms) {
  nlohmann::json j = to_json(r.report, include_terms);
  j["index"] = r.cell.index;
  j["theorem_id"] = std::string(to_string(r.cell.id));
  j["params"] = r.cell.params();
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["observation_violations"] = r.observation_violations;
  j["worst_trial"] = r.worst_trial;
  j["all_hold"] = r.failed == 0;
  if (r.error) j["error"] = *r.error;
  if (include_terms && !r.inputs.empty()) {
    nlohmann::json inputs = nlohmann::json::array();
    for (const auto& m : r.inputs) inputs.push_back(to_json(m));
    j["inputs"] = std::move(inputs);
  }
  return j;
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : report.cells) cells.push_back(to_json(c, report.config.include_terms));
  const RunSummary& s = report.summary;
  return {
      {"config", report.config.to_json()},
      {"cells", std::move(cells)},
      {"summary",
       {{"total", s.total},
        {"passed", s.passed},
        {"failed", s.failed},
        {"weakest_gap", s.weakest_gap},
        {"argmin_cell", s.argmin_cell}}},
  };
}

std::string render_json(const RunReport& report) { return dump_json(to_json(report)) + "\n"; }

std::string render_csv(const RunReport& report) {
  std::string out =
      "cell,theorem_id,dim,function,map,upsilon,alpha,beta,gamma,delta,trials,passed,failed,"
      "worst_trial,kind,link,lhs,rhs,gap,scale,holds\n";
  for (const auto& r : report.cells) {
    const Cell& c = r.cell;
    const std::string prefix = fmt::format(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}", c.index, to_string(c.id), c.dim,
        csv_field(c.function.value_or("")), csv_field(c.map ? c.map->to_string() : ""),
        opt_double(c.upsilon), opt_double(c.alpha), opt_double(c.beta), opt_double(c.gamma),
        opt_double(c.delta), r.trials, r.passed, r.failed, r.worst_trial);
    auto row = [&](const char* kind, std::size_t i, const OrderVerdict& v) {
      out += fmt::format("{},{},{},{},{},{},{},{}\n", prefix, kind, i, v.lhs, v.rhs,
                         format_double(v.gap), format_double(v.scale), v.holds ? "true" : "false");
    };
    for (std::size_t i = 0; i < r.report.links.size(); ++i) row("link", i, r.report.links[i]);
    for (std::size_t i = 0; i < r.report.observations.size(); ++i) {
      row("observation", i, r.report.observations[i]);
    }
    if (r.report.links.empty() && r.report.observations.empty()) {
      out += prefix + ",none,,,,,,\n";
    }
  }
  return out;
}

std::string render(const RunReport& report) {
  return report.config.format == ReportFormat::kCsv ? render_csv(report) : render_json(report);
}

int run_and_write(const HarnessConfig& config) {
  const RunReport report = run(config);
  const std::string text = render(report);
  if (config.output_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(config.output_path, text);
  }
  return report.ok() ? 0 : 1;
}

SensitivityResult run_sensitivity(const SensitivityConfig& config) {
  if (config.trials < 1) throw DomainError("sensitivity: trials must be at least 1");
  SensitivityResult result;
  result.most_negative_gap = std::numeric_limits<double>::infinity();
  Rng rng(derive_seed(config.seed, fmt::format("sensitivity|exp_neg|dim={}", config.dim)));
  const auto f = ScalarFunctionSpec::exp_neg();
  for (int t = 0; t < config.trials; ++t) {
    const PosDefMatrix a = gen_posdef(config.dim, config.eig_range, rng);
    const PosDefMatrix b = gen_posdef(config.dim, config.eig_range, rng);
    const double alpha = rng.uniform();
    const double beta = rng.uniform();
    ++result.trials;
    ChainReport r = t21_chain(f, a, b, Weight(alpha), Weight(beta), Hypothesis::kBypass);
    if (r.weakest_gap <= config.threshold) ++result.violations;
    if (r.weakest_gap < result.most_negative_gap) {
      result.most_negative_gap = r.weakest_gap;
      result.witness_trial = t;
      result.witness_alpha = alpha;
      result.witness_beta = beta;
      result.witness_a = a.sym();
      result.witness_b = b.sym();
      result.witness_report = std::move(r);
    }
  }
  return result;
}

nlohmann::json to_json(const SensitivityResult& r) {
  nlohmann::json j = {
      {"function", "exp_neg"},
      {"theorem_id", "T21"},
      {"trials", r.trials},
      {"violations", r.violations},
      {"found", r.found()},
      {"most_negative_gap", r.most_negative_gap},
      {"witness_trial", r.witness_trial},
      {"witness_alpha", r.witness_alpha},
      {"witness_beta", r.witness_beta},
      {"witness_report", to_json(r.witness_report, true)},
  };
  if (r.witness_a) j["witness_a"] = to_json(*r.witness_a);
  if (r.witness_b) j["witness_b"] = to_json(*r.witness_b);
  return j;
}

}  // namespace opmeans
