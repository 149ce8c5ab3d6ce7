#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace opmeans {

// Small instances with closed-form answers. Each entry maps a fixture name
// to a flat list of numbers: chain terms for scalar chains, row-major
// entries for matrix results.
nlohmann::json compute_oracle_fixtures();

struct FixtureMismatch {
  std::string name;
  std::string detail;
};

// Compares `actual` against `expected` entry by entry. Missing names,
// length mismatches and values off by more than atol are reported.
std::vector<FixtureMismatch> compare_fixtures(const nlohmann::json& expected,
                                              const nlohmann::json& actual, double atol = 1e-4);

}  // namespace opmeans
