#pragma once

#include <filesystem>
#include <string>

#include <Eigen/Dense>

#include "json.hpp"
#include "opmeans/loewner.hpp"
#include "opmeans/spectral.hpp"

namespace opmeans {

// Relative asymmetry above which a matrix literal is rejected.
inline constexpr double kLiteralAsymmetryTol = 1e-8;

// Matrix literal: {"dim": n, "rows": [[...], ...]}. The matrix is
// symmetrized by averaging with its transpose; a literal whose asymmetry
// max|x - x^T| exceeds kLiteralAsymmetryTol * max(max|x|, 1) is rejected.
SymMatrix sym_matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SymMatrix& m);

// Rectangular literal {"rows": [[...], ...]} ("dim" optional and ignored
// when the matrix is not square).
Eigen::MatrixXd rect_matrix_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Serializes JSON with every floating-point number printed as a decimal
// with 17 significant digits. Object keys keep nlohmann's sorted order.
std::string dump_json(const nlohmann::json& j, int indent = 2);

// 17 significant digits, e.g. "0.10000000000000001".
std::string format_double(double x);

// {"gap", "scale", "holds", "lhs", "rhs"}.
nlohmann::json to_json(const OrderVerdict& v);

// {"links": [...], "observations": [...], "all_hold", "weakest_gap",
// "terms"?}. Terms are included when include_terms is set and their
// dimension is at most max_term_dim.
nlohmann::json to_json(const ChainReport& r, bool include_terms, int max_term_dim = 8);

}  // namespace opmeans
