#include "opmeans/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace opmeans {

namespace {

Eigen::MatrixXd rows_to_matrix(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty()) throw DimensionError("matrix literal: 'rows' must be a non-empty array");
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  if (!rows[0].is_array() || rows[0].empty()) throw DimensionError("matrix literal: rows must be non-empty arrays");
  const auto n_cols = static_cast<Eigen::Index>(rows[0].size());
  Eigen::MatrixXd m(n_rows, n_cols);
  for (Eigen::Index i = 0; i < n_rows; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n_cols) {
      throw DimensionError(fmt::format("matrix literal: row {} has the wrong length", i));
    }
    for (Eigen::Index j = 0; j < n_cols; ++j) {
      const auto& x = row[static_cast<std::size_t>(j)];
      if (!x.is_number()) throw DomainError(fmt::format("matrix literal: entry ({}, {}) is not a number", i, j));
      m(i, j) = x.get<double>();
    }
  }
  return m;
}

void dump_rec(const nlohmann::json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_rec(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const nlohmann::json& e) {
        return e.is_structured();
      });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        dump_rec(e, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  return fmt::format("{:.17g}", x);
}

SymMatrix sym_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows")) throw DomainError("matrix literal: expected an object with 'rows'");
  const Eigen::MatrixXd m = rows_to_matrix(j.at("rows"));
  if (m.rows() != m.cols()) throw DimensionError("matrix literal: matrix is not square");
  if (j.contains("dim") && j.at("dim").get<long>() != m.rows()) {
    throw DimensionError(fmt::format("matrix literal: 'dim' is {} but there are {} rows", j.at("dim").get<long>(), m.rows()));
  }
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  const double size = std::max(m.cwiseAbs().maxCoeff(), 1.0);
  if (asym > kLiteralAsymmetryTol * size) {
    throw DomainError(fmt::format("matrix literal: asymmetry {:.3g} exceeds tolerance", asym));
  }
  return SymMatrix(m);
}

nlohmann::json to_json(const SymMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.dim(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"rows", std::move(rows)}};
}

Eigen::MatrixXd rect_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows")) throw DomainError("matrix literal: expected an object with 'rows'");
  return rows_to_matrix(j.at("rows"));
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open '{}'", path.string()));
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("invalid JSON in '{}': {}", path.string(), e.what()), e.byte);
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  if (!out) throw Error(fmt::format("write to '{}' failed", path.string()));
}

std::string dump_json(const nlohmann::json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  return out;
}

nlohmann::json to_json(const OrderVerdict& v) {
  return {{"gap", v.gap}, {"scale", v.scale}, {"holds", v.holds}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

nlohmann::json to_json(const ChainReport& r, bool include_terms, int max_term_dim) {
  nlohmann::json links = nlohmann::json::array();
  for (const auto& v : r.links) links.push_back(to_json(v));
  nlohmann::json obs = nlohmann::json::array();
  for (const auto& v : r.observations) obs.push_back(to_json(v));
  nlohmann::json j = {{"links", std::move(links)},
                      {"observations", std::move(obs)},
                      {"all_hold", r.all_hold},
                      {"weakest_gap", r.weakest_gap}};
  if (include_terms && !r.terms.empty() && r.terms.front().dim() <= max_term_dim) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : r.terms) terms.push_back(to_json(t));
    j["terms"] = std::move(terms);
  }
  return j;
}

}  // namespace opmeans
