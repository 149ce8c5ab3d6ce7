#include "opmeans/loewner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace opmeans {

namespace {

OrderVerdict compare(const SymMatrix& x, const SymMatrix& y, double norm_x, double norm_y) {
  if (x.dim() != y.dim()) {
    throw DimensionError(
        fmt::format("loewner_leq: dimension mismatch ({} vs {})", x.dim(), y.dim()));
  }
  OrderVerdict v;
  const Eigen::VectorXd ev = eigenvalues(y - x);
  v.gap = ev(0);
  v.scale = std::max({norm_x, norm_y, 1.0});
  v.holds = v.gap >= -kOrderTol * v.scale;
  return v;
}

}  // namespace

double operator_norm(const SymMatrix& x) {
  if (x.dim() == 1) return std::abs(x(0, 0));
  const Eigen::VectorXd ev = eigenvalues(x);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

bool is_psd(const SymMatrix& x) {
  const Eigen::VectorXd ev = eigenvalues(x);
  const double norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  return ev(0) >= -kOrderTol * std::max(norm, 1.0);
}

OrderVerdict loewner_leq(const SymMatrix& x, const SymMatrix& y) {
  return compare(x, y, operator_norm(x), operator_norm(y));
}

void refresh_summary(ChainReport& report) {
  report.all_hold = true;
  report.weakest_gap = std::numeric_limits<double>::infinity();
  for (const auto& link : report.links) {
    report.all_hold = report.all_hold && link.holds;
    report.weakest_gap = std::min(report.weakest_gap, link.normalized_gap());
  }
  if (report.links.empty()) report.weakest_gap = 0.0;
}

ChainReport check_chain(std::span<const SymMatrix> terms) {
  if (terms.size() < 2) throw DimensionError("check_chain: need at least two terms");
  std::vector<double> norms;
  norms.reserve(terms.size());
  for (const auto& t : terms) norms.push_back(operator_norm(t));

  ChainReport report;
  report.terms.assign(terms.begin(), terms.end());
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    OrderVerdict v = compare(terms[i], terms[i + 1], norms[i], norms[i + 1]);
    v.lhs = i;
    v.rhs = i + 1;
    report.links.push_back(v);
  }
  refresh_summary(report);
  return report;
}

ChainReport check_chain(const std::vector<SymMatrix>& terms) {
  return check_chain(std::span<const SymMatrix>(terms));
}

ChainReport check_scalar_chain(const std::vector<double>& values) {
  std::vector<SymMatrix> terms;
  terms.reserve(values.size());
  for (double v : values) terms.push_back(SymMatrix::scalar(v));
  return check_chain(terms);
}

ChainReport concat_chains(ChainReport head, const ChainReport& tail) {
  const std::size_t offset = head.terms.size();
  auto shifted = [offset](OrderVerdict v) {
    v.lhs += offset;
    v.rhs += offset;
    return v;
  };
  for (const auto& v : tail.links) head.links.push_back(shifted(v));
  for (const auto& v : tail.observations) head.observations.push_back(shifted(v));
  head.terms.insert(head.terms.end(), tail.terms.begin(), tail.terms.end());
  refresh_summary(head);
  return head;
}

void demote_link(ChainReport& report, std::size_t index) {
  if (index >= report.links.size()) throw DimensionError("demote_link: index out of range");
  report.observations.push_back(report.links[index]);
  report.links.erase(report.links.begin() + static_cast<std::ptrdiff_t>(index));
  refresh_summary(report);
}

}  // namespace opmeans
