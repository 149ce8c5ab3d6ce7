#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "opmeans/spectral.hpp"

namespace opmeans {

// Relative tolerance for Loewner comparisons.
inline constexpr double kOrderTol = 1e-8;

// Outcome of X <= Y in the Loewner order. gap = lambda_min(Y - X) and
// scale = max(||X||_2, ||Y||_2, 1); holds iff gap >= -kOrderTol * scale.
// lhs / rhs index the compared terms inside a ChainReport.
struct OrderVerdict {
  bool holds = false;
  double gap = 0.0;
  double scale = 1.0;
  std::size_t lhs = 0;
  std::size_t rhs = 1;

  double normalized_gap() const { return gap / scale; }
};

// A chain of Loewner comparisons. links are the comparisons the chain
// claims; observations are extra comparisons evaluated for the record but
// not claimed (they do not affect all_hold or weakest_gap).
struct ChainReport {
  std::vector<OrderVerdict> links;
  std::vector<OrderVerdict> observations;
  std::vector<SymMatrix> terms;
  bool all_hold = true;
  double weakest_gap = 0.0;  // min over links of gap / scale
};

OrderVerdict loewner_leq(const SymMatrix& x, const SymMatrix& y);

// Link i compares terms[i] <= terms[i + 1]. Throws DimensionError for fewer
// than two terms or mismatched dimensions.
ChainReport check_chain(std::span<const SymMatrix> terms);
ChainReport check_chain(const std::vector<SymMatrix>& terms);

// Scalar chain, each value treated as a 1x1 matrix.
ChainReport check_scalar_chain(const std::vector<double>& values);

// Appends the links, observations and terms of `tail` to `head`, shifting
// the term indices of `tail`, and recomputes all_hold / weakest_gap.
ChainReport concat_chains(ChainReport head, const ChainReport& tail);

// Moves link `index` from the claimed links to the observations.
void demote_link(ChainReport& report, std::size_t index);

// Recomputes all_hold and weakest_gap from the links.
void refresh_summary(ChainReport& report);

// Spectral norm: max |lambda| of a symmetric matrix.
double operator_norm(const SymMatrix& x);

// lambda_min(x) >= -kOrderTol * max(||x||_2, 1).
bool is_psd(const SymMatrix& x);

}  // namespace opmeans
