#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "opmeans/random.hpp"
#include "opmeans/spectral.hpp"

namespace opmeans {

// A positive linear map between spaces of symmetric matrices, described
// constructively:
//
//   compression(V)        X -> V^T X V               n -> k, V is n x k of full column rank
//   pinching(blocks)      X -> blockdiag(X_11, ...)  n -> n, n = sum of block sizes
//   block_sum(m, d)       X -> X_11 + ... + X_mm     m d -> d
//   weighted_trace(W)     X -> [tr(X W)]             n -> 1
class PositiveLinearMapSpec {
 public:
  enum class Kind { kCompression, kPinching, kBlockSum, kWeightedTrace };

  static PositiveLinearMapSpec compression(Eigen::MatrixXd v, std::string label = "");
  static PositiveLinearMapSpec pinching(std::vector<int> block_sizes);
  static PositiveLinearMapSpec block_sum(int n_blocks, int block_dim);
  static PositiveLinearMapSpec weighted_trace(PosDefMatrix w, std::string label = "");

  // "pinching:1,1", "block_sum:2x3", "compression:<file.json>",
  // "weighted_trace:<file.json>". File paths are read immediately.
  // Throws ParseError with the offending position.
  static PositiveLinearMapSpec parse(std::string_view text);

  Kind kind() const;
  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }

  // True for compressions whose V^T V is not a multiple of the identity.
  // Such maps are still positive but fall outside the default grids.
  bool experimental() const;

  std::string to_string() const;

  const Eigen::MatrixXd& compression_matrix() const;
  const std::vector<int>& pinching_blocks() const;
  const PosDefMatrix& trace_weight() const;

 private:
  struct Compression {
    Eigen::MatrixXd v;
    std::string label;
  };
  struct Pinching {
    std::vector<int> blocks;
  };
  struct BlockSum {
    int n_blocks;
    int block_dim;
  };
  struct WeightedTrace {
    PosDefMatrix w;
    std::string label;
  };
  using Variant = std::variant<Compression, Pinching, BlockSum, WeightedTrace>;

  PositiveLinearMapSpec(Variant v, int in_dim, int out_dim)
      : map_(std::move(v)), in_dim_(in_dim), out_dim_(out_dim) {}

  friend SymMatrix apply_map(const PositiveLinearMapSpec& phi, const SymMatrix& x);

  Variant map_;
  int in_dim_;
  int out_dim_;
};

SymMatrix apply_map(const PositiveLinearMapSpec& phi, const SymMatrix& x);

// Image of a positive definite matrix, required to pass the positive
// definiteness floor. Throws NotPositiveDefinite naming the map otherwise.
PosDefMatrix apply_map_posdef(const PositiveLinearMapSpec& phi, const PosDefMatrix& x);

using LinearMap = std::function<SymMatrix(const SymMatrix&)>;

// Samples `trials` random positive semidefinite inputs (alternating full
// rank G G^T and rank one x x^T) and returns true iff every image passes
// is_psd.
bool check_positivity(const PositiveLinearMapSpec& phi, int trials, Rng& rng);
bool check_positivity(const LinearMap& phi, int in_dim, int trials, Rng& rng);

}  // namespace opmeans
