#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

#include <Eigen/Dense>

#include "opmeans/spectral.hpp"

namespace opmeans {

// One step of SplitMix64 (Steele, Lea, Flood 2014): advances `state` by the
// golden-ratio increment and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

// 64-bit FNV-1a of the bytes of `key`.
std::uint64_t fnv1a64(std::string_view key);

// seed XOR fnv1a64(cell_key). Cells are addressed by a canonical key
// string, so each cell's stream is independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view cell_key);

// xoshiro256** 1.0 (Blackman, Vigna 2018), state filled by four SplitMix64
// outputs from the seed. Doubles take the top 53 bits; normals use the
// cosine branch of Box-Muller. No std:: distributions are involved, so a
// seed produces the same stream on every platform.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next(); }

  std::uint64_t next();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double normal();

 private:
  std::uint64_t s_[4];
};

struct EigRange {
  double lo = 0.1;
  double hi = 10.0;
};

// Haar-distributed orthogonal matrix: QR of a standard-normal matrix with
// the signs of R's diagonal folded into Q.
Eigen::MatrixXd gen_orthogonal(int dim, Rng& rng);

// n x k matrix with orthonormal columns (k <= n).
Eigen::MatrixXd gen_orthonormal_columns(int n, int k, Rng& rng);

// Q diag(lambda) Q^T with lambda_i log-uniform in [lo, hi].
PosDefMatrix gen_posdef(int dim, EigRange range, Rng& rng);

// G G^T with G standard normal; positive semidefinite.
SymMatrix gen_psd(int dim, Rng& rng);

// (G + G^T) / 2 with G standard normal; indefinite in general.
SymMatrix gen_symmetric(int dim, Rng& rng);

}  // namespace opmeans
