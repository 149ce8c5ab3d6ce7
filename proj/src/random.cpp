#include "opmeans/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace opmeans {

namespace {

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

Eigen::MatrixXd normal_matrix(int rows, int cols, Rng& rng) {
  Eigen::MatrixXd g(rows, cols);
  // Row-major fill so the stream order does not depend on Eigen's storage.
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) g(i, j) = rng.normal();
  }
  return g;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view key) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view cell_key) {
  return seed ^ fnv1a64(cell_key);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& s : s_) s = splitmix64(sm);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::MatrixXd gen_orthogonal(int dim, Rng& rng) {
  return gen_orthonormal_columns(dim, dim, rng);
}

Eigen::MatrixXd gen_orthonormal_columns(int n, int k, Rng& rng) {
  if (n < 1 || k < 1 || k > n) {
    throw DimensionError(fmt::format("gen_orthonormal_columns: invalid shape {}x{}", n, k));
  }
  const Eigen::MatrixXd g = normal_matrix(n, k, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (int j = 0; j < k; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

PosDefMatrix gen_posdef(int dim, EigRange range, Rng& rng) {
  if (dim < 1) throw DimensionError("gen_posdef: dim must be at least 1");
  if (!(range.lo > 0.0) || !(range.hi > range.lo)) {
    throw DomainError(fmt::format("gen_posdef: need 0 < lo < hi, got ({}, {})", range.lo, range.hi));
  }
  const double log_lo = std::log(range.lo);
  const double log_span = std::log(range.hi) - log_lo;
  Eigen::VectorXd lambda(dim);
  for (int i = 0; i < dim; ++i) {
    lambda(i) = std::clamp(std::exp(log_lo + log_span * rng.uniform()), range.lo, range.hi);
  }
  if (dim == 1) return PosDefMatrix(SymMatrix::scalar(lambda(0)));
  const Eigen::MatrixXd q = gen_orthogonal(dim, rng);
  return PosDefMatrix(SymMatrix(q * lambda.asDiagonal() * q.transpose()));
}

SymMatrix gen_psd(int dim, Rng& rng) {
  const Eigen::MatrixXd g = normal_matrix(dim, dim, rng);
  return SymMatrix(g * g.transpose());
}

SymMatrix gen_symmetric(int dim, Rng& rng) {
  return SymMatrix(normal_matrix(dim, dim, rng));
}

}  // namespace opmeans
