#include "opmeans/positive_maps.hpp"

#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "opmeans/loewner.hpp"
#include "opmeans/serialize.hpp"
#include "text.hpp"

namespace opmeans {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// V^T V = c I within this relative tolerance counts as scaled-unital.
constexpr double kUnitalTol = 1e-10;

}  // namespace

PositiveLinearMapSpec PositiveLinearMapSpec::compression(Eigen::MatrixXd v, std::string label) {
  if (v.rows() < 1 || v.cols() < 1 || v.cols() > v.rows()) {
    throw DimensionError(
        fmt::format("compression: V must be n x k with 1 <= k <= n, got {}x{}", v.rows(), v.cols()));
  }
  if (!v.allFinite()) throw DomainError("compression: V has a non-finite entry");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(v);
  if (lu.rank() != v.cols()) {
    throw SingularMatrix(fmt::format("compression: V has rank {} < {} columns", lu.rank(), v.cols()));
  }
  const int n = static_cast<int>(v.rows());
  const int k = static_cast<int>(v.cols());
  return {Compression{std::move(v), std::move(label)}, n, k};
}

PositiveLinearMapSpec PositiveLinearMapSpec::pinching(std::vector<int> block_sizes) {
  if (block_sizes.empty()) throw DimensionError("pinching: no blocks");
  for (int b : block_sizes) {
    if (b < 1) throw DimensionError(fmt::format("pinching: block size {} < 1", b));
  }
  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  return {Pinching{std::move(block_sizes)}, n, n};
}

PositiveLinearMapSpec PositiveLinearMapSpec::block_sum(int n_blocks, int block_dim) {
  if (n_blocks < 1 || block_dim < 1) {
    throw DimensionError(fmt::format("block_sum: invalid shape {}x{}", n_blocks, block_dim));
  }
  return {BlockSum{n_blocks, block_dim}, n_blocks * block_dim, block_dim};
}

PositiveLinearMapSpec PositiveLinearMapSpec::weighted_trace(PosDefMatrix w, std::string label) {
  const int n = w.dim();
  return {WeightedTrace{std::move(w), std::move(label)}, n, 1};
}

PositiveLinearMapSpec PositiveLinearMapSpec::parse(std::string_view input) {
  const std::size_t colon = input.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(fmt::format("map spec '{}' has no ':'", input), input.size());
  }
  const std::string_view name = input.substr(0, colon);
  const std::string_view rest = input.substr(colon + 1);
  const std::size_t base = colon + 1;
  if (rest.empty()) throw ParseError("map spec has an empty argument", base);

  auto wrap = [&](auto make) {
    try {
      return make();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), base);
    }
  };

  if (name == "pinching") {
    std::vector<int> blocks;
    for (const auto& tok : text::split(rest, ',', base)) {
      blocks.push_back(text::parse_int(tok, "pinching block size"));
    }
    return wrap([&] { return pinching(blocks); });
  }
  if (name == "block_sum") {
    const auto parts = text::split(rest, 'x', base);
    if (parts.size() != 2) throw ParseError("block_sum expects <n_blocks>x<block_dim>", base);
    const int m = text::parse_int(parts[0], "block_sum block count");
    const int d = text::parse_int(parts[1], "block_sum block dimension");
    return wrap([&] { return block_sum(m, d); });
  }
  if (name == "compression") {
    return wrap([&] {
      const std::string path(rest);
      return compression(rect_matrix_from_json(read_json_file(path)), path);
    });
  }
  if (name == "weighted_trace") {
    return wrap([&] {
      const std::string path(rest);
      return weighted_trace(PosDefMatrix(sym_matrix_from_json(read_json_file(path))), path);
    });
  }
  throw ParseError(fmt::format("unknown map '{}'", name), 0);
}

PositiveLinearMapSpec::Kind PositiveLinearMapSpec::kind() const {
  return std::visit(overloaded{
                        [](const Compression&) { return Kind::kCompression; },
                        [](const Pinching&) { return Kind::kPinching; },
                        [](const BlockSum&) { return Kind::kBlockSum; },
                        [](const WeightedTrace&) { return Kind::kWeightedTrace; },
                    },
                    map_);
}

bool PositiveLinearMapSpec::experimental() const {
  const auto* c = std::get_if<Compression>(&map_);
  if (c == nullptr) return false;
  const Eigen::MatrixXd gram = c->v.transpose() * c->v;
  const double scale = gram.diagonal().mean();
  const auto k = gram.rows();
  return (gram - scale * Eigen::MatrixXd::Identity(k, k)).cwiseAbs().maxCoeff() >
         kUnitalTol * scale;
}

std::string PositiveLinearMapSpec::to_string() const {
  return std::visit(
      overloaded{
          [](const Compression& c) {
            return c.label.empty() ? fmt::format("compression:<{}x{}>", c.v.rows(), c.v.cols())
                                   : "compression:" + c.label;
          },
          [](const Pinching& p) { return fmt::format("pinching:{}", fmt::join(p.blocks, ",")); },
          [](const BlockSum& b) { return fmt::format("block_sum:{}x{}", b.n_blocks, b.block_dim); },
          [](const WeightedTrace& w) {
            return w.label.empty() ? fmt::format("weighted_trace:<{}>", w.w.dim())
                                   : "weighted_trace:" + w.label;
          },
      },
      map_);
}

const Eigen::MatrixXd& PositiveLinearMapSpec::compression_matrix() const {
  const auto* c = std::get_if<Compression>(&map_);
  if (c == nullptr) throw Error("map is not a compression");
  return c->v;
}

const std::vector<int>& PositiveLinearMapSpec::pinching_blocks() const {
  const auto* p = std::get_if<Pinching>(&map_);
  if (p == nullptr) throw Error("map is not a pinching");
  return p->blocks;
}

const PosDefMatrix& PositiveLinearMapSpec::trace_weight() const {
  const auto* w = std::get_if<WeightedTrace>(&map_);
  if (w == nullptr) throw Error("map is not a weighted trace");
  return w->w;
}

SymMatrix apply_map(const PositiveLinearMapSpec& phi, const SymMatrix& x) {
  if (x.dim() != phi.in_dim()) {
    throw DimensionError(fmt::format("apply_map: {} expects dimension {}, got {}", phi.to_string(),
                                     phi.in_dim(), x.dim()));
  }
  const Eigen::MatrixXd& m = x.matrix();
  return std::visit(
      overloaded{
          [&](const PositiveLinearMapSpec::Compression& c) {
            return SymMatrix(c.v.transpose() * m * c.v);
          },
          [&](const PositiveLinearMapSpec::Pinching& p) {
            Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.rows(), m.cols());
            Eigen::Index start = 0;
            for (int b : p.blocks) {
              out.block(start, start, b, b) = m.block(start, start, b, b);
              start += b;
            }
            return SymMatrix(out);
          },
          [&](const PositiveLinearMapSpec::BlockSum& s) {
            Eigen::MatrixXd out = Eigen::MatrixXd::Zero(s.block_dim, s.block_dim);
            for (int j = 0; j < s.n_blocks; ++j) {
              out += m.block(j * s.block_dim, j * s.block_dim, s.block_dim, s.block_dim);
            }
            return SymMatrix(out);
          },
          [&](const PositiveLinearMapSpec::WeightedTrace& w) {
            return SymMatrix::scalar((m * w.w.matrix()).trace());
          },
      },
      phi.map_);
}

PosDefMatrix apply_map_posdef(const PositiveLinearMapSpec& phi, const PosDefMatrix& x) {
  try {
    return PosDefMatrix(apply_map(phi, x.sym()));
  } catch (const NotPositiveDefinite& e) {
    throw NotPositiveDefinite(
        fmt::format("image under {} is not positive definite: {}", phi.to_string(), e.what()));
  }
}

bool check_positivity(const LinearMap& phi, int in_dim, int trials, Rng& rng) {
  if (trials < 1) throw DomainError("check_positivity: trials must be at least 1");
  for (int t = 0; t < trials; ++t) {
    SymMatrix p = SymMatrix::zero(in_dim);
    if (t % 2 == 0) {
      p = gen_psd(in_dim, rng);
    } else {
      Eigen::VectorXd v(in_dim);
      for (int i = 0; i < in_dim; ++i) v(i) = rng.normal();
      p = SymMatrix(v * v.transpose());
    }
    if (!is_psd(phi(p))) return false;
  }
  return true;
}

bool check_positivity(const PositiveLinearMapSpec& phi, int trials, Rng& rng) {
  return check_positivity([&phi](const SymMatrix& x) { return apply_map(phi, x); },
                          phi.in_dim(), trials, rng);
}

}  // namespace opmeans
