#include "opmeans/oracle.hpp"

#include <cmath>

#include <fmt/format.h>

#include "opmeans/inequalities.hpp"

namespace opmeans {

namespace {

PosDefMatrix s(double x) { return PosDefMatrix::scalar(x); }

nlohmann::json chain_values(const ChainReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : r.terms) out.push_back(t.matrix()(0, 0));
  return out;
}

nlohmann::json flat(const SymMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.matrix().rows(); ++i) {
    for (Eigen::Index j = 0; j < m.matrix().cols(); ++j) out.push_back(m.matrix()(i, j));
  }
  return out;
}

}  // namespace

nlohmann::json compute_oracle_fixtures() {
  const auto inv = ScalarFunctionSpec::neg_power(1.0);
  const auto sqrt = ScalarFunctionSpec::power(0.5);
  const Weight half(0.5);
  nlohmann::json out;

  nlohmann::json means = nlohmann::json::array();
  for (double u : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    means.push_back(power_mean(s(1), s(4), PathSpec(u), half).matrix()(0, 0));
  }
  out["scalar_power_means_1_4"] = means;
  out["geometric_mean_quarter_2_8"] = {geometric_mean(s(2), s(8), Weight(0.25)).matrix()(0, 0)};

  const auto a = PosDefMatrix::from_rows({{2, 1}, {1, 1}});
  const auto b = PosDefMatrix::from_rows({{1, 0}, {0, 3}});
  out["geometric_mean_2x2"] = flat(geometric_mean(a, b, half));
  out["geometric_mean_2x2_third"] = flat(geometric_mean(a, b, Weight(1.0 / 3.0)));
  out["harmonic_mean_2x2"] = flat(harmonic_mean(a, b, Weight(0.25)));
  out["power_mean_2x2_half"] = flat(power_mean(a, b, PathSpec(0.5), half));

  out["T21_inverse_4_1"] = chain_values(t21_chain(inv, s(4), s(1), half, half));
  out["C22_inverse_2_1"] = chain_values(c22_chain(inv, s(2), s(1)));
  out["R23_inverse_4_1"] = chain_values(r23_log_convexity(inv, s(4), s(1), Weight(0.25)));
  out["C24_sqrt_4_1"] = chain_values(c24_chain(sqrt, s(4), s(1), half, half));
  out["R25_inverse_4_1"] =
      chain_values(r25_harmonic_chain(inv, s(4), s(1), half, half, PathSpec::geometric()));
  out["T25_1_4"] = chain_values(t25_amgh_chain(s(1), s(4), half, half));
  out["T25_4_1"] = chain_values(t25_amgh_chain(s(4), s(1), half, half));
  out["C27_3_m1_0"] = chain_values(c27_triangle(SymMatrix::scalar(3), SymMatrix::scalar(-1),
                                                UnrestrictedWeight(0.0)));
  out["R27_3_1_half"] = chain_values(r27_reverse_triangle(
      SymMatrix::scalar(3), SymMatrix::scalar(1), UnrestrictedWeight(0.5)));
  out["T31_block_sum_diag"] = chain_values(t31_ando(PositiveLinearMapSpec::block_sum(2, 1),
                                                    PosDefMatrix::diagonal({1, 4}),
                                                    PosDefMatrix::diagonal({4, 1}), half, half));
  const std::vector<PosDefMatrix> as{s(1), s(4)};
  const std::vector<PosDefMatrix> bs{s(4), s(1)};
  out["E18_pairs"] = chain_values(e18_sums(as, bs, half, half));
  out["R33_trace_diag"] = chain_values(r33_general(
      PositiveLinearMapSpec::weighted_trace(PosDefMatrix::diagonal({0.5, 0.5}), "half"),
      PosDefMatrix::diagonal({1, 4}), PosDefMatrix::diagonal({9, 1}), PathSpec::arithmetic(),
      half, half, Weight(0.25), Weight(0.75)));
  out["T32_trace_diag"] = chain_values(t32_uhlmann(
      PositiveLinearMapSpec::weighted_trace(PosDefMatrix::diagonal({0.5, 0.5}), "half"),
      PosDefMatrix::diagonal({1, 4}), PosDefMatrix::diagonal({9, 1}), PathSpec::geometric(), half,
      half));
  return out;
}

std::vector<FixtureMismatch> compare_fixtures(const nlohmann::json& expected,
                                              const nlohmann::json& actual, double atol) {
  std::vector<FixtureMismatch> out;
  for (const auto& [name, want] : expected.items()) {
    if (!actual.contains(name)) {
      out.push_back({name, "missing"});
      continue;
    }
    const auto& got = actual.at(name);
    if (!want.is_array() || !got.is_array() || want.size() != got.size()) {
      out.push_back({name, fmt::format("length {} != {}", got.size(), want.size())});
      continue;
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
      const double w = want[i].get<double>();
      const double g = got[i].get<double>();
      if (!(std::abs(w - g) <= atol)) {
        out.push_back({name, fmt::format("[{}] got {:.17g}, expected {:.17g}", i, g, w)});
      }
    }
  }
  return out;
}

}  // namespace opmeans
