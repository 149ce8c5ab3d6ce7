#include <cmath>
#include <vector>

#include "opmeans/inequalities.hpp"
#include "support.hpp"

using namespace opmeans;

namespace {

std::vector<double> values(const ChainReport& r) {
  std::vector<double> out;
  for (const auto& t : r.terms) out.push_back(t(0, 0));
  return out;
}

void check_values(const ChainReport& r, const std::vector<double>& expected) {
  const auto got = values(r);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-9));
}

PosDefMatrix s(double x) { return PosDefMatrix::scalar(x); }

const Weight kHalf(0.5);
const auto kInv = ScalarFunctionSpec::neg_power(1.0);

}  // namespace

TEST_SUITE("inequalities") {

TEST_CASE("theorem ids") {
  for (auto id : {TheoremId::kT21, TheoremId::kC22, TheoremId::kR23, TheoremId::kC24,
                  TheoremId::kR25, TheoremId::kT25, TheoremId::kC27, TheoremId::kR27,
                  TheoremId::kT31, TheoremId::kE18, TheoremId::kT32, TheoremId::kR33}) {
    CHECK(parse_theorem_id(to_string(id)) == id);
  }
  CHECK_THROWS_AS(parse_theorem_id("T99"), ParseError);
}

TEST_CASE("scalar chains") {
  check_values(t21_chain(kInv, s(4), s(1), kHalf, kHalf), {0.4, 0.4193139346887673, 0.5});
  check_values(c22_chain(kInv, s(2), s(1)),
               {1.0 / 3.0, 0.33806170189140666, 0.3535533905932738, 0.375, 0.75});
  check_values(c24_chain(ScalarFunctionSpec::power(0.5), s(4), s(1), kHalf, kHalf),
               {std::sqrt(2.0), 1.5442953096938306, std::sqrt(2.5)});
  check_values(t25_amgh_chain(s(4), s(1), kHalf, kHalf),
               {1.6, 1.885618083164127, 2.0, 2.121320343559643, 2.5});
  check_values(r23_log_convexity(kInv, s(4), s(1), kHalf), {0.4, 0.5});
}

TEST_CASE("harmonic chain for f = 1/t is tight") {
  const auto r = r25_harmonic_chain(kInv, s(4), s(1), kHalf, kHalf, PathSpec::geometric());
  check_values(r, {0.4, 0.4, 0.4, 0.5, 0.5});
  CHECK(r.all_hold);
  CHECK(r.links.size() == 3);
  CHECK(r.observations.size() == 1);
}

TEST_CASE("triangle chains") {
  const auto c = c27_triangle(SymMatrix::scalar(3), SymMatrix::scalar(-1), UnrestrictedWeight(0.0));
  check_values(c, {2, 2, 4});
  CHECK(c.all_hold);

  const auto r = r27_reverse_triangle(SymMatrix::scalar(3), SymMatrix::scalar(1), UnrestrictedWeight(0.5));
  check_values(r, {2, 2, 2, -2, -0.5, 2});
  CHECK(r.links.size() == 4);
  CHECK(r.all_hold);

  // outside [0, 1] the second link is only observed
  const auto wide = c27_triangle(SymMatrix::scalar(3), SymMatrix::scalar(-1), UnrestrictedWeight(2.0));
  CHECK(wide.links.size() == 1);
  CHECK(wide.observations.size() == 1);

  const auto r2 = r27_reverse_triangle(SymMatrix::scalar(1), SymMatrix::scalar(0), UnrestrictedWeight(2.0));
  CHECK(r2.links.size() == 2);
  CHECK(r2.observations.size() == 2);
  CHECK(r2.all_hold);
  CHECK_FALSE(r2.observations[0].holds);
}

TEST_CASE("Ando chains on diagonal inputs") {
  const auto t31 = t31_ando(PositiveLinearMapSpec::block_sum(2, 1), PosDefMatrix::diagonal({1, 4}),
                            PosDefMatrix::diagonal({4, 1}), kHalf, kHalf);
  check_values(t31, {4, 3 * std::sqrt(2.0), 5});
  const std::vector<PosDefMatrix> as{s(1), s(4)}, bs{s(4), s(1)};
  check_values(e18_sums(as, bs, kHalf, kHalf), {4, 3 * std::sqrt(2.0), 5});
}

TEST_CASE("sums agree with the block-sum map on the block-diagonal embedding") {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const int d = 1 + t % 3, m = 1 + t % 4;
    std::vector<PosDefMatrix> as, bs;
    for (int j = 0; j < m; ++j) {
      as.push_back(gen_posdef(d, {0.1, 10.0}, rng));
      bs.push_back(gen_posdef(d, {0.1, 10.0}, rng));
    }
    const Weight al(rng.uniform()), be(rng.uniform());
    const auto lhs = e18_sums(as, bs, al, be);
    const auto rhs = t31_ando(PositiveLinearMapSpec::block_sum(m, d), block_diagonal(as),
                              block_diagonal(bs), al, be);
    REQUIRE(lhs.terms.size() == rhs.terms.size());
    for (std::size_t i = 0; i < lhs.terms.size(); ++i) {
      CHECK(testing::rel_dist(lhs.terms[i], rhs.terms[i]) < 1e-9);
    }
  }
  CHECK_THROWS_AS(e18_sums(std::vector<PosDefMatrix>{}, std::vector<PosDefMatrix>{}, kHalf, kHalf),
                  DimensionError);
  CHECK_THROWS_AS(e18_sums(std::vector<PosDefMatrix>{s(1)}, std::vector<PosDefMatrix>{s(1), s(2)}, kHalf, kHalf),
                  DimensionError);
}

TEST_CASE("r33 weight and the Uhlmann special case") {
  CHECK(r33_weight(Weight(0.5), Weight(0.5), Weight(0.25), Weight(0.75)).value() == doctest::Approx(0.5));
  CHECK(r33_weight(Weight(0.3), Weight(0.6), Weight(0.0), Weight(1.0)).value() == doctest::Approx(0.3));
  const auto phi = PositiveLinearMapSpec::weighted_trace(PosDefMatrix::diagonal({0.5, 0.5}));
  const auto a = PosDefMatrix::diagonal({1, 4});
  const auto b = PosDefMatrix::diagonal({9, 1});
  check_values(t32_uhlmann(phi, a, b, PathSpec::geometric(), kHalf, kHalf),
               {2.5, 2.7452881542509449, std::sqrt(12.5)});
  check_values(r33_general(phi, a, b, PathSpec::arithmetic(), kHalf, kHalf, Weight(0.25), Weight(0.75)),
               {3.75, 3.75, 3.75});
  const auto u = t32_uhlmann(phi, a, b, PathSpec(0.5), Weight(0.3), Weight(0.6));
  const auto g = r33_general(phi, a, b, PathSpec(0.5), Weight(0.3), Weight(0.6), Weight(0.0), Weight(1.0));
  CHECK(values(u) == values(g));
}

TEST_CASE("hypothesis enforcement") {
  const auto e = ScalarFunctionSpec::exp_neg();
  CHECK_THROWS_AS(t21_chain(e, s(4), s(1), kHalf, kHalf), HypothesisError);
  CHECK_THROWS_AS(t21_chain(ScalarFunctionSpec::power(0.5), s(4), s(1), kHalf, kHalf), HypothesisError);
  CHECK_THROWS_AS(c24_chain(kInv, s(4), s(1), kHalf, kHalf), HypothesisError);
  CHECK_THROWS_AS(c22_chain(e, s(4), s(1)), HypothesisError);
  CHECK_THROWS_AS(r23_log_convexity(e, s(4), s(1), kHalf), HypothesisError);
  CHECK_THROWS_AS(r25_harmonic_chain(e, s(4), s(1), kHalf, kHalf, PathSpec::geometric()), HypothesisError);
  CHECK_NOTHROW(t21_chain(e, s(4), s(1), kHalf, kHalf, Hypothesis::kBypass));
}

TEST_CASE("exp_neg breaks log-convexity on a fixed pair") {
  const auto a = PosDefMatrix::from_rows({{2, 1}, {1, 2}});
  const auto b = PosDefMatrix::from_rows({{4, 1}, {1, 2}});
  bool broken = false;
  for (double w : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const auto r = r23_log_convexity(ScalarFunctionSpec::exp_neg(), a, b, Weight(w), Hypothesis::kBypass);
    broken = broken || !r.all_hold;
  }
  CHECK(broken);
}

TEST_CASE("dimension and map mismatches") {
  CHECK_THROWS_AS(t21_chain(kInv, PosDefMatrix::identity(2), s(1), kHalf, kHalf), DimensionError);
  CHECK_THROWS_AS(t31_ando(PositiveLinearMapSpec::pinching({1, 1}), PosDefMatrix::identity(3),
                           PosDefMatrix::identity(3), kHalf, kHalf),
                  DimensionError);
}

TEST_CASE("evaluate validates the instance") {
  TheoremInstance in;
  in.id = TheoremId::kT25;
  in.a_list = {SymMatrix::scalar(4)};
  in.b_list = {SymMatrix::scalar(1)};
  in.alpha = 0.5;
  in.beta = 0.5;
  check_values(evaluate(in), {1.6, 1.885618083164127, 2.0, 2.121320343559643, 2.5});

  auto missing = in;
  missing.beta.reset();
  CHECK_THROWS_AS(evaluate(missing), DomainError);

  auto extra = in;
  extra.function = kInv;
  CHECK_THROWS_AS(evaluate(extra), DomainError);

  auto out_of_range = in;
  out_of_range.alpha = 1.5;
  CHECK_THROWS_AS(evaluate(out_of_range), DomainError);

  auto indefinite = in;
  indefinite.a_list = {SymMatrix::scalar(-1)};
  CHECK_THROWS_AS(evaluate(indefinite), NotPositiveDefinite);

  TheoremInstance tri;
  tri.id = TheoremId::kC27;
  tri.a_list = {SymMatrix::scalar(3)};
  tri.b_list = {SymMatrix::scalar(-1)};
  tri.alpha = -2.0;
  CHECK(evaluate(tri).all_hold);
}

TEST_CASE("random chains hold") {
  Rng rng(43);
  const auto phi = PositiveLinearMapSpec::pinching({2, 1});
  for (int t = 0; t < 30; ++t) {
    const auto a = gen_posdef(3, {0.1, 10.0}, rng);
    const auto b = gen_posdef(3, {0.1, 10.0}, rng);
    const Weight al(rng.uniform()), be(rng.uniform()), ga(rng.uniform()), de(rng.uniform());
    CHECK(t21_chain(ScalarFunctionSpec::neg_power(0.5), a, b, al, be).all_hold);
    CHECK(c22_chain(ScalarFunctionSpec::shifted_inverse(1, 1), a, b).all_hold);
    CHECK(c24_chain(ScalarFunctionSpec::log1p(), a, b, al, be).all_hold);
    CHECK(r25_harmonic_chain(kInv, a, b, al, be, PathSpec(0.5)).all_hold);
    CHECK(t25_amgh_chain(a, b, al, be).all_hold);
    CHECK(t31_ando(phi, a, b, al, be).all_hold);
    CHECK(r33_general(phi, a, b, PathSpec(-0.5), al, be, ga, de).all_hold);
    const SymMatrix x = gen_symmetric(3, rng), y = gen_symmetric(3, rng);
    CHECK(c27_triangle(x, y, UnrestrictedWeight(al.value())).all_hold);
    CHECK(r27_reverse_triangle(x, y, UnrestrictedWeight(2 * al.value() - 1)).all_hold);
  }
}

}
