#include "opmeans/loewner.hpp"
#include "support.hpp"

using namespace opmeans;

TEST_SUITE("loewner") {

TEST_CASE("loewner_leq basics") {
  const auto v = loewner_leq(SymMatrix::diagonal({1, 2}), SymMatrix::diagonal({2, 3}));
  CHECK(v.holds);
  CHECK(v.gap == doctest::Approx(1.0));
  CHECK(v.scale == doctest::Approx(3.0));

  const auto w = loewner_leq(SymMatrix::from_rows({{1, 0}, {0, 1}}), SymMatrix::from_rows({{2, 1}, {1, 1}}));
  CHECK_FALSE(w.holds);
  CHECK(w.gap < 0.0);

  CHECK(loewner_leq(SymMatrix::identity(2), SymMatrix::identity(2)).holds);
  CHECK_THROWS_AS(loewner_leq(SymMatrix::identity(2), SymMatrix::identity(3)), DimensionError);
}

TEST_CASE("tolerance is relative to the scale") {
  const double s = 1e6;
  const auto x = SymMatrix::scalar(s);
  CHECK(loewner_leq(x, SymMatrix::scalar(s - 0.5 * kOrderTol * s)).holds);
  CHECK_FALSE(loewner_leq(x, SymMatrix::scalar(s - 2.0 * kOrderTol * s)).holds);
  CHECK(loewner_leq(SymMatrix::scalar(0.0), SymMatrix::scalar(-0.5e-8)).holds);
}

TEST_CASE("chains") {
  const auto r = check_scalar_chain({1, 2, 2, 3});
  CHECK(r.links.size() == 3);
  CHECK(r.all_hold);
  CHECK(r.weakest_gap == doctest::Approx(0.0));
  CHECK(r.links[2].lhs == 2);
  CHECK(r.links[2].rhs == 3);

  const auto bad = check_scalar_chain({1, 3, 2});
  CHECK_FALSE(bad.all_hold);
  CHECK(bad.weakest_gap == doctest::Approx(-1.0 / 3.0));

  CHECK_THROWS_AS(check_scalar_chain({1}), DimensionError);
  CHECK_THROWS_AS(check_chain(std::vector<SymMatrix>{}), DimensionError);
}

TEST_CASE("demote and concat") {
  auto r = check_scalar_chain({1, 3, 2});
  demote_link(r, 1);
  CHECK(r.links.size() == 1);
  CHECK(r.observations.size() == 1);
  CHECK(r.all_hold);
  CHECK_THROWS_AS(demote_link(r, 5), DimensionError);

  const auto joined = concat_chains(check_scalar_chain({0, 1}), check_scalar_chain({5, 4}));
  CHECK(joined.terms.size() == 4);
  CHECK(joined.links.size() == 2);
  CHECK(joined.links[1].lhs == 2);
  CHECK(joined.links[1].rhs == 3);
  CHECK_FALSE(joined.all_hold);
}

TEST_CASE("reflexive, transitive and antisymmetric on random samples") {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 6;
    const SymMatrix x = gen_symmetric(n, rng);
    const SymMatrix y = x + gen_psd(n, rng);
    const SymMatrix z = y + gen_psd(n, rng);
    CHECK(loewner_leq(x, x).holds);
    REQUIRE(loewner_leq(x, y).holds);
    REQUIRE(loewner_leq(y, z).holds);
    CHECK(loewner_leq(x, z).holds);
    if (loewner_leq(y, x).holds) CHECK(testing::rel_dist(x, y) < 1e-7);
  }
}

TEST_CASE("congruence preserves the verdict") {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 4;
    const SymMatrix x = gen_symmetric(n, rng);
    const SymMatrix y = t % 2 == 0 ? x + gen_psd(n, rng) : gen_symmetric(n, rng);
    const Eigen::MatrixXd c = gen_orthogonal(n, rng) * gen_posdef(n, {0.5, 2.0}, rng).matrix();
    const auto before = loewner_leq(x, y);
    const auto after = loewner_leq(congruence(c, x), congruence(c, y));
    if (std::abs(before.normalized_gap()) > 1e-6) CHECK(before.holds == after.holds);
  }
}

TEST_CASE("operator_norm and is_psd") {
  CHECK(operator_norm(SymMatrix::diagonal({-3, 2})) == doctest::Approx(3.0));
  CHECK(operator_norm(SymMatrix::scalar(-2.0)) == 2.0);
  CHECK(is_psd(SymMatrix::diagonal({0, 1})));
  CHECK_FALSE(is_psd(SymMatrix::diagonal({-1e-3, 1})));
}

}
