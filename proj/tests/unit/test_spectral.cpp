#include <cmath>
#include <limits>

#include "opmeans/spectral.hpp"
#include "support.hpp"

using namespace opmeans;
using testing::max_abs_diff;

TEST_SUITE("spectral") {

TEST_CASE("SymMatrix symmetrizes and validates") {
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 4, 3;
  const SymMatrix s(m);
  CHECK(s(0, 1) == 3.0);
  CHECK(s(1, 0) == s(0, 1));

  CHECK_THROWS_AS(SymMatrix(Eigen::MatrixXd(2, 3)), DimensionError);
  CHECK_THROWS_AS(SymMatrix(Eigen::MatrixXd(0, 0)), DimensionError);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(SymMatrix{bad}, DomainError);
  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}, {3}}), DimensionError);
  CHECK_THROWS_AS(SymMatrix::identity(2) + SymMatrix::identity(3), DimensionError);
}

TEST_CASE("PosDefMatrix enforces the relative floor") {
  CHECK_NOTHROW(PosDefMatrix::diagonal({1.0, 1e-9}));
  CHECK_THROWS_AS(PosDefMatrix::diagonal({1.0, 1e-11}), NotPositiveDefinite);
  CHECK_THROWS_AS(PosDefMatrix::diagonal({1.0, 0.0}), NotPositiveDefinite);
  CHECK_THROWS_AS(PosDefMatrix::diagonal({1.0, -1.0}), NotPositiveDefinite);
  CHECK_THROWS_AS(PosDefMatrix::scalar(0.0), NotPositiveDefinite);
  CHECK_NOTHROW(PosDefMatrix::scalar(1e-300));
}

TEST_CASE("eigh of a diagonal matrix") {
  const auto es = eigh(SymMatrix::diagonal({3.0, 1.0, 2.0}));
  CHECK(es.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(es.eigenvalues(1) == doctest::Approx(2.0));
  CHECK(es.eigenvalues(2) == doctest::Approx(3.0));
  CHECK(es.basis(1, 0) == doctest::Approx(1.0));
  CHECK(es.basis(2, 1) == doctest::Approx(1.0));
  CHECK(es.basis(0, 2) == doctest::Approx(1.0));
}

TEST_CASE("eigh of [[2,1],[1,2]]") {
  const auto es = eigh(SymMatrix::from_rows({{2, 1}, {1, 2}}));
  CHECK(es.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(es.eigenvalues(1) == doctest::Approx(3.0));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(es.basis(0, 1) == doctest::Approx(r));
  CHECK(es.basis(1, 1) == doctest::Approx(r));
  // first maximal component positive
  CHECK(es.basis(0, 0) == doctest::Approx(r));
  CHECK(es.basis(1, 0) == doctest::Approx(-r));
}

TEST_CASE("eigh with a repeated eigenvalue") {
  const auto es = eigh(SymMatrix::identity(3));
  CHECK(max_abs_diff(es.reconstruct(), Eigen::MatrixXd::Identity(3, 3)) < 1e-14);
  CHECK(max_abs_diff(es.basis.transpose() * es.basis, Eigen::MatrixXd::Identity(3, 3)) < 1e-14);
}

TEST_CASE("eigh reconstruction and orthogonality on random matrices") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 8;
    const SymMatrix m = gen_symmetric(n, rng);
    const auto es = eigh(m);
    const double scale = std::max(m.matrix().norm(), 1.0);
    CHECK(max_abs_diff(es.reconstruct(), m.matrix()) <= kReconTol * scale);
    CHECK(max_abs_diff(es.basis.transpose() * es.basis, Eigen::MatrixXd::Identity(n, n)) <=
          kReconTol);
    for (int i = 1; i < n; ++i) CHECK(es.eigenvalues(i - 1) <= es.eigenvalues(i));
    CHECK(max_abs_diff(eigenvalues(m), es.eigenvalues) <= 1e-12 * scale);
  }
}

TEST_CASE("apply_scalar") {
  const auto a = PosDefMatrix::diagonal({4.0, 9.0});
  const auto r = apply_scalar(a, [](double x) { return std::sqrt(x); });
  CHECK(r(0, 0) == doctest::Approx(2.0));
  CHECK(r(1, 1) == doctest::Approx(3.0));
  CHECK(std::abs(r(0, 1)) < 1e-15);

  const auto es = eigh(SymMatrix::diagonal({-1.0, 1.0}));
  CHECK_THROWS_AS(apply_scalar(es, [](double x) { return std::sqrt(x); }), DomainError);
  CHECK_THROWS_AS(apply_scalar(es, [](double x) { return std::log(x); }), DomainError);
}

TEST_CASE("frac_power") {
  const auto a = PosDefMatrix::from_rows({{2, 1}, {1, 2}});
  CHECK(frac_power(a, 0.0).matrix() == Eigen::MatrixXd::Identity(2, 2));
  CHECK(frac_power(a, 1.0).matrix() == a.matrix());
  const auto h = frac_power(a, 0.5);
  CHECK(max_abs_diff(h.matrix() * h.matrix(), a.matrix()) < 1e-13);
  CHECK(max_abs_diff(frac_power(a, -1.0).matrix(), inverse(a).matrix()) < 1e-13);

  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto m = gen_posdef(1 + t % 5, {0.1, 10.0}, rng);
    const double s = 0.1 + 0.8 * rng.uniform();
    const double u = 0.1 + 0.8 * rng.uniform();
    const Eigen::MatrixXd lhs = frac_power(m, s).matrix() * frac_power(m, u).matrix();
    CHECK(max_abs_diff(lhs, frac_power(m, s + u).matrix()) <= 1e-10 * 10.0);
  }
}

TEST_CASE("congruence") {
  Eigen::MatrixXd c(2, 2);
  c << 1, 2, 0, 1;
  const auto r = congruence(c, SymMatrix::identity(2));
  CHECK(max_abs_diff(r.matrix(), c.transpose() * c) < 1e-15);
  Eigen::MatrixXd singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK_THROWS_AS(congruence(singular, SymMatrix::identity(2)), SingularMatrix);
  CHECK_THROWS_AS(congruence(Eigen::MatrixXd::Identity(3, 3), SymMatrix::identity(2)),
                  DimensionError);
  const PosDefMatrix p = congruence(c, PosDefMatrix::identity(2));
  CHECK(p.dim() == 2);
}

TEST_CASE("inverse") {
  const auto a = PosDefMatrix::from_rows({{4, 1}, {1, 3}});
  CHECK(max_abs_diff(inverse(a).matrix() * a.matrix(), Eigen::MatrixXd::Identity(2, 2)) < 1e-14);
}

}
