#include "opmeans/random.hpp"
#include "support.hpp"

using namespace opmeans;
using testing::max_abs_diff;

TEST_SUITE("random") {

TEST_CASE("splitmix64 reference values") {
  std::uint64_t state = 1234567;
  CHECK(splitmix64(state) == 6457827717110365317ULL);
  CHECK(splitmix64(state) == 3203168211198807973ULL);
  CHECK(splitmix64(state) == 9817491932198370423ULL);
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  CHECK(derive_seed(42, "a") == (42ULL ^ 0xaf63dc4c8601ec8cULL));
}

TEST_CASE("xoshiro256** seeded through splitmix64") {
  Rng rng(42);
  CHECK(rng.next() == 1546998764402558742ULL);
  CHECK(rng.next() == 6990951692964543102ULL);
  CHECK(rng.next() == 12544586762248559009ULL);
  Rng again(42);
  CHECK(again.uniform() == 0.08386297105988216);
}

TEST_CASE("streams are reproducible and distinct") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
}

TEST_CASE("uniform and normal moments") {
  Rng rng(7);
  const int n = 100000;
  double su = 0, sn = 0, sn2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK_FALSE((u < 0.0 || u >= 1.0));
    su += u;
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
  }
  CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(std::abs(sn / n) < 0.02);
  CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("gen_posdef") {
  Rng rng(99);
  const auto one = gen_posdef(1, {0.1, 10.0}, rng);
  CHECK(one(0, 0) >= 0.1);
  CHECK(one(0, 0) <= 10.0);

  Rng r1(5), r2(5);
  CHECK(gen_posdef(3, {0.1, 10.0}, r1).matrix() == gen_posdef(3, {0.1, 10.0}, r2).matrix());

  for (int t = 0; t < 1000; ++t) {
    const auto m = gen_posdef(4, {0.1, 10.0}, rng);
    const auto ev = eigenvalues(m);
    CHECK(is_psd(m));
    CHECK(ev(3) / ev(0) <= 100.0 * (1 + 1e-9));
  }
  CHECK_THROWS_AS(gen_posdef(0, {0.1, 10.0}, rng), DimensionError);
  CHECK_THROWS_AS(gen_posdef(2, {1.0, 0.5}, rng), DomainError);
  CHECK_THROWS_AS(gen_posdef(2, {0.0, 1.0}, rng), DomainError);
}

TEST_CASE("orthogonal factors") {
  Rng rng(3);
  for (int n = 1; n <= 8; ++n) {
    const auto q = gen_orthogonal(n, rng);
    CHECK(max_abs_diff(q.transpose() * q, Eigen::MatrixXd::Identity(n, n)) < 1e-12);
    const int k = (n + 1) / 2;
    const auto v = gen_orthonormal_columns(n, k, rng);
    CHECK(v.rows() == n);
    CHECK(v.cols() == k);
    CHECK(max_abs_diff(v.transpose() * v, Eigen::MatrixXd::Identity(k, k)) < 1e-12);
  }
  CHECK_THROWS_AS(gen_orthonormal_columns(2, 3, rng), DimensionError);
}

TEST_CASE("gen_psd and gen_symmetric") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) CHECK(is_psd(gen_psd(1 + t % 6, rng)));
  bool indefinite = false;
  for (int t = 0; t < 50; ++t) indefinite = indefinite || !is_psd(gen_symmetric(3, rng));
  CHECK(indefinite);
}

}
