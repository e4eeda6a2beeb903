#include <doctest.h>

#include <cmath>

#include "vgsec/degree_distribution.hpp"
#include "vgsec/errors.hpp"
#include "vgsec/normal.hpp"
#include "vgsec/rng.hpp"
#include "vgsec/threshold.hpp"

using namespace vgsec;

TEST_CASE("lambda is the smaller root of the quadratic") {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const double c = 0.01 + 0.98 * rng.uniform();
    const std::size_t n = 1 + rng.below(100000);
    const double z = normal_quantile(0.001 + 0.998 * rng.uniform());
    const double nd = static_cast<double>(n);
    const double lam = threshold_lambda(c, n, z);
    const double a = nd + z * z, b = -(2 * c * nd + z * z), k = c * c * nd;
    CHECK(std::abs(a * lam * lam + b * lam + k) <= 1e-9 * (a + std::abs(b) + k));
    const double other = -b / a - lam;
    CHECK(lam <= other + 1e-12);
  }
}

TEST_CASE("lambda is never below c^2 n / (n + z^2)") {
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const double eps = 0.001 + 0.998 * rng.uniform();
    const double c = 0.01 + 0.98 * rng.uniform();
    const std::size_t n = 1 + rng.below(100000);
    const double z = normal_quantile(eps);
    CHECK(threshold_lambda(c, n, z) >= threshold_rhs(c, n, z) - 1e-15);
  }
}

TEST_CASE("threshold verdict on a worked example") {
  const Parameters p{0.05, 0.2, 0.1, 0.0};
  const auto v = threshold_check_with_z(p, DegreeDistribution::regular(0), 100, 0.5, 2.0);
  CHECK(v.rhs == doctest::Approx(25.0 / 104.0));
  CHECK(v.lambda == doctest::Approx((104.0 - std::sqrt(16.0 + 4.0 * 50.0 * 0.5 * 4.0)) / 208.0));
  CHECK(v.lower == doctest::Approx(0.2));
  CHECK(v.upper == doctest::Approx(0.2));
  CHECK(v.sufficient_holds);
  CHECK(v.sufficient_sharp_holds);
  CHECK(v.necessary_holds);

  const auto fails = threshold_check_with_z(Parameters{0.25, 0.002, 0.1, 0.0}, DegreeDistribution::regular(4), 2000, 0.5, 2.0);
  CHECK_FALSE(fails.sufficient_holds);
  CHECK_FALSE(fails.necessary_holds);
}

TEST_CASE("sufficient condition implies the sharp and the necessary one") {
  Rng rng(10);
  for (int i = 0; i < 500; ++i) {
    const Parameters p{0.01 + 0.5 * rng.uniform(), 0.01 + 0.5 * rng.uniform(), 0.3 * rng.uniform(), 0.0};
    const auto d = DegreeDistribution::regular(rng.below(8));
    const auto v = threshold_check(p, d, 10 + rng.below(5000), 0.05 + 0.9 * rng.uniform(), 0.01 + 0.5 * rng.uniform());
    if (v.sufficient_holds) {
      CHECK(v.sufficient_sharp_holds);
      CHECK(v.necessary_holds);
    }
  }
}

TEST_CASE("threshold inputs are validated") {
  const Parameters p;
  const auto d = DegreeDistribution::regular(2);
  CHECK_THROWS_AS(threshold_check(p, d, 100, 0.0, 0.1), DomainError);
  CHECK_THROWS_AS(threshold_check(p, d, 100, 1.0, 0.1), DomainError);
  CHECK_THROWS_AS(threshold_check(p, d, 100, 0.5, 0.0), DomainError);
  CHECK_THROWS_AS(threshold_check(p, d, 0, 0.5, 0.1), DomainError);
}
