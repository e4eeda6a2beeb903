#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vgsec/errors.hpp"
#include "vgsec/normal.hpp"

using namespace vgsec;

TEST_CASE("normal quantile matches a high-precision inversion at 20 points") {
  const double eps[] = {1e-9, 1e-6, 1e-4, 0.001, 0.005, 0.01, 0.025, 0.05, 0.1,  0.159,
                        0.2,  0.3,  0.4,  0.45,  0.5,   0.6,  0.75,  0.9,  0.99, 0.999999};
  for (double e : eps) {
    const double want = oracle::quantile(e);
    CHECK(std::abs(normal_quantile(e) - want) <= 1e-6);
  }
  CHECK(normal_quantile(0.5) == 0.0);
  CHECK(normal_quantile(0.025) == doctest::Approx(1.959963984540054).epsilon(1e-12));
}

TEST_CASE("normal cdf matches the series") {
  for (double x = -6.0; x <= 6.0; x += 0.37)
    CHECK(normal_cdf(x) == doctest::Approx(static_cast<double>(oracle::phi(x))).epsilon(1e-12));
}

TEST_CASE("quantile inverts the cdf") {
  for (double e = 0.01; e < 1.0; e += 0.01) CHECK(normal_cdf(normal_quantile(e)) == doctest::Approx(1.0 - e).epsilon(1e-12));
}

TEST_CASE("quantile rejects probabilities outside (0, 1)") {
  CHECK_THROWS_AS(normal_quantile(0.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(1.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(NAN), DomainError);
}
