#include <doctest.h>

#include <cmath>
#include <set>

#include "vgsec/rng.hpp"

using namespace vgsec;

TEST_CASE("splitmix64 matches the reference stream") {
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64(state) == 0x6E789E6AA1B965F4ULL);
  CHECK(splitmix64(state) == 0x06C45D188009454FULL);
}

TEST_CASE("derive_seed is the index-th output of the stream") {
  for (Seed base : {Seed{0}, Seed{7}, Seed{0xFFFFFFFFFFFFFFFFULL}}) {
    std::uint64_t state = base;
    for (std::uint64_t i = 0; i < 5; ++i) CHECK(derive_seed(base, i) == splitmix64(state));
  }
  std::set<Seed> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(42, i));
  CHECK(seen.size() == 1000);
}

TEST_CASE("uniform draws stay in range and are reproducible") {
  Rng a(3), b(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double w = a.uniform_open0();
    b.uniform_open0();
    CHECK(w > 0.0);
    CHECK(w <= 1.0);
  }
}

TEST_CASE("exponential draws have the right mean") {
  Rng rng(11);
  const double rate = 2.5;
  double sum = 0.0;
  const int count = 200000;
  for (int i = 0; i < count; ++i) sum += rng.exponential(rate);
  // standard error of the mean is 1 / (rate sqrt(count)) ~ 9e-4
  CHECK(std::abs(sum / count - 1.0 / rate) < 5e-3);
  CHECK(std::isinf(rng.exponential(0.0)));
}

TEST_CASE("below is unbiased over a small range") {
  Rng rng(5);
  std::vector<int> hits(7, 0);
  const int count = 70000;
  for (int i = 0; i < count; ++i) ++hits[rng.below(7)];
  for (int h : hits) CHECK(std::abs(h - count / 7) < 500);
}
