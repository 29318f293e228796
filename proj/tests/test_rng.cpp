#include <doctest.h>

#include <cmath>
#include <set>

#include "cdsample/rng.hpp"

using namespace cdsample;

TEST_CASE("rng stream is reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("fnv1a matches published test vectors") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("mix_seed separates streams") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 2000; ++s) seen.insert(mix_seed(123, s));
  CHECK(seen.size() == 2000);
  CHECK(mix_seed(1, 0) != mix_seed(2, 0));
}

TEST_CASE("below stays in range and is roughly uniform") {
  Rng rng(7);
  const std::size_t n = 10;
  const int draws = 100000;
  std::vector<int> counts(n, 0);
  for (int i = 0; i < draws; ++i) {
    std::size_t x = rng.below(n);
    REQUIRE(x < n);
    ++counts[x];
  }
  // 3-sigma band around draws/n for a binomial count
  double expect = static_cast<double>(draws) / n;
  double sigma = std::sqrt(expect * (1.0 - 1.0 / n));
  for (int c : counts) CHECK(std::abs(c - expect) < 4 * sigma);
}

TEST_CASE("geometric mean matches p/(1-p)") {
  Rng rng(99);
  const double p = 0.3;
  const int draws = 200000;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) sum += rng.geometric(p);
  double mean = sum / draws;
  double true_mean = p / (1.0 - p);
  double true_var = p / ((1.0 - p) * (1.0 - p));
  CHECK(std::abs(mean - true_mean) < 4 * std::sqrt(true_var / draws));
}

TEST_CASE("weighted picker exhausts positive weights exactly once") {
  Rng rng(5);
  std::vector<double> w = {2.0, 0.0, 1.0, 5.0, 0.0, 3.0};
  WeightedPicker picker(w);
  CHECK(picker.remaining() == 4);
  std::set<std::size_t> drawn;
  while (!picker.empty()) drawn.insert(picker.draw(rng));
  CHECK(drawn == std::set<std::size_t>({0, 2, 3, 5}));
  CHECK_THROWS_AS(picker.draw(rng), std::logic_error);
}

TEST_CASE("weighted picker first draw follows the weights") {
  const int trials = 20000;
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(static_cast<std::uint64_t>(t) + 1);
    WeightedPicker picker({1.0, 3.0});
    if (picker.draw(rng) == 1) ++hits;
  }
  double p = 0.75;
  double sigma = std::sqrt(p * (1 - p) / trials);
  CHECK(std::abs(hits / static_cast<double>(trials) - p) < 4 * sigma);
}

TEST_CASE("weighted picker rejects negative weights") {
  CHECK_THROWS_AS(WeightedPicker({1.0, -0.5}), std::invalid_argument);
}
