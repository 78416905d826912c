#include <doctest.h>

#include "property_checks.hpp"

TEST_CASE("labeling contracts on random regular graphs") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto rep = props::run(100, seed);
    CAPTURE(seed);
    CHECK(rep.graphs == 100);
    CHECK(rep.checks > 1000);
    CHECK(rep.oracle_skipped < 10);
    for (const auto& f : rep.failures) FAIL_CHECK(f);
  }
}

TEST_CASE("random samples respect the size limits") {
  for (const auto& s : props::random_samples(150, 9)) {
    CHECK(s.n <= 10);
    CHECK(s.r <= 5);
    CHECK(magic::regularity(s.graph) == s.r);
    CHECK(s.graph == magic::random_regular_graph(s.n, s.r, s.seed));
  }
}
