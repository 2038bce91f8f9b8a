#include <doctest.h>

#include "oracles.hpp"
#include "tangle/enumeration.hpp"
#include "tangle/error.hpp"
#include "tangle/literal.hpp"

using namespace tangle;

TEST_SUITE_BEGIN("enumeration");

TEST_CASE("number of tree shapes") {
  const std::vector<std::size_t> expected{0, 1, 1, 1, 2, 3, 6, 11};
  for (std::size_t n = 1; n < expected.size(); ++n) {
    const auto shapes = tree_shapes(n);
    CHECK(shapes.size() == expected[n]);
    std::set<std::string> distinct;
    for (const PlaneTree& s : shapes) {
      CHECK(s.leaf_count() == n);
      distinct.insert(oracle::shape(s, s.root()));
    }
    CHECK(distinct.size() == shapes.size());
  }
}

TEST_CASE("census counts") {
  const std::vector<std::size_t> total{0, 1, 1, 2, 13, 114};
  const std::vector<std::size_t> planar{0, 1, 1, 2, 11, 76};
  for (std::size_t n = 1; n < total.size(); ++n) {
    const Census census = enumerate_tanglegrams(n);
    CHECK(census.size == n);
    CHECK(census.entries.size() == total[n]);
    CHECK(census.stats.total == total[n]);
    CHECK(census.stats.planar == planar[n]);
    CHECK(census.stats.nonplanar == total[n] - planar[n]);
    CHECK(count_planar(census) == planar[n]);
  }
}

TEST_CASE("census entries are pairwise distinct under the orbit oracle") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Census census = enumerate_tanglegrams(n);
    std::vector<Tanglegram> reps;
    for (const auto& [key, t] : census.entries) {
      CHECK(canonical_key(t) == key);
      reps.push_back(t);
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::same_tanglegram(reps[i], reps[j]));
  }
}

TEST_CASE("shuffling does not change the key set") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const Census plain = enumerate_tanglegrams(n);
    CensusOptions options;
    options.shuffle_seed = 1234 + n;
    const Census shuffled = enumerate_tanglegrams(n, options);
    REQUIRE(plain.entries.size() == shuffled.entries.size());
    for (auto a = plain.entries.begin(), b = shuffled.entries.begin(); a != plain.entries.end(); ++a, ++b)
      CHECK(a->first == b->first);
    CHECK(plain.stats.planar == shuffled.stats.planar);
  }
}

TEST_CASE("classification can be skipped") {
  CensusOptions options;
  options.classify = false;
  const Census census = enumerate_tanglegrams(4, options);
  CHECK(census.entries.size() == 13);
  CHECK(census.stats.planar == 0);
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(enumerate_tanglegrams(0), PreconditionError);
  CHECK_THROWS_AS(enumerate_tanglegrams(8), BoundExceeded);
  CensusOptions small;
  small.max_size = 3;
  CHECK_THROWS_AS(enumerate_tanglegrams(4, small), BoundExceeded);
}

TEST_SUITE_END();
