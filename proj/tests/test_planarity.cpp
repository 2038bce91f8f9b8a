#include <doctest.h>

#include "oracles.hpp"
#include "tangle/enumeration.hpp"
#include "tangle/error.hpp"
#include "tangle/forbidden.hpp"
#include "tangle/literal.hpp"
#include "tangle/planarity.hpp"
#include "tangle/random.hpp"
#include "tangle/star_graph.hpp"

using namespace tangle;

namespace {

const char* const kNo2 = "(((1,2),3),4) | (((1,2),4),3)";

}  // namespace

TEST_SUITE_BEGIN("planarity");

TEST_CASE("every tanglegram of size at most 3 is planar") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& [key, t] : enumerate_tanglegrams(n).entries) CHECK(is_planar(t));
}

TEST_CASE("the references and No. 2") {
  const Tanglegram no2 = parse(kNo2);
  CHECK(is_planar(no2));
  const auto layout = planar_layout(no2);
  REQUIRE(layout);
  CHECK(crossings(*layout) == 0);
  CHECK(same_tanglegram(*layout, no2));
  CHECK(labeled_form(*layout) == labeled_form(no2));
  for (ForbiddenKind k : {ForbiddenKind::no6, ForbiddenKind::no13}) {
    CHECK_FALSE(is_planar(reference(k)));
    CHECK_FALSE(planar_layout(reference(k)).has_value());
  }
}

TEST_CASE("a crossing-free input is returned unchanged") {
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const Tanglegram t = random_planar_layout(1 + i % 15, rng);
    const auto layout = planar_layout(t);
    REQUIRE(layout);
    CHECK(*layout == t);
  }
  const Tanglegram identity = parse("((1,2),((3,4),5)) | ((1,2),((3,4),5))");
  CHECK(*planar_layout(identity) == identity);
}

TEST_CASE("planar layouts are exactly the crossing-free members of the orbit") {
  Rng rng(12);
  for (int i = 0; i < 150; ++i) {
    const Tanglegram t = i % 2 ? random_tanglegram(2 + i % 5, rng) : random_switches(random_planar_layout(2 + i % 5, rng), rng);
    std::set<std::string> expected;
    for (const auto& x : oracle::orbit(t))
      if (oracle::crossings(x) == 0) expected.insert(serialize(x));
    std::set<std::string> found;
    const std::size_t count = for_each_planar_layout(t, [&](const Tanglegram& layout) {
      CHECK(crossings(layout) == 0);
      found.insert(serialize(layout));
      return true;
    });
    CHECK(count == found.size());
    CHECK(found == expected);
    CHECK(is_planar(t) == !expected.empty());
  }
}

TEST_CASE("early stop") {
  const Tanglegram t = parse("((1,2),(3,4)) | ((1,2),(3,4))");
  int calls = 0;
  CHECK(for_each_planar_layout(t, [&](const Tanglegram&) { return ++calls < 2; }) == 2);
  CHECK(calls == 2);
}

TEST_CASE("crt on size 4") {
  const Census census = enumerate_tanglegrams(4);
  std::size_t ones = 0;
  for (const auto& [key, t] : census.entries) {
    const CrtResult r = crt(t);
    CHECK(crossings(r.optimal_layout) == r.value);
    CHECK(labeled_form(r.optimal_layout) == labeled_form(t));
    if (key == reference_key(ForbiddenKind::no6) || key == reference_key(ForbiddenKind::no13)) {
      CHECK(r.value == 1);
      ++ones;
    } else {
      CHECK(r.value == 0);
    }
  }
  CHECK(ones == 2);
}

TEST_CASE("crt matches the exhaustive orbit scan") {
  // Reversal against two identical caterpillars.
  const Tanglegram reversal = parse("((((1,2),3),4),5) | ((((5,4),3),2),1)");
  CHECK(crt(reversal).value == oracle::crt(reversal));
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const Tanglegram t = random_tanglegram(1 + i % 6, rng);
    const CrtResult r = crt(t);
    REQUIRE(r.value == oracle::crt(t));
    CHECK(crossings(r.optimal_layout) == r.value);
    CHECK(labeled_form(r.optimal_layout) == labeled_form(t));
    CHECK(r.value <= crossings(t));
  }
}

TEST_CASE("crt bound") {
  Rng rng(1);
  CHECK_THROWS_AS(crt(random_tanglegram(13, rng)), BoundExceeded);
  CrtOptions wide;
  wide.max_size = 14;
  const Tanglegram t = random_tanglegram(13, rng);
  const CrtResult r = crt(t, wide);
  CHECK(crossings(r.optimal_layout) == r.value);
}

TEST_CASE("star graph shape") {
  SUBCASE("size 1 is a two-cycle") {
    const StarGraph g = star_graph(parse("1 | 1"));
    CHECK(g.vertex_count == 2);
    CHECK(g.edges.size() == 2);
    CHECK(star_planarity(parse("1 | 1")));
  }
  SUBCASE("size 4 counts") {
    const StarGraph g = star_graph(reference(ForbiddenKind::no13));
    CHECK(g.vertex_count == 14);
    CHECK(g.edges.size() == 17);
  }
  SUBCASE("vertex and edge counts and degree bound") {
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 2 + static_cast<std::size_t>(i % 15);
      const Tanglegram t = random_tanglegram(n, rng);
      const StarGraph g = star_graph(t);
      CHECK(g.vertex_count == 2 * (2 * n - 1));
      CHECK(g.edges.size() == 2 * (2 * n - 2) + n + 1);
      for (const auto& nbrs : g.adjacency()) CHECK(nbrs.size() <= 3);
      CHECK(g.tree_vertex(g.vertex(Side::right, 2)).side == Side::right);
      CHECK(g.tree_vertex(g.vertex(Side::right, 2)).node == 2);
    }
  }
}

TEST_CASE("star planarity") {
  CHECK_FALSE(star_planarity(reference(ForbiddenKind::no6)));
  CHECK_FALSE(star_planarity(reference(ForbiddenKind::no13)));
  CHECK(star_planarity(parse(kNo2)));
}

TEST_CASE("the three planarity routes agree") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& [key, t] : enumerate_tanglegrams(n).entries) {
      const bool p = is_planar(t);
      CHECK(p == star_planarity(t));
      CHECK(p == (crt(t).value == 0));
      CHECK(p == oracle::planar(t));
    }
  Rng rng(77);
  for (int i = 0; i < 500; ++i) {
    const Tanglegram t = random_tanglegram(6 + i % 7, rng);
    const bool p = is_planar(t);
    CHECK(p == star_planarity(t));
    CHECK(p == (crt(t).value == 0));
  }
}

TEST_CASE("planarity is a property of the switch class") {
  Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    const Tanglegram t = random_tanglegram(3 + i % 8, rng);
    const bool p = is_planar(t);
    for (Side s : {Side::left, Side::right})
      for (NodeId v : t.tree(s).internal_nodes()) CHECK(is_planar(switch_at(t, {s, v})) == p);
  }
}

TEST_SUITE_END();
