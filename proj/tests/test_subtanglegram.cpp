#include <doctest.h>

#include <numeric>
#include <tuple>

#include "oracles.hpp"
#include "tangle/error.hpp"
#include "tangle/layout.hpp"
#include "tangle/literal.hpp"
#include "tangle/random.hpp"
#include "tangle/subtanglegram.hpp"

using namespace tangle;

namespace {

std::vector<EdgeId> ids(const Tanglegram& t, std::initializer_list<const char*> labels) {
  std::vector<EdgeId> out;
  for (const char* l : labels) out.push_back(*t.edge_by_label(l));
  return out;
}

// Five edges; e1, e2, e3 selected, f and g excluded.
const char* const kFig7 = "((e1,e2),(e3,(g,f))) | (((e1,e2),e3),(g,f))";

}  // namespace

TEST_SUITE_BEGIN("subtanglegram");

TEST_CASE("trivial inductions") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Tanglegram t = random_tanglegram(1 + i % 9, rng);
    std::vector<EdgeId> all(t.size());
    std::iota(all.begin(), all.end(), EdgeId{0});
    CHECK(canonical_key(induce(t, all)) == canonical_key(t));
    const std::vector<EdgeId> one{static_cast<EdgeId>(i % t.size())};
    const Tanglegram single = induce(t, one);
    CHECK(single.size() == 1);
    CHECK(serialize(single) == t.edge_label(one[0]) + " | " + t.edge_label(one[0]));
  }
}

TEST_CASE("errors") {
  const Tanglegram t = parse(kFig7);
  CHECK_THROWS_AS(induce(t, std::vector<EdgeId>{}), PreconditionError);
  CHECK_THROWS_AS(induce(t, std::vector<EdgeId>{0, 9}), PreconditionError);
  CHECK_THROWS_AS(hosts(t, std::vector<EdgeId>{0, 1}, 1), PreconditionError);
  CHECK(induce(t, std::vector<EdgeId>{1, 0, 1}).size() == 2);
}

TEST_CASE("the five-edge example") {
  const Tanglegram t = parse(kFig7);
  const auto selected = ids(t, {"e1", "e2", "e3"});
  const auto scarred = induce_with_scars(t, selected);
  CHECK(serialize(scarred.sub) == "((e1,e2),e3) | ((e1,e2),e3)");
  CHECK(scarred.edge_map == selected);

  // f and g enter the left tree at the same suppressed vertex above e3 and
  // miss the minimal right subtree entirely.
  const EdgeId f = *t.edge_by_label("f");
  const EdgeId g = *t.edge_by_label("g");
  const auto left_edge = scarred.scar_edge(Side::left, f);
  REQUIRE(left_edge);
  CHECK(scarred.sub.left().label(left_edge->child) == "e3");
  CHECK_FALSE(scarred.scar_edge(Side::right, f).has_value());
  const auto& scars = scarred.left_scars[left_edge->child];
  REQUIRE(scars.size() == 1);
  CHECK(scars[0].hosted == std::vector<EdgeId>{std::min(f, g), std::max(f, g)});
  for (const auto& list : scarred.right_scars) CHECK(list.empty());

  const Hosts h = hosts(t, selected, f);
  REQUIRE(h.left);
  CHECK(*h.left == t.left().parent(t.left().parent(t.leaf_of(f, Side::left))));
  CHECK_FALSE(h.right.has_value());
}

TEST_CASE("two leaves, one excluded") {
  const Tanglegram t = parse("(1,2) | (2,1)");
  const std::vector<EdgeId> keep{0};
  const auto scarred = induce_with_scars(t, keep);
  CHECK(serialize(scarred.sub) == "1 | 1");
  // The minimal subtrees are the single leaves; the parent roots lie above
  // them, so nothing is hosted.
  const Hosts h = hosts(t, keep, 1);
  CHECK_FALSE(h.left.has_value());
  CHECK_FALSE(h.right.has_value());
}

TEST_CASE("sibling of a selected leaf is hosted at their common parent") {
  const Tanglegram t = parse("((a,b),c) | (a,(b,c))");
  const auto keep = ids(t, {"a", "c"});
  const EdgeId b = *t.edge_by_label("b");
  const Hosts h = hosts(t, keep, b);
  REQUIRE(h.left);
  CHECK(*h.left == t.left().parent(t.leaf_of(b, Side::left)));
  REQUIRE(h.right);
  CHECK(*h.right == t.right().parent(t.leaf_of(b, Side::right)));
  const auto scarred = induce_with_scars(t, keep);
  CHECK(scarred.sub.left().label(scarred.scar_edge(Side::left, b)->child) == "a");
  CHECK(scarred.sub.right().label(scarred.scar_edge(Side::right, b)->child) == "c");
}

TEST_CASE("caterpillar with the two extreme edges selected") {
  const Tanglegram t = parse("((((1,2),3),4),5) | (1,(2,(3,(4,5))))");
  const std::vector<EdgeId> keep{0, 4};
  const auto scarred = induce_with_scars(t, keep);
  CHECK(serialize(scarred.sub) == "(1,5) | (1,5)");
  const NodeId one = *scarred.sub.left().find_leaf("1");
  const auto& left = scarred.left_scars[one];
  REQUIRE(left.size() == 3);
  // Root first: 4 hangs highest, 2 lowest.
  CHECK(left[0].hosted == std::vector<EdgeId>{3});
  CHECK(left[1].hosted == std::vector<EdgeId>{2});
  CHECK(left[2].hosted == std::vector<EdgeId>{1});
  CHECK(left[0].depth < left[1].depth);
  CHECK(left[1].depth < left[2].depth);
  const NodeId five = *scarred.sub.right().find_leaf("5");
  const auto& right = scarred.right_scars[five];
  REQUIRE(right.size() == 3);
  CHECK(right[0].hosted == std::vector<EdgeId>{1});
  CHECK(right[2].hosted == std::vector<EdgeId>{3});
}

TEST_CASE("induce and hosts agree with the path-walking oracle") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 8);
    const Tanglegram t = random_tanglegram(n, rng);
    const auto keep = random_edge_subset(n, 1, rng);
    const auto scarred = induce_with_scars(t, keep);
    REQUIRE(serialize(scarred.sub) == oracle::induce(t, keep));
    CHECK(scarred.sub.size() == keep.size());
    for (EdgeId e = 0; e < n; ++e) {
      if (std::binary_search(keep.begin(), keep.end(), e)) continue;
      const Hosts h = hosts(t, keep, e);
      for (Side s : {Side::left, Side::right}) {
        const auto expected = oracle::host(t, s, keep, e);
        CHECK(h.on(s) == expected);
        const auto edge = scarred.scar_edge(s, e);
        CHECK(edge.has_value() == expected.has_value());
        if (edge) {
          // The host lies on the parent path of the scarred edge.
          const PlaneTree& tree = t.tree(s);
          const NodeId lower = scarred.node_map(s)[edge->child];
          const NodeId upper = scarred.node_map(s)[scarred.sub.tree(s).parent(edge->child)];
          CHECK(tree.is_ancestor(*expected, lower));
          CHECK(tree.is_ancestor(upper, *expected));
          CHECK(*expected != upper);
          CHECK(*expected != lower);
        }
      }
    }
  }
}

TEST_CASE("induction commutes with switches") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 9);
    const Tanglegram t = random_tanglegram(n, rng);
    const auto keep = random_edge_subset(n, 1, rng);
    const Tanglegram s = random_switches(t, rng);
    CHECK(canonical_key(induce(s, keep)) == canonical_key(induce(t, keep)));
    CHECK(labeled_form(induce(s, keep)) == labeled_form(induce(t, keep)));
  }
}

TEST_CASE("scars do not depend on the layout") {
  auto summary = [](const ScarredSubtanglegram& x) {
    std::set<std::tuple<int, NodeId, NodeId, std::vector<EdgeId>>> out;
    for (Side s : {Side::left, Side::right}) {
      const auto& scars = x.scars(s);
      for (NodeId v = 0; v < scars.size(); ++v)
        for (const Scar& scar : scars[v])
          out.insert({static_cast<int>(s), x.node_map(s)[v], scar.host, scar.hosted});
    }
    return out;
  };
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 9);
    const Tanglegram t = random_tanglegram(n, rng);
    const auto keep = random_edge_subset(n, 1, rng);
    CHECK(summary(induce_with_scars(t, keep)) == summary(induce_with_scars(random_switches(t, rng), keep)));
  }
}

TEST_CASE("monotonicity of induction") {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 9);
    const Tanglegram t = random_tanglegram(n, rng);
    const auto outer = random_edge_subset(n, 1, rng);
    const auto scarred = induce_with_scars(t, outer);
    const auto inner_local = random_edge_subset(outer.size(), 1, rng);
    std::vector<EdgeId> inner_parent;
    for (EdgeId e : inner_local) inner_parent.push_back(scarred.edge_map[e]);
    CHECK(labeled_form(induce(scarred.sub, inner_local)) == labeled_form(induce(t, inner_parent)));
  }
}

TEST_SUITE_END();
