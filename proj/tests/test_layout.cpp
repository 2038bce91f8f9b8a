#include <doctest.h>

#include "oracles.hpp"
#include "tangle/enumeration.hpp"
#include "tangle/error.hpp"
#include "tangle/forbidden.hpp"
#include "tangle/layout.hpp"
#include "tangle/literal.hpp"
#include "tangle/random.hpp"

using namespace tangle;

namespace {

std::string order_string(const Tanglegram& t, Side s) {
  std::string out;
  for (NodeId leaf : leaf_order(t, s)) out += t.tree(s).label(leaf);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("layout");

TEST_CASE("crossings") {
  CHECK(crossings(parse("((1,2),(3,4)) | ((1,2),(3,4))")) == 0);
  // Left order 1,2,3,4 against right order 1,2,4,3.
  CHECK(crossings(parse("(((1,2),3),4) | (((1,2),4),3)")) == 1);
  CHECK(crossings(parse("(((1,2),3),4) | (((4,3),2),1)")) == 6);
  CHECK(crossings(parse("1 | 1")) == 0);
}

TEST_CASE("crossings agree with pair counting") {
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Tanglegram t = random_tanglegram(1 + i % 25, rng);
    REQUIRE(crossings(t) == oracle::crossings(t));
  }
}

TEST_CASE("switch and mirror on the four-leaf example") {
  const Tanglegram t = parse("((d,c),(b,a)) | (((d,b),c),a)");
  CHECK(order_string(t, Side::left) == "dcba");
  CHECK(order_string(t, Side::right) == "dbca");

  const Tanglegram switched = switch_at(t, {Side::right, t.right().root()});
  CHECK(order_string(switched, Side::right) == "adbc");
  CHECK(order_string(switched, Side::left) == "dcba");

  const Tanglegram mirrored = mirror_at(t, {Side::left, t.left().root()});
  CHECK(order_string(mirrored, Side::left) == "abcd");
  CHECK(order_string(mirrored, Side::right) == "dbca");
}

TEST_CASE("switch and mirror errors") {
  const Tanglegram t = parse("(1,2) | (1,2)");
  CHECK_THROWS_AS(switch_at(t, {Side::left, 1}), PreconditionError);
  CHECK_THROWS_AS(switch_at(t, {Side::left, 7}), PreconditionError);
  CHECK_THROWS_AS(mirror_at(t, {Side::right, 7}), PreconditionError);
  CHECK(mirror_at(t, {Side::left, 1}) == t);
}

TEST_CASE("switch reverses exactly the pairs split at the vertex") {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const Tanglegram t = random_tanglegram(2 + i % 12, rng);
    const auto internal = t.left().internal_nodes();
    const NodeId v = internal[static_cast<std::size_t>(i) % internal.size()];
    const Tanglegram s = switch_at(t, {Side::left, v});
    const auto before = edge_positions(t, Side::left);
    const auto after = edge_positions(s, Side::left);
    const auto up = t.edges_under({Side::left, t.left().up(v)});
    const auto down = t.edges_under({Side::left, t.left().down(v)});
    for (EdgeId a = 0; a < t.size(); ++a)
      for (EdgeId b = a + 1; b < t.size(); ++b) {
        const bool split = (std::count(up.begin(), up.end(), a) && std::count(down.begin(), down.end(), b)) ||
                           (std::count(up.begin(), up.end(), b) && std::count(down.begin(), down.end(), a));
        const bool changed = (before[a] < before[b]) != (after[a] < after[b]);
        CHECK(split == changed);
      }
  }
}

TEST_CASE("canonical key basics") {
  CHECK(canonical_key(parse("(1,2) | (1,2)")) == canonical_key(parse("(1,2) | (2,1)")));
  const Tanglegram t = parse("((d,c),(b,a)) | (((d,b),c),a)");
  for (Side s : {Side::left, Side::right})
    for (NodeId v : t.tree(s).internal_nodes()) CHECK(canonical_key(switch_at(t, {s, v})) == canonical_key(t));
  CHECK(same_tanglegram(t, mirror_at(t, {Side::left, t.left().root()})));
  // Labels never matter.
  CHECK(same_tanglegram(parse("((a,b),c) | (a,(b,c))"), parse("((1,2),3) | (1,(2,3))")));
  CHECK(canonical_key(parse("1 | 1")).hex() == "01010100");
  CHECK(canonical_key(parse("(1,2) | (2,1)")).hex() == "020001010001010001");
}

TEST_CASE("canonical key is bounded") {
  Rng rng(1);
  CHECK_THROWS_AS(canonical_key(random_tanglegram(17, rng)), BoundExceeded);
  CanonicalOptions wide;
  wide.max_size = 20;
  CHECK_NOTHROW(canonical_key(random_tanglegram(17, rng), wide));
}

TEST_CASE("size 4 has 13 tanglegrams") {
  const Census census = enumerate_tanglegrams(4);
  CHECK(census.entries.size() == 13);
  // Independent check: label-free orbit signatures.
  std::set<std::string> classes;
  for (const PlaneTree& l : tree_shapes(4))
    for (const PlaneTree& r : tree_shapes(4)) {
      std::vector<std::string> perm = numeric_labels(4);
      do {
        // Relabel the right shape's leaves through the permutation.
        std::string lit = serialize(r);
        std::string out;
        for (char c : lit) out += (c >= '1' && c <= '4') ? perm[static_cast<std::size_t>(c - '1')] : std::string(1, c);
        const Tanglegram t = parse(serialize(l) + " | " + out);
        std::string smallest;
        for (const auto& x : oracle::orbit(t)) {
          const auto sig = oracle::signature(x);
          if (smallest.empty() || sig < smallest) smallest = sig;
        }
        classes.insert(smallest);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  CHECK(classes.size() == 13);
}

TEST_CASE("key equality matches the orbit oracle") {
  Rng rng(21);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
    const Tanglegram a = random_tanglegram(n, rng);
    // Half the time compare against a relabelled, switched copy.
    Tanglegram b = random_tanglegram(n, rng);
    if (i % 2 == 0) b = random_switches(a, rng);
    CHECK((canonical_key(a) == canonical_key(b)) == oracle::same_tanglegram(a, b));
  }
}

TEST_CASE("left and right may not be exchanged") {
  // The trees are a caterpillar and a balanced tree, so swapping sides
  // gives a different tanglegram.
  const Tanglegram t = parse("(((1,2),3),4) | ((1,2),(3,4))");
  CHECK_FALSE(same_tanglegram(t, swap_sides(t)));
  CHECK_FALSE(oracle::same_tanglegram(t, swap_sides(t)));
  CHECK_FALSE(same_tanglegram(reference(ForbiddenKind::no6), reference(ForbiddenKind::no13)));
}

TEST_CASE("key equality is an equivalence on the size-4 candidates") {
  // Reflexive by construction; symmetric and transitive because equality
  // of keys is string equality. Check the partition instead: layouts in
  // the same orbit share a key, different census entries do not.
  const Census census = enumerate_tanglegrams(4);
  Rng rng(2);
  for (const auto& [key, t] : census.entries) {
    for (int i = 0; i < 20; ++i) CHECK(canonical_key(random_switches(t, rng)) == key);
    for (const auto& [other_key, other] : census.entries)
      if (other_key != key) CHECK_FALSE(oracle::same_tanglegram(t, other));
  }
}

TEST_CASE("orient_to_order") {
  const Tanglegram t = parse("((1,2),(3,4)) | ((1,2),(3,4))");
  const std::vector<EdgeId> order{3, 2, 0, 1};
  const auto oriented = orient_to_order(t, order);
  REQUIRE(oriented);
  CHECK(edge_order(*oriented, Side::left) == order);
  CHECK(edge_order(*oriented, Side::right) == order);
  CHECK(crossings(*oriented) == 0);
  const std::vector<EdgeId> split{0, 2, 1, 3};
  CHECK_FALSE(orient_to_order(t, split).has_value());
  const std::vector<EdgeId> bad{0, 0, 1, 2};
  CHECK_THROWS_AS(orient_to_order(t, bad), PreconditionError);
}

TEST_CASE("outer boundary") {
  const Tanglegram t = parse("(((1,2),3),4) | (1,(2,(3,4)))");
  const auto b = outer_boundary(t);
  CHECK(b.top_edge == 0);
  CHECK(b.bottom_edge == 3);
  CHECK(b.left_top.size() == 3);
  CHECK(b.left_bottom.size() == 1);
  CHECK(b.right_top.size() == 1);
  CHECK(b.right_bottom.size() == 3);
  // The edge above leaf 2 on the left is inside.
  CHECK_FALSE(b.contains({Side::left, *t.left().find_leaf("2")}));
  CHECK(b.contains({Side::left, *t.left().find_leaf("1")}));
  CHECK(b.contains_vertex(Side::right, t.right().root(), t.right().root()));
}

TEST_CASE("labeled form identifies labelled switch classes") {
  const Tanglegram t = parse("((d,c),(b,a)) | (((d,b),c),a)");
  CHECK(labeled_form(t) == "((a,b),(c,d)) | (a,((b,d),c))");
  Rng rng(4);
  for (int i = 0; i < 50; ++i) CHECK(labeled_form(random_switches(t, rng)) == labeled_form(t));
  CHECK(labeled_form(parse("((a,c),(b,d)) | (((d,b),c),a)")) != labeled_form(t));
}

TEST_CASE("flip_vertical reverses both leaf orders") {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const Tanglegram t = random_tanglegram(1 + i % 10, rng);
    const Tanglegram f = flip_vertical(t);
    for (Side s : {Side::left, Side::right}) {
      auto order = edge_order(t, s);
      std::reverse(order.begin(), order.end());
      CHECK(edge_order(f, s) == order);
    }
    CHECK(crossings(f) == crossings(t));
  }
}

TEST_SUITE_END();
