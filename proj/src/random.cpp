#include "tangle/random.hpp"

#include <algorithm>
#include <numeric>

#include "tangle/error.hpp"
#include "tangle/layout.hpp"
#include "tangle/planarity.hpp"
#include "tangle/subtanglegram.hpp"

namespace tangle {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i + 1);
  return out;
}

PlaneTree random_plane_tree(std::span<const std::string> labels, Rng& rng) {
  if (labels.empty()) throw PreconditionError("random_plane_tree: no labels");
  std::vector<Node> nodes(1);
  NodeId root = 0;
  std::bernoulli_distribution coin(0.5);
  while ((nodes.size() + 1) / 2 < labels.size()) {
    // Pick any vertex, put a new internal vertex above it and hang a new
    // leaf on a random side.
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(nodes.size() - 1));
    const NodeId x = pick(rng);
    const auto y = static_cast<NodeId>(nodes.size());
    const NodeId z = y + 1;
    nodes.emplace_back();
    nodes.emplace_back();
    const NodeId p = nodes[x].parent;
    if (p == kNoNode) {
      root = y;
    } else if (nodes[p].up == x) {
      nodes[p].up = y;
    } else {
      nodes[p].down = y;
    }
    nodes[y].parent = p;
    const bool leaf_up = coin(rng);
    nodes[y].up = leaf_up ? z : x;
    nodes[y].down = leaf_up ? x : z;
    nodes[x].parent = y;
    nodes[z].parent = y;
  }
  // Label leaves top to bottom.
  std::size_t next = 0;
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (nodes[v].is_leaf()) {
      nodes[v].label = labels[next++];
      continue;
    }
    stack.push_back(nodes[v].down);
    stack.push_back(nodes[v].up);
  }
  return PlaneTree(std::move(nodes), root);
}

Tanglegram random_tanglegram(std::size_t n, Rng& rng) {
  const auto labels = numeric_labels(n);
  auto right_labels = labels;
  std::shuffle(right_labels.begin(), right_labels.end(), rng);
  return Tanglegram(random_plane_tree(labels, rng), random_plane_tree(right_labels, rng));
}

Tanglegram random_planar_layout(std::size_t n, Rng& rng) {
  auto labels = numeric_labels(n);
  std::shuffle(labels.begin(), labels.end(), rng);
  return Tanglegram(random_plane_tree(labels, rng), random_plane_tree(labels, rng));
}

Tanglegram random_switches(const Tanglegram& t, Rng& rng) {
  Tanglegram out = t;
  std::bernoulli_distribution coin(0.5);
  for (Side s : {Side::left, Side::right})
    for (NodeId v : t.tree(s).internal_nodes())
      if (coin(rng)) out.switch_in_place({s, v});
  return out;
}

std::vector<EdgeId> random_edge_subset(std::size_t n, std::size_t min_size, Rng& rng) {
  if (min_size > n) throw PreconditionError("random_edge_subset: minimum size exceeds n");
  std::vector<EdgeId> all(n);
  std::iota(all.begin(), all.end(), EdgeId{0});
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> size(min_size, n);
  all.resize(size(rng));
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

// Uniform choice among the planar layouts of `t` having `shared` as top or
// bottom edge (reservoir sampling).
Tanglegram random_layout_with_boundary_edge(const Tanglegram& t, EdgeId shared, Rng& rng) {
  std::optional<Tanglegram> chosen;
  std::size_t seen = 0;
  for_each_planar_layout(t, [&](const Tanglegram& layout) {
    const auto order = edge_order(layout, Side::left);
    if (order.front() != shared && order.back() != shared) return true;
    ++seen;
    if (std::uniform_int_distribution<std::size_t>(0, seen - 1)(rng) == 0) chosen = layout;
    return true;
  });
  if (!chosen) throw InvariantViolation("random_zip_instance: no planar layout with the shared edge outside");
  return *std::move(chosen);
}

}  // namespace

ZipInstance random_zip_instance(std::size_t n, Rng& rng) {
  if (n < 3) throw PreconditionError("random_zip_instance: size must be at least 3");
  const Tanglegram base = random_planar_layout(n, rng);
  const auto order = edge_order(base, Side::left);
  std::uniform_int_distribution<std::size_t> cut(1, n - 2);
  const std::size_t k = cut(rng);
  const EdgeId shared = order[k];
  std::vector<EdgeId> set1(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k) + 1);
  std::vector<EdgeId> set2(order.begin() + static_cast<std::ptrdiff_t>(k), order.end());
  std::sort(set1.begin(), set1.end());
  std::sort(set2.begin(), set2.end());

  const Tanglegram full = random_switches(base, rng);
  Tanglegram layout1 = random_layout_with_boundary_edge(
      induce(full, set1), *induce(full, set1).edge_by_label(full.edge_label(shared)), rng);
  Tanglegram layout2 = random_layout_with_boundary_edge(
      induce(full, set2), *induce(full, set2).edge_by_label(full.edge_label(shared)), rng);
  return {full, std::move(set1), std::move(set2), shared, std::move(layout1), std::move(layout2)};
}

}  // namespace tangle
