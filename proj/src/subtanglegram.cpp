#include "tangle/subtanglegram.hpp"

#include <algorithm>
#include <map>

#include "tangle/error.hpp"

namespace tangle {

namespace {

std::vector<EdgeId> normalized(const Tanglegram& t, std::span<const EdgeId> edges) {
  if (edges.empty()) throw PreconditionError("induce: empty edge set");
  std::vector<EdgeId> out(edges.begin(), edges.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.back() >= t.size()) throw PreconditionError("induce: unknown matching edge " + std::to_string(out.back()));
  return out;
}

// One side of an induction: selected-leaf counts per parent vertex, the
// induced tree in preorder, and the maps between the two node sets.
struct SideInduction {
  std::vector<std::size_t> count;
  NodeId top = kNoNode;  // r_E in the parent tree
  std::vector<Node> nodes;
  std::vector<NodeId> to_parent;
  std::vector<NodeId> to_sub;

  SideInduction(const Tanglegram& t, Side s, const std::vector<EdgeId>& selected) {
    const PlaneTree& tree = t.tree(s);
    count.assign(tree.node_count(), 0);
    for (EdgeId e : selected) {
      for (NodeId v = t.leaf_of(e, s); v != kNoNode; v = tree.parent(v)) ++count[v];
    }
    to_sub.assign(tree.node_count(), kNoNode);
    top = descend(tree, tree.root());
    build(tree, top);
  }

  // First vertex at or below v where the selected leaves branch.
  NodeId descend(const PlaneTree& tree, NodeId v) const {
    while (!tree.is_leaf(v)) {
      const bool up = count[tree.up(v)] > 0;
      const bool down = count[tree.down(v)] > 0;
      if (up && down) break;
      v = up ? tree.up(v) : tree.down(v);
    }
    return v;
  }

  NodeId build(const PlaneTree& tree, NodeId v) {
    const auto id = static_cast<NodeId>(nodes.size());
    nodes.emplace_back();
    to_parent.push_back(v);
    to_sub[v] = id;
    if (tree.is_leaf(v)) {
      nodes[id].label = tree.label(v);
      return id;
    }
    const NodeId up = build(tree, descend(tree, tree.up(v)));
    const NodeId down = build(tree, descend(tree, tree.down(v)));
    nodes[id].up = up;
    nodes[id].down = down;
    return id;
  }

  // Suppressed vertex through which the excluded leaf `leaf` reaches the
  // induced subtree, if any.
  std::optional<NodeId> host_of(const PlaneTree& tree, NodeId leaf) const {
    NodeId u = leaf;
    while (u != kNoNode && count[u] == 0) u = tree.parent(u);
    if (u == kNoNode || u == top || !tree.is_ancestor(top, u)) return std::nullopt;
    return u;
  }
};

}  // namespace

Tanglegram induce(const Tanglegram& t, std::span<const EdgeId> edges) {
  const auto selected = normalized(t, edges);
  SideInduction left(t, Side::left, selected);
  SideInduction right(t, Side::right, selected);
  return Tanglegram(PlaneTree(std::move(left.nodes), 0), PlaneTree(std::move(right.nodes), 0));
}

ScarredSubtanglegram induce_with_scars(const Tanglegram& t, std::span<const EdgeId> edges) {
  const auto selected = normalized(t, edges);
  SideInduction left(t, Side::left, selected);
  SideInduction right(t, Side::right, selected);
  const std::size_t left_size = left.nodes.size();
  const std::size_t right_size = right.nodes.size();
  ScarredSubtanglegram out{
      Tanglegram(PlaneTree(std::move(left.nodes), 0), PlaneTree(std::move(right.nodes), 0)),
      selected,
      left.to_parent,
      right.to_parent,
      std::vector<std::vector<Scar>>(left_size),
      std::vector<std::vector<Scar>>(right_size)};

  std::vector<bool> is_selected(t.size(), false);
  for (EdgeId e : selected) is_selected[e] = true;

  for (Side s : {Side::left, Side::right}) {
    const SideInduction& side = s == Side::left ? left : right;
    const PlaneTree& tree = t.tree(s);
    std::map<NodeId, std::vector<EdgeId>> by_host;
    for (EdgeId e = 0; e < t.size(); ++e) {
      if (is_selected[e]) continue;
      if (auto host = side.host_of(tree, t.leaf_of(e, s))) by_host[*host].push_back(e);
    }
    auto& scars = s == Side::left ? out.left_scars : out.right_scars;
    for (auto& [host, hosted] : by_host) {
      const NodeId below = side.descend(tree, host);
      scars[side.to_sub[below]].push_back({host, tree.depth(host), std::move(hosted)});
    }
    for (auto& list : scars)
      std::sort(list.begin(), list.end(), [](const Scar& a, const Scar& b) { return a.depth < b.depth; });
  }
  return out;
}

std::optional<TreeEdge> ScarredSubtanglegram::scar_edge(Side s, EdgeId e) const {
  const auto& all = scars(s);
  for (NodeId x = 0; x < all.size(); ++x)
    for (const Scar& scar : all[x])
      if (std::find(scar.hosted.begin(), scar.hosted.end(), e) != scar.hosted.end()) return TreeEdge{s, x};
  return std::nullopt;
}

Hosts hosts(const Tanglegram& t, std::span<const EdgeId> edges, EdgeId e) {
  const auto selected = normalized(t, edges);
  if (e >= t.size()) throw PreconditionError("hosts: unknown matching edge " + std::to_string(e));
  if (std::binary_search(selected.begin(), selected.end(), e))
    throw PreconditionError("hosts: edge " + std::to_string(e) + " belongs to the selected set");
  Hosts h;
  h.left = SideInduction(t, Side::left, selected).host_of(t.left(), t.leaf_of(e, Side::left));
  h.right = SideInduction(t, Side::right, selected).host_of(t.right(), t.leaf_of(e, Side::right));
  return h;
}

}  // namespace tangle
