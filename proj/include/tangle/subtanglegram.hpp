#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle {

/// Marks on one edge of an induced tree: the parent vertex `host` was
/// suppressed, and the excluded matching edges `hosted` reach the induced
/// tree through it.
struct Scar {
  NodeId host;
  std::size_t depth;  // depth of `host` in the parent tree
  std::vector<EdgeId> hosted;
};

/// Induced subtanglegram together with the bookkeeping that ties it to its
/// parent. Labels are inherited, so sub edge i is the i-th smallest parent
/// edge id of the selected set.
struct ScarredSubtanglegram {
  Tanglegram sub;
  std::vector<EdgeId> edge_map;         // sub edge -> parent edge
  std::vector<NodeId> left_node_map;    // sub node -> parent node
  std::vector<NodeId> right_node_map;
  // Indexed by sub node x (the tree edge above x); root-first order.
  std::vector<std::vector<Scar>> left_scars;
  std::vector<std::vector<Scar>> right_scars;

  const std::vector<NodeId>& node_map(Side s) const { return s == Side::left ? left_node_map : right_node_map; }
  const std::vector<std::vector<Scar>>& scars(Side s) const { return s == Side::left ? left_scars : right_scars; }
  /// The tree edge of `sub` carrying the scar of excluded parent edge `e` on
  /// side `s`, if there is one.
  std::optional<TreeEdge> scar_edge(Side s, EdgeId e) const;
};

/// Subtanglegram induced by a nonempty set of matching edges: the smallest
/// subtrees containing their leaves, with degree-2 vertices suppressed.
/// Child order is inherited. Duplicates in `edges` are ignored; throws
/// PreconditionError on an empty set or an unknown id.
Tanglegram induce(const Tanglegram& t, std::span<const EdgeId> edges);
ScarredSubtanglegram induce_with_scars(const Tanglegram& t, std::span<const EdgeId> edges);

struct Hosts {
  std::optional<NodeId> left;
  std::optional<NodeId> right;

  std::optional<NodeId> on(Side s) const { return s == Side::left ? left : right; }
};

/// Parent vertices where the root path of the excluded edge `e` enters the
/// minimal subtrees spanned by `edges` at a suppressed vertex. Absent on a
/// side where e's leaf lies outside the minimal subtree.
Hosts hosts(const Tanglegram& t, std::span<const EdgeId> edges, EdgeId e);

}  // namespace tangle
