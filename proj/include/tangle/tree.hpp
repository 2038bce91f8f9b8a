#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tangle {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// Total order on leaf labels: all-digit tokens first, compared numerically,
/// then every other token in byte-lexicographic order.
bool label_less(std::string_view a, std::string_view b) noexcept;

struct Node {
  std::string label;  // leaves only
  NodeId parent = kNoNode;
  NodeId up = kNoNode;
  NodeId down = kNoNode;

  bool is_leaf() const noexcept { return up == kNoNode; }
};

/// Rooted plane binary tree stored in an arena. The child order is part of
/// the value: `up` is drawn above `down`. Node ids are stable under
/// `swap_children`.
class PlaneTree {
 public:
  /// Validates the arena: every node reachable from `root` exactly once,
  /// internal nodes have two children, leaf labels non-empty and distinct.
  /// Parent links are recomputed; the ones passed in are ignored.
  PlaneTree(std::vector<Node> nodes, NodeId root);

  static PlaneTree single_leaf(std::string label);

  NodeId root() const noexcept { return root_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const noexcept { return (nodes_.size() + 1) / 2; }

  const Node& node(NodeId v) const { return nodes_.at(v); }
  bool contains(NodeId v) const noexcept { return v < nodes_.size(); }
  bool is_leaf(NodeId v) const { return node(v).is_leaf(); }
  NodeId up(NodeId v) const { return node(v).up; }
  NodeId down(NodeId v) const { return node(v).down; }
  NodeId parent(NodeId v) const { return node(v).parent; }
  const std::string& label(NodeId v) const { return node(v).label; }

  std::optional<NodeId> find_leaf(std::string_view label) const;

  /// Leaves top to bottom (in-order, up-child first).
  std::vector<NodeId> leaves() const;
  std::vector<NodeId> leaves_under(NodeId v) const;
  /// Internal nodes in preorder (up-child first).
  std::vector<NodeId> internal_nodes() const;
  std::vector<NodeId> preorder() const;

  std::size_t depth(NodeId v) const;
  /// True when `a` lies on the root path of `b` (a == b included).
  bool is_ancestor(NodeId a, NodeId b) const;
  NodeId lca(NodeId a, NodeId b) const;

  /// The vertex r_L of the smallest subtree containing `leaves` that is
  /// closest to the root, i.e. their lowest common ancestor.
  NodeId subtree_root(std::span<const NodeId> leaves) const;

  void swap_children(NodeId v);

  friend bool operator==(const PlaneTree& a, const PlaneTree& b);

 private:
  PlaneTree() = default;

  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
};

/// Free-function spelling of PlaneTree::subtree_root.
NodeId subtree_root(const PlaneTree& tree, std::span<const NodeId> leaves);

}  // namespace tangle
