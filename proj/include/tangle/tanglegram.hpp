#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tangle/tree.hpp"

namespace tangle {

enum class Side : std::uint8_t { left, right };

constexpr Side opposite(Side s) noexcept { return s == Side::left ? Side::right : Side::left; }
const char* to_string(Side s) noexcept;

/// A vertex of one of the two trees.
struct Vertex {
  Side side;
  NodeId node;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// A tree edge, named by its lower endpoint. The root names the virtual
/// slot above the root.
struct TreeEdge {
  Side side;
  NodeId child;

  friend auto operator<=>(const TreeEdge&, const TreeEdge&) = default;
};

struct MatchingEdge {
  EdgeId id;
  NodeId left_leaf;
  NodeId right_leaf;
};

/// Two plane binary trees of equal size and the perfect matching between
/// their leaves. Read literally (up-child above down-child) the value is a
/// layout; the tanglegram it stands for is its class under switches.
///
/// The matching pairs leaves carrying equal labels. Edge ids are 0..n-1 in
/// `label_less` order of the shared labels and never change under switch or
/// mirror.
class Tanglegram {
 public:
  Tanglegram(PlaneTree left, PlaneTree right);

  const PlaneTree& left() const noexcept { return left_; }
  const PlaneTree& right() const noexcept { return right_; }
  const PlaneTree& tree(Side s) const noexcept { return s == Side::left ? left_ : right_; }

  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<MatchingEdge>& edges() const noexcept { return edges_; }
  const MatchingEdge& edge(EdgeId e) const { return edges_.at(e); }
  NodeId leaf_of(EdgeId e, Side s) const { return s == Side::left ? edge(e).left_leaf : edge(e).right_leaf; }
  const std::string& edge_label(EdgeId e) const { return left_.label(edge(e).left_leaf); }
  std::optional<EdgeId> edge_by_label(std::string_view label) const;

  /// Matching edge incident to a leaf; nullopt for internal nodes.
  std::optional<EdgeId> edge_at(Side s, NodeId leaf) const;
  /// Matching edges under `v`, top to bottom in the current layout.
  std::vector<EdgeId> edges_under(Vertex v) const;

  /// Interchanges the two subtrees at an internal vertex. Node and edge ids
  /// are unchanged.
  void switch_in_place(Vertex v);

  friend bool operator==(const Tanglegram& a, const Tanglegram& b);

 private:
  PlaneTree left_;
  PlaneTree right_;
  std::vector<MatchingEdge> edges_;
  std::vector<EdgeId> left_edge_of_;   // node -> edge, kNoEdge for internal nodes
  std::vector<EdgeId> right_edge_of_;
};

}  // namespace tangle
