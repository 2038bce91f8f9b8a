#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle {

/// Leaf node ids of one side, top to bottom.
using LeafOrder = std::vector<NodeId>;

LeafOrder leaf_order(const Tanglegram& t, Side s);
/// Matching edges in the order their leaves appear on side `s`.
std::vector<EdgeId> edge_order(const Tanglegram& t, Side s);
/// position[e] = rank of edge e's leaf on side `s`.
std::vector<std::size_t> edge_positions(const Tanglegram& t, Side s);

/// Number of pairs of matching edges whose endpoints appear in opposite
/// relative order on the two sides.
std::uint64_t crossings(const Tanglegram& t);

Tanglegram switch_at(const Tanglegram& t, Vertex v);
/// Reverses the child order at every internal vertex of the subtree at `v`.
Tanglegram mirror_at(const Tanglegram& t, Vertex v);
/// Mirror of the whole drawing about the horizontal axis (mirror at both
/// roots): every leaf order is reversed.
Tanglegram flip_vertical(const Tanglegram& t);
/// Exchanges the left and right trees. Not a layout operation: the result is
/// in general a different tanglegram.
Tanglegram swap_sides(const Tanglegram& t);

/// Orients both trees so that the matching edges appear in exactly the given
/// order on both sides; nullopt when some cluster of either tree is not
/// contiguous in `order`.
std::optional<Tanglegram> orient_to_order(const Tanglegram& t, std::span<const EdgeId> order);

/// The contour of a layout: the tree edges followed from each root through
/// up-children (top) and down-children (bottom), plus the extreme matching
/// edges. For a planar layout this is the boundary of the infinite face.
struct OuterBoundary {
  std::vector<NodeId> left_top, left_bottom, right_top, right_bottom;
  EdgeId top_edge = kNoEdge;
  EdgeId bottom_edge = kNoEdge;

  bool contains(TreeEdge e) const;
  bool contains_vertex(Side s, NodeId v, NodeId root) const;
};

OuterBoundary outer_boundary(const Tanglegram& layout);

/// Label-free canonical form, constant on switch classes.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string bytes_;
};

struct CanonicalOptions {
  std::size_t max_size = 16;
};

/// Lexicographically smallest serialization over every layout in the switch
/// class of `t`. The serialization is: size, left shape in preorder
/// (0 = internal, 1 = leaf), right shape likewise, then for each right leaf
/// top to bottom the position of its partner among the left leaves.
/// Throws BoundExceeded above `options.max_size`.
CanonicalKey canonical_key(const Tanglegram& t, const CanonicalOptions& options = {});

bool same_tanglegram(const Tanglegram& a, const Tanglegram& b);

/// Literal of the switch-class representative whose children are ordered by
/// smallest label. Equal strings mean equal labeled tanglegrams.
std::string labeled_form(const Tanglegram& t);

}  // namespace tangle
