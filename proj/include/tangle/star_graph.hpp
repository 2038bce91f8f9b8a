#pragma once

#include <cstddef>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle {

/// The underlying graph of a tanglegram (both trees plus the matching)
/// augmented with an edge between the two roots. Vertex v of the left tree is
/// graph vertex v; vertex w of the right tree is `right_offset + w`.
struct StarGraph {
  enum class EdgeKind { left_tree, right_tree, matching, root };

  struct Edge {
    std::size_t a;
    std::size_t b;
    EdgeKind kind;
  };

  std::size_t vertex_count = 0;
  std::size_t right_offset = 0;
  std::vector<Edge> edges;

  std::size_t vertex(Side s, NodeId v) const { return s == Side::left ? v : right_offset + v; }
  Vertex tree_vertex(std::size_t x) const {
    return x < right_offset ? Vertex{Side::left, static_cast<NodeId>(x)}
                            : Vertex{Side::right, static_cast<NodeId>(x - right_offset)};
  }
  std::vector<std::vector<std::size_t>> adjacency() const;
  bool has_edge(std::size_t a, std::size_t b) const;
};

/// For size 1 the root edge is parallel to the matching edge; both are kept,
/// so the result is a 2-cycle multigraph.
StarGraph star_graph(const Tanglegram& t);

/// Planarity of `star_graph(t)` by a general graph planarity test
/// (Boyer-Myrvold), sharing nothing with the layout search in is_planar.
/// Size 1 is planar by definition.
bool star_planarity(const Tanglegram& t);

}  // namespace tangle
