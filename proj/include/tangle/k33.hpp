#pragma once

#include <array>
#include <string>
#include <vector>

#include "tangle/forbidden.hpp"
#include "tangle/star_graph.hpp"

namespace tangle {

/// A subdivision of K3,3 inside star_graph(t). Vertices are StarGraph
/// vertex ids; `paths[3 * i + j]` runs from `part_a[i]` to `part_b[j]`.
struct K33Witness {
  ForbiddenWitness source;
  std::array<std::size_t, 3> part_a;
  std::array<std::size_t, 3> part_b;
  std::vector<std::vector<std::size_t>> paths;
};

/// Builds the subdivision from the forbidden witness of `t`: in the star
/// graph of a reference tanglegram the six internal vertices, after
/// suppressing the leaves, form K3,3; each of its edges is carried back
/// to `t` along the induced-subtree paths. Throws PreconditionError when
/// `t` is planar.
K33Witness k33_witness(const Tanglegram& t);

/// Structural check, independent of the construction: six distinct branch
/// vertices, three in each tree; nine paths along edges of `g` joining every
/// pair across the parts; paths simple and internally vertex-disjoint.
/// On failure returns false and, if `reason` is non-null, describes why.
bool validate_k33(const StarGraph& g, const K33Witness& w, std::string* reason = nullptr);

}  // namespace tangle
