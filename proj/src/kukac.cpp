#include <algorithm>
#include <map>

#include "tangle/forbidden.hpp"
#include "tangle/literal.hpp"
#include "tangle/planarity.hpp"
#include "tangle/subtanglegram.hpp"

namespace tangle {

namespace {

// Leaves of the cherry of a size-3 tree, as sub edge ids.
std::array<EdgeId, 2> cherry(const Tanglegram& t, Side s) {
  const PlaneTree& tree = t.tree(s);
  const NodeId root = tree.root();
  const NodeId inner = tree.is_leaf(tree.up(root)) ? tree.down(root) : tree.up(root);
  return {*t.edge_at(s, tree.up(inner)), *t.edge_at(s, tree.down(inner))};
}

// The induced subtanglegram has the pattern's shape and the marked right
// edge lies on the path that becomes the pattern's marked edge: the right
// edge above the leaf shared by both cherries.
bool matches_pattern(const Tanglegram& f, const std::array<EdgeId, 3>& triple, NodeId mark) {
  const auto induced = induce_with_scars(f, triple);
  const Tanglegram& sub = induced.sub;
  if (!same_tanglegram(sub, kukac_pattern())) return false;
  const auto lc = cherry(sub, Side::left);
  const auto rc = cherry(sub, Side::right);
  EdgeId shared = kNoEdge;
  for (EdgeId x : lc)
    if (x == rc[0] || x == rc[1]) shared = x;
  if (shared == kNoEdge) return false;
  const NodeId leaf = sub.leaf_of(shared, Side::right);
  const NodeId lower = induced.right_node_map[leaf];
  const NodeId upper = induced.right_node_map[sub.right().parent(leaf)];
  const PlaneTree& right = f.right();
  return mark != upper && right.is_ancestor(mark, lower) && right.is_ancestor(upper, mark);
}

}  // namespace

const Tanglegram& kukac_pattern() {
  static const Tanglegram pattern = parse("((3,2),1) | (3,(2,1))");
  return pattern;
}

TreeEdge kukac_pattern_mark() { return {Side::right, *kukac_pattern().right().find_leaf("2")}; }

std::array<EdgeId, 3> lemma_kukac(const Tanglegram& f, TreeEdge marked, const KukacOptions& options) {
  const PlaneTree& marked_tree = f.tree(marked.side);
  if (!marked_tree.contains(marked.child) || marked.child == marked_tree.root())
    throw PreconditionError("lemma_kukac: marked edge is not a tree edge");
  if (marked.side == Side::left) return lemma_kukac(swap_sides(f), {Side::right, marked.child}, options);
  if (f.size() > options.max_size) throw BoundExceeded("lemma_kukac", f.size(), options.max_size);

  // For every right vertex, the first planar layout whose outer boundary
  // passes through the edge above it.
  const PlaneTree& right = f.right();
  std::map<NodeId, Tanglegram> exposing;
  const std::size_t layouts = for_each_planar_layout(f, [&](const Tanglegram& layout) {
    const auto boundary = outer_boundary(layout);
    for (const auto* path : {&boundary.right_top, &boundary.right_bottom})
      for (NodeId v : *path) exposing.try_emplace(v, layout);
    return true;
  });
  if (layouts == 0) throw PreconditionError("lemma_kukac: tanglegram is not planar");

  const NodeId m = marked.child;
  if (auto it = exposing.find(m); it != exposing.end()) {
    if (options.check_precondition)
      throw KukacPreconditionError("lemma_kukac: a planar layout puts the marked edge on the outer boundary",
                                   it->second);
    throw InvariantViolation("lemma_kukac: marked edge is exposable although the caller vouched otherwise");
  }

  // m*: the edge nearest the root on the root-to-mark path that no planar
  // layout exposes; rho* is its upper endpoint.
  std::vector<NodeId> path;
  for (NodeId v = m; v != right.root(); v = right.parent(v)) path.push_back(v);
  std::reverse(path.begin(), path.end());
  const NodeId m_star = *std::find_if(path.begin(), path.end(), [&](NodeId v) { return !exposing.contains(v); });
  const NodeId rho_star = right.parent(m_star);
  if (rho_star == right.root()) throw InvariantViolation("lemma_kukac: an edge at the root is never exposable");

  Tanglegram layout = exposing.at(rho_star);
  const auto top = outer_boundary(layout).right_top;
  if (std::find(top.begin(), top.end(), rho_star) != top.end()) layout = flip_vertical(layout);
  const auto boundary = outer_boundary(layout);
  const EdgeId e1 = boundary.bottom_edge;
  const EdgeId e3 = boundary.top_edge;
  const auto below = layout.edges_under({Side::right, rho_star});
  const EdgeId e2 = below.front();
  if (std::find(below.begin(), below.end(), e1) == below.end() || e2 == e1)
    throw InvariantViolation("lemma_kukac: exposing layout does not run along rho*");

  const PlaneTree& left = f.left();
  auto left_lca = [&](EdgeId a, EdgeId b) { return left.lca(f.leaf_of(a, Side::left), f.leaf_of(b, Side::left)); };
  // x splits e1 from e2 on the left. Its lower subtree is a bottom block
  // inside E*, so any other edge below x sits in the upper subtree with e2.
  // When x is not the left root, e3 need not be below x and the edge just
  // above e2 takes its place; it is below x and outside rho*.
  const NodeId x = left_lca(e1, e2);
  EdgeId third = e3;
  if (x != left.root()) {
    const auto order = edge_order(layout, Side::left);
    const auto at = std::find(order.begin(), order.end(), e2);
    if (at == order.begin()) throw InvariantViolation("lemma_kukac: no edge above e2 in the exposing layout");
    third = *(at - 1);
    if (left_lca(e2, third) == x || left_lca(e1, third) != x || right.is_ancestor(rho_star, f.leaf_of(third, Side::right)))
      throw InvariantViolation("lemma_kukac: edge above e2 does not replace e3");
  }

  std::array<EdgeId, 3> triple{e1, e2, third};
  if (!right.is_ancestor(m, f.leaf_of(e2, Side::right))) {
    const auto under = f.edges_under({Side::right, m});
    const EdgeId g = *std::min_element(under.begin(), under.end());
    if (left_lca(e1, g) == x)
      triple = {e1, third, g};
    else if (left_lca(e2, g) == x)
      triple = {e1, e2, g};
    else
      throw InvariantViolation("lemma_kukac: correcting edge splits from neither e1 nor e2 at x");
  }
  std::sort(triple.begin(), triple.end());
  if (!matches_pattern(f, triple, m))
    throw InvariantViolation("lemma_kukac: selected edges do not induce the pattern around the mark");
  return triple;
}

}  // namespace tangle
