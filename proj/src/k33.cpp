#include "tangle/k33.hpp"

#include <algorithm>
#include <set>

#include "tangle/subtanglegram.hpp"

namespace tangle {

namespace {

// Vertices of `tree` from `from` up to its ancestor `to`, both included.
std::vector<NodeId> climb(const PlaneTree& tree, NodeId from, NodeId to) {
  std::vector<NodeId> out{from};
  while (from != to) {
    from = tree.parent(from);
    out.push_back(from);
  }
  return out;
}

// Edge of the suppressed cubic graph of a size-4 induced tanglegram,
// expressed directly as a vertex path in the parent's star graph.
struct Chain {
  std::size_t a;
  std::size_t b;
  std::vector<std::size_t> path;
};

}  // namespace

K33Witness k33_witness(const Tanglegram& t) {
  const auto cert = find_forbidden(t);
  if (cert.planar()) throw PreconditionError("k33_witness: tanglegram is planar");
  const ForbiddenWitness& witness = *cert.witness;
  const auto induced = induce_with_scars(t, witness.edges);
  const Tanglegram& sub = induced.sub;
  const StarGraph g = star_graph(t);

  auto image = [&](Side s, NodeId sub_node) { return g.vertex(s, induced.node_map(s)[sub_node]); };
  auto tree_path = [&](Side s, NodeId lower, NodeId upper) {
    std::vector<std::size_t> out;
    for (NodeId v : climb(t.tree(s), lower, upper)) out.push_back(g.vertex(s, v));
    std::reverse(out.begin(), out.end());
    return out;
  };

  std::vector<Chain> chains;
  // Internal tree edges of the induced trees.
  for (Side s : {Side::left, Side::right}) {
    const PlaneTree& tree = sub.tree(s);
    for (NodeId v : tree.internal_nodes()) {
      for (NodeId c : {tree.up(v), tree.down(v)}) {
        if (tree.is_leaf(c)) continue;
        chains.push_back({image(s, v), image(s, c),
                          tree_path(s, induced.node_map(s)[c], induced.node_map(s)[v])});
      }
    }
  }
  // Leaves suppressed: parent - leaf - partner leaf - partner's parent.
  for (EdgeId e = 0; e < sub.size(); ++e) {
    const NodeId ll = sub.leaf_of(e, Side::left);
    const NodeId rl = sub.leaf_of(e, Side::right);
    const NodeId lp = sub.left().parent(ll);
    const NodeId rp = sub.right().parent(rl);
    auto path = tree_path(Side::left, induced.left_node_map[ll], induced.left_node_map[lp]);
    auto right = tree_path(Side::right, induced.right_node_map[rl], induced.right_node_map[rp]);
    path.insert(path.end(), right.rbegin(), right.rend());
    chains.push_back({image(Side::left, lp), image(Side::right, rp), std::move(path)});
  }
  // Root edge, through the parent's roots.
  {
    auto path = tree_path(Side::left, induced.left_node_map[sub.left().root()], t.left().root());
    std::reverse(path.begin(), path.end());
    auto right = tree_path(Side::right, induced.right_node_map[sub.right().root()], t.right().root());
    path.insert(path.end(), right.begin(), right.end());
    chains.push_back({image(Side::left, sub.left().root()), image(Side::right, sub.right().root()), std::move(path)});
  }

  // Two-colour the cubic graph on the six branch vertices.
  std::vector<std::size_t> branch;
  for (const Chain& c : chains) {
    branch.push_back(c.a);
    branch.push_back(c.b);
  }
  std::sort(branch.begin(), branch.end());
  branch.erase(std::unique(branch.begin(), branch.end()), branch.end());
  if (branch.size() != 6 || chains.size() != 9)
    throw InvariantViolation("k33_witness: suppressed graph is not cubic on six vertices");
  std::vector<int> colour(branch.size(), -1);
  auto index = [&](std::size_t v) {
    return static_cast<std::size_t>(std::lower_bound(branch.begin(), branch.end(), v) - branch.begin());
  };
  colour[0] = 0;
  for (int round = 0; round < 6; ++round)
    for (const Chain& c : chains) {
      const auto a = index(c.a), b = index(c.b);
      if (colour[a] >= 0 && colour[b] < 0) colour[b] = 1 - colour[a];
      if (colour[b] >= 0 && colour[a] < 0) colour[a] = 1 - colour[b];
    }

  K33Witness w{witness, {}, {}, std::vector<std::vector<std::size_t>>(9)};
  std::size_t na = 0, nb = 0;
  for (std::size_t i = 0; i < branch.size(); ++i) {
    if (colour[i] == 0 && na < 3) w.part_a[na++] = branch[i];
    else if (colour[i] == 1 && nb < 3) w.part_b[nb++] = branch[i];
    else throw InvariantViolation("k33_witness: suppressed graph is not bipartite with parts of size 3");
  }
  for (Chain& c : chains) {
    auto ia = std::find(w.part_a.begin(), w.part_a.end(), c.a) - w.part_a.begin();
    auto ib = std::find(w.part_b.begin(), w.part_b.end(), c.b) - w.part_b.begin();
    if (ia == 3 || ib == 3) {
      std::swap(c.a, c.b);
      std::reverse(c.path.begin(), c.path.end());
      ia = std::find(w.part_a.begin(), w.part_a.end(), c.a) - w.part_a.begin();
      ib = std::find(w.part_b.begin(), w.part_b.end(), c.b) - w.part_b.begin();
    }
    if (ia == 3 || ib == 3) throw InvariantViolation("k33_witness: chain inside one colour class");
    auto& slot = w.paths[static_cast<std::size_t>(3 * ia + ib)];
    if (!slot.empty()) throw InvariantViolation("k33_witness: parallel chains");
    slot = std::move(c.path);
  }
  std::string reason;
  if (!validate_k33(g, w, &reason)) throw InvariantViolation("k33_witness: " + reason);
  return w;
}

bool validate_k33(const StarGraph& g, const K33Witness& w, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  std::set<std::size_t> branch(w.part_a.begin(), w.part_a.end());
  branch.insert(w.part_b.begin(), w.part_b.end());
  if (branch.size() != 6) return fail("branch vertices are not distinct");
  std::size_t in_left = 0;
  for (std::size_t v : branch) {
    if (v >= g.vertex_count) return fail("branch vertex out of range");
    if (g.tree_vertex(v).side == Side::left) ++in_left;
  }
  if (in_left != 3) return fail("branch vertices are not split three per tree");
  if (w.paths.size() != 9) return fail("expected nine paths");

  const auto adj = g.adjacency();
  std::set<std::size_t> used_inner;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& path = w.paths[3 * i + j];
      const std::string name = "path " + std::to_string(3 * i + j);
      if (path.size() < 2 || path.front() != w.part_a[i] || path.back() != w.part_b[j])
        return fail(name + " has wrong endpoints");
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const auto& nbrs = adj.at(path[k]);
        if (std::find(nbrs.begin(), nbrs.end(), path[k + 1]) == nbrs.end())
          return fail(name + " uses a missing edge");
      }
      for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        if (branch.contains(path[k])) return fail(name + " passes through a branch vertex");
        if (!used_inner.insert(path[k]).second) return fail(name + " shares an inner vertex");
      }
    }
  return true;
}

}  // namespace tangle
