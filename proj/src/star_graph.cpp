#include "tangle/star_graph.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace tangle {

std::vector<std::vector<std::size_t>> StarGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertex_count);
  for (const Edge& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

bool StarGraph::has_edge(std::size_t a, std::size_t b) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return (e.a == a && e.b == b) || (e.a == b && e.b == a); });
}

StarGraph star_graph(const Tanglegram& t) {
  StarGraph g;
  g.right_offset = t.left().node_count();
  g.vertex_count = g.right_offset + t.right().node_count();
  for (Side s : {Side::left, Side::right}) {
    const PlaneTree& tree = t.tree(s);
    const auto kind = s == Side::left ? StarGraph::EdgeKind::left_tree : StarGraph::EdgeKind::right_tree;
    for (NodeId v : tree.internal_nodes()) {
      g.edges.push_back({g.vertex(s, v), g.vertex(s, tree.up(v)), kind});
      g.edges.push_back({g.vertex(s, v), g.vertex(s, tree.down(v)), kind});
    }
  }
  for (const MatchingEdge& m : t.edges())
    g.edges.push_back({g.vertex(Side::left, m.left_leaf), g.vertex(Side::right, m.right_leaf),
                       StarGraph::EdgeKind::matching});
  g.edges.push_back({g.vertex(Side::left, t.left().root()), g.vertex(Side::right, t.right().root()),
                     StarGraph::EdgeKind::root});
  return g;
}

bool star_planarity(const Tanglegram& t) {
  if (t.size() == 1) return true;
  const StarGraph star = star_graph(t);
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>>;
  Graph g(star.vertex_count);
  for (const auto& e : star.edges) boost::add_edge(e.a, e.b, g);
  return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace tangle
