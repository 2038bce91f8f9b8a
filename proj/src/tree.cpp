#include "tangle/tree.hpp"

#include <algorithm>
#include <unordered_set>

#include "tangle/error.hpp"

namespace tangle {

namespace {

bool all_digits(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_leading_zeros(std::string_view s) noexcept {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) noexcept {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na != nb) return na;
  if (na) {
    const auto sa = strip_leading_zeros(a);
    const auto sb = strip_leading_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

PlaneTree::PlaneTree(std::vector<Node> nodes, NodeId root) : nodes_(std::move(nodes)), root_(root) {
  if (nodes_.empty() || root_ >= nodes_.size()) throw ValidationError("tree has no valid root");
  for (auto& n : nodes_) n.parent = kNoNode;

  std::vector<bool> seen(nodes_.size(), false);
  std::unordered_set<std::string> labels;
  std::vector<NodeId> stack{root_};
  std::size_t visited = 0;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (seen[v]) throw ValidationError("tree node " + std::to_string(v) + " reached twice");
    seen[v] = true;
    ++visited;
    Node& n = nodes_[v];
    if ((n.up == kNoNode) != (n.down == kNoNode))
      throw ValidationError("tree node " + std::to_string(v) + " has exactly one child");
    if (n.is_leaf()) {
      if (n.label.empty()) throw ValidationError("leaf " + std::to_string(v) + " has an empty label");
      if (!labels.insert(n.label).second) throw ValidationError("duplicate leaf label '" + n.label + "'");
      continue;
    }
    for (NodeId c : {n.up, n.down}) {
      if (c >= nodes_.size()) throw ValidationError("tree node " + std::to_string(v) + " has a dangling child");
      if (c == root_) throw ValidationError("tree contains a cycle through the root");
      nodes_[c].parent = v;
      stack.push_back(c);
    }
  }
  if (visited != nodes_.size()) throw ValidationError("tree arena contains unreachable nodes");
}

PlaneTree PlaneTree::single_leaf(std::string label) {
  std::vector<Node> nodes(1);
  nodes[0].label = std::move(label);
  return PlaneTree(std::move(nodes), 0);
}

std::optional<NodeId> PlaneTree::find_leaf(std::string_view label) const {
  for (NodeId v = 0; v < nodes_.size(); ++v)
    if (nodes_[v].is_leaf() && nodes_[v].label == label) return v;
  return std::nullopt;
}

std::vector<NodeId> PlaneTree::leaves_under(NodeId v) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{v};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    const Node& n = node(x);
    if (n.is_leaf()) {
      out.push_back(x);
    } else {
      stack.push_back(n.down);
      stack.push_back(n.up);
    }
  }
  return out;
}

std::vector<NodeId> PlaneTree::leaves() const { return leaves_under(root_); }

std::vector<NodeId> PlaneTree::preorder() const {
  std::vector<NodeId> out;
  out.reserve(nodes_.size());
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    out.push_back(x);
    const Node& n = nodes_[x];
    if (!n.is_leaf()) {
      stack.push_back(n.down);
      stack.push_back(n.up);
    }
  }
  return out;
}

std::vector<NodeId> PlaneTree::internal_nodes() const {
  auto all = preorder();
  std::erase_if(all, [this](NodeId v) { return nodes_[v].is_leaf(); });
  return all;
}

std::size_t PlaneTree::depth(NodeId v) const {
  std::size_t d = 0;
  for (NodeId p = parent(v); p != kNoNode; p = nodes_[p].parent) ++d;
  return d;
}

bool PlaneTree::is_ancestor(NodeId a, NodeId b) const {
  for (NodeId x = b; x != kNoNode; x = nodes_.at(x).parent)
    if (x == a) return true;
  return false;
}

NodeId PlaneTree::lca(NodeId a, NodeId b) const {
  std::size_t da = depth(a);
  std::size_t db = depth(b);
  while (da > db) { a = nodes_[a].parent; --da; }
  while (db > da) { b = nodes_[b].parent; --db; }
  while (a != b) {
    a = nodes_[a].parent;
    b = nodes_[b].parent;
  }
  return a;
}

NodeId PlaneTree::subtree_root(std::span<const NodeId> leaves) const {
  if (leaves.empty()) throw PreconditionError("subtree_root: empty leaf set");
  for (NodeId v : leaves)
    if (!contains(v) || !nodes_[v].is_leaf())
      throw PreconditionError("subtree_root: " + std::to_string(v) + " is not a leaf of the tree");
  NodeId r = leaves.front();
  for (NodeId v : leaves.subspan(1)) r = lca(r, v);
  return r;
}

void PlaneTree::swap_children(NodeId v) {
  Node& n = nodes_.at(v);
  if (n.is_leaf()) throw PreconditionError("cannot switch at leaf " + std::to_string(v));
  std::swap(n.up, n.down);
}

bool operator==(const PlaneTree& a, const PlaneTree& b) {
  if (a.node_count() != b.node_count()) return false;
  std::vector<std::pair<NodeId, NodeId>> stack{{a.root_, b.root_}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    const Node& nx = a.nodes_[x];
    const Node& ny = b.nodes_[y];
    if (nx.is_leaf() != ny.is_leaf()) return false;
    if (nx.is_leaf()) {
      if (nx.label != ny.label) return false;
      continue;
    }
    stack.emplace_back(nx.up, ny.up);
    stack.emplace_back(nx.down, ny.down);
  }
  return true;
}

NodeId subtree_root(const PlaneTree& tree, std::span<const NodeId> leaves) { return tree.subtree_root(leaves); }

}  // namespace tangle
