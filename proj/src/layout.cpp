#include "tangle/layout.hpp"

#include <algorithm>

#include "tangle/error.hpp"
#include "tangle/literal.hpp"

namespace tangle {

LeafOrder leaf_order(const Tanglegram& t, Side s) { return t.tree(s).leaves(); }

std::vector<EdgeId> edge_order(const Tanglegram& t, Side s) {
  std::vector<EdgeId> out;
  out.reserve(t.size());
  for (NodeId leaf : leaf_order(t, s)) out.push_back(*t.edge_at(s, leaf));
  return out;
}

std::vector<std::size_t> edge_positions(const Tanglegram& t, Side s) {
  std::vector<std::size_t> pos(t.size());
  const auto order = edge_order(t, s);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

std::uint64_t crossings(const Tanglegram& t) {
  // Inversions of the right ranks read in left order, via a Fenwick tree.
  const auto right_pos = edge_positions(t, Side::right);
  const auto left = edge_order(t, Side::left);
  const std::size_t n = left.size();
  std::vector<std::uint32_t> fenwick(n + 1, 0);
  std::uint64_t inversions = 0;
  std::uint64_t seen = 0;
  for (EdgeId e : left) {
    const std::size_t r = right_pos[e] + 1;
    std::uint64_t not_greater = 0;
    for (std::size_t i = r; i > 0; i -= i & (~i + 1)) not_greater += fenwick[i];
    inversions += seen - not_greater;
    for (std::size_t i = r; i <= n; i += i & (~i + 1)) ++fenwick[i];
    ++seen;
  }
  return inversions;
}

Tanglegram switch_at(const Tanglegram& t, Vertex v) {
  Tanglegram out = t;
  out.switch_in_place(v);
  return out;
}

Tanglegram mirror_at(const Tanglegram& t, Vertex v) {
  const PlaneTree& tree = t.tree(v.side);
  if (!tree.contains(v.node)) throw PreconditionError("mirror: vertex " + std::to_string(v.node) + " not in tree");
  Tanglegram out = t;
  std::vector<NodeId> stack{v.node};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    if (tree.is_leaf(x)) continue;
    out.switch_in_place({v.side, x});
    stack.push_back(tree.up(x));
    stack.push_back(tree.down(x));
  }
  return out;
}

Tanglegram flip_vertical(const Tanglegram& t) {
  return mirror_at(mirror_at(t, {Side::left, t.left().root()}), {Side::right, t.right().root()});
}

Tanglegram swap_sides(const Tanglegram& t) { return Tanglegram(t.right(), t.left()); }

std::optional<Tanglegram> orient_to_order(const Tanglegram& t, std::span<const EdgeId> order) {
  const std::size_t n = t.size();
  if (order.size() != n) throw PreconditionError("orient_to_order: order length differs from tanglegram size");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) throw PreconditionError("orient_to_order: order is not a permutation");
    pos[order[i]] = i;
  }

  Tanglegram out = t;
  for (Side s : {Side::left, Side::right}) {
    const PlaneTree& tree = t.tree(s);
    std::vector<std::size_t> lo(tree.node_count()), hi(tree.node_count()), count(tree.node_count());
    auto nodes = tree.preorder();
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
      const NodeId v = *it;
      if (tree.is_leaf(v)) {
        lo[v] = hi[v] = pos[*t.edge_at(s, v)];
        count[v] = 1;
        continue;
      }
      const NodeId a = tree.up(v);
      const NodeId b = tree.down(v);
      lo[v] = std::min(lo[a], lo[b]);
      hi[v] = std::max(hi[a], hi[b]);
      count[v] = count[a] + count[b];
      if (hi[v] - lo[v] + 1 != count[v]) return std::nullopt;
      if (lo[b] < lo[a]) out.switch_in_place({s, v});
    }
  }
  return out;
}

bool OuterBoundary::contains(TreeEdge e) const {
  const auto& top = e.side == Side::left ? left_top : right_top;
  const auto& bottom = e.side == Side::left ? left_bottom : right_bottom;
  return std::find(top.begin(), top.end(), e.child) != top.end() ||
         std::find(bottom.begin(), bottom.end(), e.child) != bottom.end();
}

bool OuterBoundary::contains_vertex(Side s, NodeId v, NodeId root) const {
  return v == root || contains({s, v});
}

OuterBoundary outer_boundary(const Tanglegram& layout) {
  OuterBoundary b;
  auto walk = [](const PlaneTree& tree, bool top) {
    std::vector<NodeId> path;
    NodeId v = tree.root();
    while (!tree.is_leaf(v)) {
      v = top ? tree.up(v) : tree.down(v);
      path.push_back(v);
    }
    return path;
  };
  b.left_top = walk(layout.left(), true);
  b.left_bottom = walk(layout.left(), false);
  b.right_top = walk(layout.right(), true);
  b.right_bottom = walk(layout.right(), false);
  const auto order = edge_order(layout, Side::left);
  b.top_edge = order.front();
  b.bottom_edge = order.back();
  return b;
}

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out += digits[c >> 4];
    out += digits[c & 0xF];
  }
  return out;
}

bool same_tanglegram(const Tanglegram& a, const Tanglegram& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

namespace {

std::string labeled_tree(const PlaneTree& tree, NodeId v, std::string& min_label) {
  if (tree.is_leaf(v)) {
    min_label = tree.label(v);
    return tree.label(v);
  }
  std::string ma, mb;
  std::string a = labeled_tree(tree, tree.up(v), ma);
  std::string b = labeled_tree(tree, tree.down(v), mb);
  if (label_less(mb, ma)) {
    std::swap(a, b);
    std::swap(ma, mb);
  }
  min_label = ma;
  return "(" + a + "," + b + ")";
}

}  // namespace

std::string labeled_form(const Tanglegram& t) {
  std::string ml, mr;
  return labeled_tree(t.left(), t.left().root(), ml) + " | " + labeled_tree(t.right(), t.right().root(), mr);
}

}  // namespace tangle
