#include <algorithm>

#include "tangle/error.hpp"
#include "tangle/layout.hpp"

namespace tangle {

namespace {

// Shape code of every subtree: preorder bits, 0 = internal, 1 = leaf, with
// the children of each vertex concatenated in increasing code order. A code
// of a k-leaf subtree has fixed length 2k-1 and the code set is prefix-free,
// so this is also the lexicographically smallest preorder encoding.
std::vector<std::string> shape_codes(const PlaneTree& tree) {
  std::vector<std::string> code(tree.node_count());
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    if (tree.is_leaf(v)) {
      code[v] = std::string(1, '\1');
      continue;
    }
    const std::string& a = code[tree.up(v)];
    const std::string& b = code[tree.down(v)];
    code[v] = std::string(1, '\0') + (a <= b ? a + b : b + a);
  }
  return code;
}

struct RightSearch {
  const Tanglegram& t;
  const std::vector<std::string>& code;
  const std::vector<std::size_t>& left_pos;  // edge -> left position

  std::string best_sequence(NodeId v) const {
    const PlaneTree& tree = t.right();
    if (tree.is_leaf(v)) return std::string(1, static_cast<char>(left_pos[*t.edge_at(Side::right, v)]));
    const NodeId a = tree.up(v);
    const NodeId b = tree.down(v);
    std::string sa = best_sequence(a);
    std::string sb = best_sequence(b);
    const int cmp = code[a].compare(code[b]);
    // Equal shapes: both children have sequences of the same length, so the
    // smaller one goes first.
    if (cmp > 0 || (cmp == 0 && sb < sa)) std::swap(sa, sb);
    return sa + sb;
  }
};

}  // namespace

CanonicalKey canonical_key(const Tanglegram& t, const CanonicalOptions& options) {
  const std::size_t n = t.size();
  if (n > options.max_size) throw BoundExceeded("canonical_key", n, options.max_size);

  const PlaneTree& left = t.left();
  const auto left_code = shape_codes(left);
  const auto right_code = shape_codes(t.right());

  std::string prefix(1, static_cast<char>(n));
  prefix += left_code[left.root()];
  prefix += right_code[t.right().root()];

  // Only left vertices whose two subtrees have the same shape leave a free
  // choice; every other left vertex is fixed by the shape order.
  std::vector<NodeId> free_nodes;
  for (NodeId v : left.internal_nodes())
    if (left_code[left.up(v)] == left_code[left.down(v)]) free_nodes.push_back(v);
  std::vector<int> flip(left.node_count(), 0);

  std::vector<std::size_t> left_pos(n);
  const RightSearch right{t, right_code, left_pos};
  std::string best;
  const std::uint64_t combos = std::uint64_t{1} << free_nodes.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    for (std::size_t i = 0; i < free_nodes.size(); ++i) flip[free_nodes[i]] = static_cast<int>((mask >> i) & 1U);

    std::size_t next = 0;
    std::vector<NodeId> stack{left.root()};
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      if (left.is_leaf(v)) {
        left_pos[*t.edge_at(Side::left, v)] = next++;
        continue;
      }
      NodeId first = left.up(v);
      NodeId second = left.down(v);
      const int cmp = left_code[first].compare(left_code[second]);
      if (cmp > 0 || (cmp == 0 && flip[v] != 0)) std::swap(first, second);
      stack.push_back(second);
      stack.push_back(first);
    }

    std::string candidate = right.best_sequence(t.right().root());
    if (mask == 0 || candidate < best) best = std::move(candidate);
  }
  return CanonicalKey(prefix + best);
}

}  // namespace tangle
