#include "tangle/tanglegram.hpp"

#include <algorithm>
#include <map>

#include "tangle/error.hpp"

namespace tangle {

const char* to_string(Side s) noexcept { return s == Side::left ? "left" : "right"; }

namespace {

struct LabelLess {
  bool operator()(const std::string& a, const std::string& b) const noexcept { return label_less(a, b); }
};

}  // namespace

Tanglegram::Tanglegram(PlaneTree left, PlaneTree right) : left_(std::move(left)), right_(std::move(right)) {
  const auto lleaves = left_.leaves();
  const auto rleaves = right_.leaves();
  if (lleaves.size() != rleaves.size())
    throw ValidationError("tree sizes differ: " + std::to_string(lleaves.size()) + " vs " +
                          std::to_string(rleaves.size()));

  std::map<std::string, std::pair<NodeId, NodeId>, LabelLess> by_label;
  for (NodeId v : lleaves) by_label[left_.label(v)].first = v;
  for (NodeId v : rleaves) {
    auto it = by_label.find(right_.label(v));
    if (it == by_label.end())
      throw ValidationError("label '" + right_.label(v) + "' appears on the right side only");
    it->second.second = v;
  }
  edges_.reserve(by_label.size());
  left_edge_of_.assign(left_.node_count(), kNoEdge);
  right_edge_of_.assign(right_.node_count(), kNoEdge);
  for (const auto& [label, leaves] : by_label) {
    // Sizes agree and right labels are a subset, so an unmatched left label
    // shows up as a right leaf that was never assigned.
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({id, leaves.first, leaves.second});
    left_edge_of_[leaves.first] = id;
    right_edge_of_[leaves.second] = id;
  }
  for (NodeId v : rleaves)
    if (right_edge_of_[v] == kNoEdge) throw ValidationError("right leaf '" + right_.label(v) + "' is unmatched");
  for (NodeId v : lleaves)
    if (left_edge_of_[v] == kNoEdge)
      throw ValidationError("label '" + left_.label(v) + "' appears on the left side only");
}

std::optional<EdgeId> Tanglegram::edge_by_label(std::string_view label) const {
  if (auto v = left_.find_leaf(label)) return left_edge_of_[*v];
  return std::nullopt;
}

std::optional<EdgeId> Tanglegram::edge_at(Side s, NodeId leaf) const {
  const auto& table = s == Side::left ? left_edge_of_ : right_edge_of_;
  if (leaf >= table.size() || table[leaf] == kNoEdge) return std::nullopt;
  return table[leaf];
}

std::vector<EdgeId> Tanglegram::edges_under(Vertex v) const {
  const auto& table = v.side == Side::left ? left_edge_of_ : right_edge_of_;
  std::vector<EdgeId> out;
  for (NodeId leaf : tree(v.side).leaves_under(v.node)) out.push_back(table[leaf]);
  return out;
}

void Tanglegram::switch_in_place(Vertex v) {
  PlaneTree& t = v.side == Side::left ? left_ : right_;
  if (!t.contains(v.node)) throw PreconditionError("switch: vertex " + std::to_string(v.node) + " not in tree");
  t.swap_children(v.node);
}

bool operator==(const Tanglegram& a, const Tanglegram& b) { return a.left_ == b.left_ && a.right_ == b.right_; }

}  // namespace tangle
