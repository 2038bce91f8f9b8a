#include "tangle/planarity.hpp"

#include <algorithm>
#include <limits>

#include "tangle/error.hpp"
#include "tangle/layout.hpp"

namespace tangle {

namespace {

std::vector<std::vector<EdgeId>> edges_below(const Tanglegram& t, Side s) {
  const PlaneTree& tree = t.tree(s);
  std::vector<std::vector<EdgeId>> out(tree.node_count());
  for (NodeId v = 0; v < tree.node_count(); ++v) out[v] = t.edges_under({s, v});
  return out;
}

// Depth-first search over left orientations. The left leaf order is refined
// one block at a time (a block is a left subtree whose orientation is still
// open); a branch dies as soon as some right cluster cannot become contiguous.
class PlanarSearch {
 public:
  PlanarSearch(const Tanglegram& t, const std::function<bool(const Tanglegram&)>& visit)
      : t_(t), visit_(visit), left_edges_(edges_below(t, Side::left)) {
    const PlaneTree& right = t.right();
    for (NodeId w : right.internal_nodes()) clusters_.push_back(t.edges_under({Side::right, w}));
    block_of_.resize(t.size());
  }

  std::size_t run() {
    std::vector<NodeId> blocks{t_.left().root()};
    search(blocks);
    return visited_;
  }

 private:
  bool feasible(const std::vector<NodeId>& blocks) {
    std::vector<std::size_t> prefix(blocks.size() + 1, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (EdgeId e : left_edges_[blocks[i]]) block_of_[e] = i;
      prefix[i + 1] = prefix[i] + left_edges_[blocks[i]].size();
    }
    for (const auto& cluster : clusters_) {
      std::size_t lo = blocks.size();
      std::size_t hi = 0;
      for (EdgeId e : cluster) {
        lo = std::min(lo, block_of_[e]);
        hi = std::max(hi, block_of_[e]);
      }
      if (hi <= lo + 1) continue;
      std::size_t inside = 0;
      for (EdgeId e : cluster)
        if (block_of_[e] > lo && block_of_[e] < hi) ++inside;
      if (inside != prefix[hi] - prefix[lo + 1]) return false;
    }
    return true;
  }

  bool search(const std::vector<NodeId>& blocks) {
    if (!feasible(blocks)) return true;
    const PlaneTree& left = t_.left();
    const auto open = std::find_if(blocks.begin(), blocks.end(), [&](NodeId v) { return !left.is_leaf(v); });
    if (open == blocks.end()) {
      std::vector<EdgeId> order;
      order.reserve(blocks.size());
      for (NodeId leaf : blocks) order.push_back(*t_.edge_at(Side::left, leaf));
      auto layout = orient_to_order(t_, order);
      if (!layout) return true;
      ++visited_;
      return visit_(*layout);
    }
    const auto index = static_cast<std::size_t>(open - blocks.begin());
    const NodeId v = *open;
    for (bool keep : {true, false}) {
      std::vector<NodeId> next;
      next.reserve(blocks.size() + 1);
      next.insert(next.end(), blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(index));
      next.push_back(keep ? left.up(v) : left.down(v));
      next.push_back(keep ? left.down(v) : left.up(v));
      next.insert(next.end(), blocks.begin() + static_cast<std::ptrdiff_t>(index) + 1, blocks.end());
      if (!search(next)) return false;
    }
    return true;
  }

  const Tanglegram& t_;
  const std::function<bool(const Tanglegram&)>& visit_;
  std::vector<std::vector<EdgeId>> left_edges_;
  std::vector<std::vector<EdgeId>> clusters_;
  std::vector<std::size_t> block_of_;
  std::size_t visited_ = 0;
};

// Branch-and-bound for crt. Left internal vertices are decided in preorder.
// Every pair of matching edges is split by exactly one right vertex w; once
// the left vertex separating the pair is decided, it is known whether the
// pair crosses with w kept or with w switched. The bound is the sum over w
// of min(crossing, non-crossing) among decided pairs.
class CrtSearch {
 public:
  explicit CrtSearch(const Tanglegram& t) : t_(t) {
    const PlaneTree& left = t.left();
    const PlaneTree& right = t.right();
    order_ = left.internal_nodes();
    effects_.resize(order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) {
      const NodeId u = order_[k];
      const auto upper = t.edges_under({Side::left, left.up(u)});
      const auto lower = t.edges_under({Side::left, left.down(u)});
      for (EdgeId x : upper) {
        const NodeId rx = t.leaf_of(x, Side::right);
        for (EdgeId y : lower) {
          const NodeId ry = t.leaf_of(y, Side::right);
          const NodeId w = right.lca(rx, ry);
          // Unswitched, x is above y on the left; it crosses y iff x sits
          // in the lower subtree of w on the right.
          effects_[k].push_back({w, !right.is_ancestor(right.up(w), rx)});
        }
      }
    }
    crossing_.assign(right.node_count(), 0);
    noncrossing_.assign(right.node_count(), 0);
    choice_.assign(order_.size(), false);
  }

  CrtResult run() {
    dfs(0);
    Tanglegram layout = t_;
    for (std::size_t k = 0; k < order_.size(); ++k)
      if (best_choice_[k]) layout.switch_in_place({Side::left, order_[k]});
    for (NodeId w : t_.right().internal_nodes())
      if (best_crossing_[w] > best_noncrossing_[w]) layout.switch_in_place({Side::right, w});
    if (crossings(layout) != best_) throw InvariantViolation("crt: witness layout does not attain the computed minimum");
    return {best_, std::move(layout)};
  }

 private:
  struct Effect {
    NodeId w;
    bool crosses_when_kept;
  };

  void apply(std::size_t k, bool switched, bool undo) {
    for (const Effect& e : effects_[k]) {
      auto& c = crossing_[e.w];
      auto& nc = noncrossing_[e.w];
      bound_ -= std::min(c, nc);
      auto& slot = (e.crosses_when_kept != switched) ? c : nc;
      if (undo) --slot; else ++slot;
      bound_ += std::min(c, nc);
    }
  }

  std::uint64_t bound_after(std::size_t k, bool switched) {
    apply(k, switched, false);
    const std::uint64_t b = bound_;
    apply(k, switched, true);
    return b;
  }

  void dfs(std::size_t k) {
    if (bound_ >= best_) return;
    if (k == order_.size()) {
      best_ = bound_;
      best_choice_ = choice_;
      best_crossing_ = crossing_;
      best_noncrossing_ = noncrossing_;
      return;
    }
    const std::uint64_t keep = bound_after(k, false);
    const std::uint64_t flip = bound_after(k, true);
    const bool flip_first = flip < keep;
    for (bool switched : {flip_first, !flip_first}) {
      choice_[k] = switched;
      apply(k, switched, false);
      dfs(k + 1);
      apply(k, switched, true);
    }
    choice_[k] = false;
  }

  const Tanglegram& t_;
  std::vector<NodeId> order_;
  std::vector<std::vector<Effect>> effects_;
  std::vector<std::uint64_t> crossing_, noncrossing_;
  std::vector<bool> choice_;
  std::uint64_t bound_ = 0;
  std::uint64_t best_ = std::numeric_limits<std::uint64_t>::max();
  std::vector<bool> best_choice_;
  std::vector<std::uint64_t> best_crossing_, best_noncrossing_;
};

}  // namespace

std::size_t for_each_planar_layout(const Tanglegram& t, const std::function<bool(const Tanglegram&)>& visit) {
  return PlanarSearch(t, visit).run();
}

std::optional<Tanglegram> planar_layout(const Tanglegram& t) {
  if (crossings(t) == 0) return t;
  std::optional<Tanglegram> found;
  for_each_planar_layout(t, [&](const Tanglegram& layout) {
    found = layout;
    return false;
  });
  return found;
}

bool is_planar(const Tanglegram& t) { return planar_layout(t).has_value(); }

CrtResult crt(const Tanglegram& t, const CrtOptions& options) {
  if (t.size() > options.max_size) throw BoundExceeded("crt", t.size(), options.max_size);
  return CrtSearch(t).run();
}

}  // namespace tangle
