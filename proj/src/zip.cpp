#include <algorithm>

#include "tangle/forbidden.hpp"
#include "tangle/subtanglegram.hpp"

namespace tangle {

namespace {

std::vector<EdgeId> sorted_set(std::span<const EdgeId> edges) {
  std::vector<EdgeId> out(edges.begin(), edges.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

[[noreturn]] void violated(const std::string& clause) { throw PreconditionError("lemma_zip: " + clause); }

// Edge order of a planar layout of one half, read so that f comes last
// (`f_last`) or first.
std::vector<EdgeId> half_order(const Tanglegram& layout, EdgeId f_label_edge, bool f_last) {
  auto order = edge_order(layout, Side::left);
  if ((order.back() == f_label_edge) != f_last) std::reverse(order.begin(), order.end());
  return order;
}

// Scars of the edges outside `selected` must sit on the tree paths from
// the roots of the induced subtanglegram down to f.
bool scars_on_f_path(const Tanglegram& full, const std::vector<EdgeId>& selected, EdgeId f) {
  const auto induced = induce_with_scars(full, selected);
  const auto f_sub = static_cast<EdgeId>(std::lower_bound(selected.begin(), selected.end(), f) - selected.begin());
  for (Side s : {Side::left, Side::right}) {
    const PlaneTree& tree = induced.sub.tree(s);
    const NodeId f_leaf = induced.sub.leaf_of(f_sub, s);
    const auto& scars = induced.scars(s);
    for (NodeId x = 0; x < scars.size(); ++x)
      if (!scars[x].empty() && !tree.is_ancestor(x, f_leaf)) return false;
  }
  return true;
}

}  // namespace

Tanglegram lemma_zip(const Tanglegram& f_full, std::span<const EdgeId> e_set1, std::span<const EdgeId> e_set2,
                     const Tanglegram& layout1, const Tanglegram& layout2) {
  const auto set1 = sorted_set(e_set1);
  const auto set2 = sorted_set(e_set2);
  const std::size_t n = f_full.size();
  if ((!set1.empty() && set1.back() >= n) || (!set2.empty() && set2.back() >= n)) violated("unknown matching edge");

  std::vector<EdgeId> common;
  std::set_intersection(set1.begin(), set1.end(), set2.begin(), set2.end(), std::back_inserter(common));
  if (common.size() != 1) violated("the two edge sets must share exactly one edge");
  const EdgeId f = common.front();
  if (set1.size() + set2.size() != n + 1) violated("the two edge sets must cover every matching edge");
  if (set1.size() < 2 || set2.size() < 2) violated("each edge set needs an edge besides the shared one");

  const Tanglegram* layouts[2] = {&layout1, &layout2};
  const std::vector<EdgeId>* sets[2] = {&set1, &set2};
  EdgeId boundary_edge[2] = {kNoEdge, kNoEdge};  // as ids of f_full
  EdgeId f_local[2] = {kNoEdge, kNoEdge};
  for (int i = 0; i < 2; ++i) {
    const Tanglegram& layout = *layouts[i];
    const std::string which = "layout" + std::to_string(i + 1);
    if (labeled_form(layout) != labeled_form(induce(f_full, *sets[i])))
      violated(which + " is not a layout of the subtanglegram induced by its edge set");
    if (crossings(layout) != 0) violated(which + " has crossings");
    const auto boundary = outer_boundary(layout);
    const auto f_id = layout.edge_by_label(f_full.edge_label(f));
    f_local[i] = *f_id;
    EdgeId other;
    if (boundary.top_edge == *f_id)
      other = boundary.bottom_edge;
    else if (boundary.bottom_edge == *f_id)
      other = boundary.top_edge;
    else
      violated("the shared edge is not on the outer boundary of " + which);
    boundary_edge[i] = *f_full.edge_by_label(layout.edge_label(other));
  }
  if (!scars_on_f_path(f_full, set1, f) || !scars_on_f_path(f_full, set2, f))
    violated("scars of one edge set do not lie on the shared edge's root-to-root path in the other");

  // Half 1 above the straightened f-path, half 2 below it.
  std::vector<EdgeId> order;
  order.reserve(n);
  for (EdgeId local : half_order(layout1, f_local[0], true))
    order.push_back(*f_full.edge_by_label(layout1.edge_label(local)));
  for (EdgeId local : half_order(layout2, f_local[1], false))
    if (local != f_local[1]) order.push_back(*f_full.edge_by_label(layout2.edge_label(local)));

  auto merged = orient_to_order(f_full, order);
  if (!merged) throw InvariantViolation("lemma_zip: merged order is not realizable by the trees");
  const auto boundary = outer_boundary(*merged);
  if (crossings(*merged) != 0 || boundary.top_edge != boundary_edge[0] || boundary.bottom_edge != boundary_edge[1])
    throw InvariantViolation("lemma_zip: merged layout is not planar with the designated boundary edges");
  return *std::move(merged);
}

}  // namespace tangle
