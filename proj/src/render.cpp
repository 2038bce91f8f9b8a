#include "tangle/render.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "tangle/error.hpp"
#include "tangle/layout.hpp"

namespace tangle {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

struct Point {
  double x;
  double y;
};

// Leaves on x = 0 spaced vertically; an internal vertex sits one level
// further out than its deeper child, vertically centred between children.
std::vector<Point> tree_positions(const PlaneTree& tree, const RenderSpec& spec, double direction) {
  std::vector<Point> pos(tree.node_count());
  std::vector<int> height(tree.node_count(), 0);
  std::size_t next = 0;
  for (NodeId leaf : tree.leaves()) pos[leaf] = {0.0, static_cast<double>(next++) * spec.leaf_spacing};
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    if (tree.is_leaf(v)) continue;
    height[v] = 1 + std::max(height[tree.up(v)], height[tree.down(v)]);
    pos[v] = {direction * height[v] * spec.level_width, (pos[tree.up(v)].y + pos[tree.down(v)].y) / 2.0};
  }
  return pos;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const Tanglegram& layout, const RenderSpec& spec) {
  if (spec.leaf_spacing <= 0 || spec.level_width <= 0 || spec.strip_width <= 0 || spec.tree_stroke <= 0 ||
      spec.matching_stroke <= 0 || spec.margin < 0)
    throw PreconditionError("render_svg: dimensions must be positive");

  auto left = tree_positions(layout.left(), spec, -1.0);
  auto right = tree_positions(layout.right(), spec, 1.0);
  for (Point& p : right) p.x += spec.strip_width;

  double min_x = 0, max_x = spec.strip_width, max_y = 0;
  for (const Point& p : left) min_x = std::min(min_x, p.x);
  for (const Point& p : right) max_x = std::max(max_x, p.x);
  for (const Point& p : left) max_y = std::max(max_y, p.y);
  const double label_room = 14.0;
  const double vx = min_x - spec.margin;
  const double vy = -spec.margin;
  const double width = max_x - min_x + 2 * spec.margin;
  const double height = max_y + 2 * spec.margin;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(vx) + " " + num(vy) + " " + num(width) +
         " " + num(height) + "\" width=\"" + num(width) + "\" height=\"" + num(height) + "\">\n";
  svg += "<g stroke=\"black\" stroke-width=\"" + num(spec.tree_stroke) + "\" fill=\"none\">\n";
  for (Side s : {Side::left, Side::right}) {
    const PlaneTree& tree = layout.tree(s);
    const auto& pos = s == Side::left ? left : right;
    for (NodeId v : tree.internal_nodes())
      for (NodeId c : {tree.up(v), tree.down(v)})
        svg += "<line x1=\"" + num(pos[v].x) + "\" y1=\"" + num(pos[v].y) + "\" x2=\"" + num(pos[c].x) +
               "\" y2=\"" + num(pos[c].y) + "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g stroke=\"black\" stroke-width=\"" + num(spec.matching_stroke) + "\" stroke-dasharray=\"4 3\">\n";
  for (const MatchingEdge& m : layout.edges())
    svg += "<line x1=\"" + num(left[m.left_leaf].x) + "\" y1=\"" + num(left[m.left_leaf].y) + "\" x2=\"" +
           num(right[m.right_leaf].x) + "\" y2=\"" + num(right[m.right_leaf].y) + "\"/>\n";
  svg += "</g>\n";

  svg += "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"black\">\n";
  for (const MatchingEdge& m : layout.edges()) {
    const std::string label = escape(layout.edge_label(m.id));
    svg += "<text x=\"" + num(left[m.left_leaf].x + 3) + "\" y=\"" + num(left[m.left_leaf].y - 3) + "\">" + label +
           "</text>\n";
    svg += "<text x=\"" + num(right[m.right_leaf].x - label_room) + "\" y=\"" + num(right[m.right_leaf].y - 3) +
           "\">" + label + "</text>\n";
  }
  svg += "</g>\n";

  if (spec.highlight_crossings) {
    // Matching edges are straight segments between x = 0 and x = strip;
    // two of them cross where their vertical offsets swap sign.
    svg += "<g fill=\"red\" class=\"crossings\">\n";
    const auto& edges = layout.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const double a0 = left[edges[i].left_leaf].y, a1 = right[edges[i].right_leaf].y;
        const double b0 = left[edges[j].left_leaf].y, b1 = right[edges[j].right_leaf].y;
        if ((a0 - b0) * (a1 - b1) >= 0) continue;
        const double t = (a0 - b0) / ((a0 - b0) - (a1 - b1));
        svg += "<circle cx=\"" + num(t * spec.strip_width) + "\" cy=\"" + num(a0 + t * (a1 - a0)) +
               "\" r=\"3.00\"/>\n";
      }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace tangle
