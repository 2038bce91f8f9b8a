#pragma once

#include <string>

#include "tangle/tanglegram.hpp"

namespace tangle {

/// Drawing parameters, in SVG user units. Leaves sit on two vertical lines:
/// the left tree is drawn at x <= 0, the right tree at x >= strip_width, and
/// the matching edges run dashed through the strip between them.
struct RenderSpec {
  double leaf_spacing = 32.0;
  double level_width = 28.0;
  double strip_width = 160.0;
  double tree_stroke = 1.6;
  double matching_stroke = 1.2;
  double margin = 24.0;
  bool highlight_crossings = true;
};

/// SVG drawing of `layout` read literally. Deterministic: equal inputs give
/// byte-identical output. Throws PreconditionError on non-positive sizes.
std::string render_svg(const Tanglegram& layout, const RenderSpec& spec = {});

}  // namespace tangle
