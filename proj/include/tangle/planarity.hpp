#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "tangle/tanglegram.hpp"

namespace tangle {

/// True when some layout in the switch class of `t` has no crossings.
bool is_planar(const Tanglegram& t);

/// A zero-crossing layout obtained from `t` by switches; `t` itself when it
/// already has no crossings.
std::optional<Tanglegram> planar_layout(const Tanglegram& t);

/// Calls `visit` once for every zero-crossing layout in the switch class of
/// `t` (these correspond one-to-one to orientations of the left tree), in a
/// deterministic order. Stops early when `visit` returns false. Returns the
/// number of layouts visited.
std::size_t for_each_planar_layout(const Tanglegram& t, const std::function<bool(const Tanglegram&)>& visit);

struct CrtResult {
  std::uint64_t value;
  Tanglegram optimal_layout;
};

struct CrtOptions {
  std::size_t max_size = 12;
};

/// Exact minimum number of crossings over the switch class of `t`, by
/// branch-and-bound over left orientations. For a fixed left order the best
/// right orientation is found vertex by vertex, since the crossings decided
/// at each right vertex are independent of the others.
/// Throws BoundExceeded above `options.max_size`.
CrtResult crt(const Tanglegram& t, const CrtOptions& options = {});

}  // namespace tangle
