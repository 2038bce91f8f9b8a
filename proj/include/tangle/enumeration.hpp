#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tangle/layout.hpp"

namespace tangle {

struct CensusStats {
  std::size_t total = 0;
  std::size_t planar = 0;
  std::size_t nonplanar = 0;
  std::size_t crossing_critical = 0;
};

/// All tanglegrams of one size, one representative per switch class.
struct Census {
  std::size_t size = 0;
  std::map<CanonicalKey, Tanglegram> entries;
  CensusStats stats;
};

struct CensusOptions {
  std::size_t max_size = 7;
  /// Shuffle the candidate order with this seed. The key set does not
  /// depend on it; the stored representatives may.
  std::optional<std::uint64_t> shuffle_seed;
  /// Fill the planar / crossing-critical statistics.
  bool classify = true;
};

/// One plane representative of every (non-plane) binary tree shape with
/// `n` leaves, leaves labelled 1..n top to bottom.
std::vector<PlaneTree> tree_shapes(std::size_t n);

/// Every pair of shapes times every matching, deduplicated by canonical key.
/// Throws PreconditionError for n = 0 and BoundExceeded above the bound.
Census enumerate_tanglegrams(std::size_t n, const CensusOptions& options = {});

std::size_t count_planar(const Census& census);
std::size_t count_crossing_critical(const Census& census);

}  // namespace tangle
