#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "tangle/tanglegram.hpp"

namespace tangle {

using Rng = std::mt19937_64;

/// Labels "1".."n".
std::vector<std::string> numeric_labels(std::size_t n);

/// Uniformly random plane binary tree (Remy's insertion), leaves carrying
/// `labels` top to bottom.
PlaneTree random_plane_tree(std::span<const std::string> labels, Rng& rng);

/// Uniform plane trees on both sides and a uniform matching. The induced
/// distribution on tanglegrams is not uniform.
Tanglegram random_tanglegram(std::size_t n, Rng& rng);

/// A crossing-free layout: two random plane trees over the same leaf order.
Tanglegram random_planar_layout(std::size_t n, Rng& rng);

/// Switches every internal vertex of both trees with probability 1/2.
Tanglegram random_switches(const Tanglegram& t, Rng& rng);

/// Random subset of the edge ids 0..n-1 with size in [min_size, n].
std::vector<EdgeId> random_edge_subset(std::size_t n, std::size_t min_size, Rng& rng);

/// Inputs satisfying the zip preconditions: a random crossing-free layout is
/// cut along the root-to-root path of a non-extreme edge `shared`; the two
/// sides give the edge sets, and each half gets a random planar layout with
/// `shared` on its outer boundary. `full` is a random switch of the original.
struct ZipInstance {
  Tanglegram full;
  std::vector<EdgeId> set1;
  std::vector<EdgeId> set2;
  EdgeId shared;
  Tanglegram layout1;
  Tanglegram layout2;
};

/// Requires n >= 3.
ZipInstance random_zip_instance(std::size_t n, Rng& rng);

}  // namespace tangle
