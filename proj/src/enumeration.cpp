#include "tangle/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "tangle/error.hpp"
#include "tangle/forbidden.hpp"
#include "tangle/planarity.hpp"

namespace tangle {

namespace {

// Shapes as arenas in preorder with unlabelled leaves.
using Shape = std::vector<Node>;

void append_shape(Shape& out, const Shape& part, NodeId offset) {
  for (Node node : part) {
    if (!node.is_leaf()) {
      node.up += offset;
      node.down += offset;
    }
    out.push_back(node);
  }
}

std::vector<std::vector<Shape>> shapes_up_to(std::size_t n) {
  std::vector<std::vector<Shape>> table{{}, {Shape(1)}};
  while (table.size() <= n) {
    const std::size_t k = table.size();
    std::vector<Shape> current;
    for (std::size_t a = 1; 2 * a <= k; ++a) {
      const std::size_t b = k - a;
      for (std::size_t i = 0; i < table[a].size(); ++i)
        for (std::size_t j = (a == b ? i : 0); j < table[b].size(); ++j) {
          Shape s(1);
          s[0].up = 1;
          s[0].down = static_cast<NodeId>(1 + table[a][i].size());
          append_shape(s, table[a][i], 1);
          append_shape(s, table[b][j], s[0].down);
          current.push_back(std::move(s));
        }
    }
    table.push_back(std::move(current));
  }
  return table;
}

// Fills leaf labels in preorder (which is top to bottom).
PlaneTree label_shape(Shape shape, const std::vector<std::string>& labels) {
  std::size_t next = 0;
  for (Node& node : shape)
    if (node.is_leaf()) node.label = labels[next++];
  return PlaneTree(std::move(shape), 0);
}

}  // namespace

std::vector<PlaneTree> tree_shapes(std::size_t n) {
  if (n == 0) throw PreconditionError("tree_shapes: size must be positive");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  const auto table = shapes_up_to(n);
  std::vector<PlaneTree> out;
  for (const Shape& s : table[n]) out.push_back(label_shape(s, labels));
  return out;
}

Census enumerate_tanglegrams(std::size_t n, const CensusOptions& options) {
  if (n == 0) throw PreconditionError("enumerate_tanglegrams: size must be positive");
  if (n > options.max_size) throw BoundExceeded("enumerate_tanglegrams", n, options.max_size);

  const auto shapes = shapes_up_to(n)[n];
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);

  std::vector<std::vector<std::size_t>> matchings;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do matchings.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::pair<std::size_t, std::size_t>> shape_pairs;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = 0; j < shapes.size(); ++j) shape_pairs.emplace_back(i, j);
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(shape_pairs.begin(), shape_pairs.end(), rng);
    std::shuffle(matchings.begin(), matchings.end(), rng);
  }

  Census census;
  census.size = n;
  CanonicalOptions canon;
  canon.max_size = std::max(canon.max_size, n);
  std::vector<std::string> right_labels(n);
  for (const auto& [i, j] : shape_pairs) {
    const PlaneTree left = label_shape(shapes[i], labels);
    for (const auto& m : matchings) {
      for (std::size_t k = 0; k < n; ++k) right_labels[k] = labels[m[k]];
      Tanglegram t(left, label_shape(shapes[j], right_labels));
      auto key = canonical_key(t, canon);
      census.entries.try_emplace(std::move(key), std::move(t));
    }
  }

  census.stats.total = census.entries.size();
  if (options.classify) {
    for (const auto& [key, t] : census.entries) {
      if (is_planar(t)) {
        ++census.stats.planar;
      } else {
        ++census.stats.nonplanar;
        if (is_crossing_critical(t)) ++census.stats.crossing_critical;
      }
    }
  }
  return census;
}

std::size_t count_planar(const Census& census) {
  return static_cast<std::size_t>(std::count_if(census.entries.begin(), census.entries.end(),
                                                [](const auto& entry) { return is_planar(entry.second); }));
}

std::size_t count_crossing_critical(const Census& census) {
  return static_cast<std::size_t>(std::count_if(census.entries.begin(), census.entries.end(),
                                                [](const auto& entry) { return is_crossing_critical(entry.second); }));
}

}  // namespace tangle
