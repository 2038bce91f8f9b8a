#include "tangle/forbidden.hpp"

#include <algorithm>
#include <numeric>

#include "tangle/literal.hpp"
#include "tangle/planarity.hpp"
#include "tangle/subtanglegram.hpp"

namespace tangle {

namespace {

struct References {
  Tanglegram no6 = parse("(((1,2),3),4) | (((1,4),3),2)");
  Tanglegram no13 = parse("((1,2),(3,4)) | ((1,3),(2,4))");
  CanonicalKey no6_key = canonical_key(no6);
  CanonicalKey no13_key = canonical_key(no13);
};

const References& references() {
  static const References refs;
  return refs;
}

std::vector<EdgeId> all_edges(std::size_t n) {
  std::vector<EdgeId> out(n);
  std::iota(out.begin(), out.end(), EdgeId{0});
  return out;
}

std::vector<EdgeId> without(const std::vector<EdgeId>& edges, EdgeId e) {
  std::vector<EdgeId> out;
  out.reserve(edges.size());
  for (EdgeId x : edges)
    if (x != e) out.push_back(x);
  return out;
}

// Matching edges grouped by which root subtree holds each endpoint.
struct RootSplit {
  std::vector<EdgeId> uu, ud, du, dd;  // left side first

  explicit RootSplit(const Tanglegram& t) {
    const PlaneTree& left = t.left();
    const PlaneTree& right = t.right();
    for (EdgeId e = 0; e < t.size(); ++e) {
      const bool lu = left.is_ancestor(left.up(left.root()), t.leaf_of(e, Side::left));
      const bool ru = right.is_ancestor(right.up(right.root()), t.leaf_of(e, Side::right));
      (lu ? (ru ? uu : ud) : (ru ? du : dd)).push_back(e);
    }
  }
};

ForbiddenWitness make_witness(const Tanglegram& t, std::array<EdgeId, 4> edges, ForbiddenKind claimed) {
  std::sort(edges.begin(), edges.end());
  ForbiddenWitness w{claimed, edges};
  if (!verify_witness(t, w))
    throw InvariantViolation(std::string("find_forbidden: constructed edges do not induce ") + to_string(claimed));
  return w;
}

// The case analysis on a crossing-critical tanglegram. Returns edge ids of
// `core` itself.
ForbiddenWitness witness_in_core(const Tanglegram& core) {
  Tanglegram t = core;
  // Make both E_u (up-up) and E_d (down-down) nonempty.
  if (RootSplit(t).uu.empty()) t.switch_in_place({Side::right, t.right().root()});
  if (RootSplit(t).dd.empty()) t.switch_in_place({Side::left, t.left().root()});
  RootSplit split(t);
  if (split.uu.empty() || split.dd.empty())
    throw InvariantViolation("find_forbidden: root switches failed to separate E_u and E_d");

  if (!split.ud.empty() && !split.du.empty())
    return make_witness(core, {split.uu.front(), split.du.front(), split.ud.front(), split.dd.front()},
                        ForbiddenKind::no13);
  if (split.ud.empty() && split.du.empty())
    throw InvariantViolation("find_forbidden: core splits into independent halves, so it is planar");
  if (split.ud.empty()) {
    t = flip_vertical(t);
    split = RootSplit(t);
  }
  if (split.uu.size() >= 2 && split.dd.size() >= 2)
    throw InvariantViolation("find_forbidden: both E_u and E_d have two or more edges in a crossing-critical core");

  // One of E_u, E_d is a single edge e. Removing it leaves a planar
  // tanglegram in which e's scar can never reach the outer face.
  const bool single_down = split.dd.size() == 1;
  const EdgeId e = single_down ? split.dd.front() : split.uu.front();
  const Side mark_side = single_down ? Side::right : Side::left;
  const auto hat = induce_with_scars(t, without(all_edges(t.size()), e));
  const auto mark = hat.scar_edge(mark_side, e);
  if (!mark) throw InvariantViolation("find_forbidden: removed edge has no scar on the expected side");

  KukacOptions options;
  options.check_precondition = false;
  options.max_size = std::max(options.max_size, hat.sub.size());
  const auto triple = lemma_kukac(hat.sub, *mark, options);
  return make_witness(core, {hat.edge_map[triple[0]], hat.edge_map[triple[1]], hat.edge_map[triple[2]], e},
                      ForbiddenKind::no6);
}

}  // namespace

const char* to_string(ForbiddenKind kind) noexcept { return kind == ForbiddenKind::no6 ? "No6" : "No13"; }

const Tanglegram& reference(ForbiddenKind kind) {
  return kind == ForbiddenKind::no6 ? references().no6 : references().no13;
}

const CanonicalKey& reference_key(ForbiddenKind kind) {
  return kind == ForbiddenKind::no6 ? references().no6_key : references().no13_key;
}

std::optional<ForbiddenKind> classify_forbidden(const Tanglegram& t) {
  if (t.size() != 4) return std::nullopt;
  const auto key = canonical_key(t);
  if (key == references().no6_key) return ForbiddenKind::no6;
  if (key == references().no13_key) return ForbiddenKind::no13;
  return std::nullopt;
}

bool verify_witness(const Tanglegram& t, const ForbiddenWitness& witness) {
  auto edges = witness.edges;
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end() || edges.back() >= t.size()) return false;
  return classify_forbidden(induce(t, edges)) == witness.kind;
}

bool verify_certificate(const Tanglegram& t, const PlanarityCertificate& cert) {
  if (cert.layout.has_value() == cert.witness.has_value()) return false;
  if (cert.witness) return verify_witness(t, *cert.witness);
  const Tanglegram& layout = *cert.layout;
  return labeled_form(layout) == labeled_form(t) && crossings(layout) == 0;
}

bool is_crossing_critical(const Tanglegram& t) {
  if (is_planar(t)) return false;
  const auto edges = all_edges(t.size());
  return std::all_of(edges.begin(), edges.end(), [&](EdgeId e) { return is_planar(induce(t, without(edges, e))); });
}

CriticalCore crossing_critical_core(const Tanglegram& t) {
  if (is_planar(t)) throw PreconditionError("crossing_critical_core: tanglegram is planar");
  auto kept = all_edges(t.size());
  for (EdgeId e = 0; e < t.size(); ++e) {
    auto candidate = without(kept, e);
    if (!is_planar(induce(t, candidate))) kept = std::move(candidate);
  }
  Tanglegram core = induce(t, kept);
  for (EdgeId e = 0; e < core.size(); ++e)
    if (!is_planar(induce(core, without(all_edges(core.size()), e))))
      throw InvariantViolation("crossing_critical_core: reduced tanglegram is not minimal");
  return {std::move(core), std::move(kept)};
}

PlanarityCertificate find_forbidden(const Tanglegram& t) {
  if (auto layout = planar_layout(t)) return {std::move(layout), std::nullopt};
  const CriticalCore critical = crossing_critical_core(t);
  const ForbiddenWitness local = witness_in_core(critical.core);
  std::array<EdgeId, 4> edges{};
  for (std::size_t i = 0; i < 4; ++i) edges[i] = critical.edges[local.edges[i]];
  return {std::nullopt, make_witness(t, edges, local.kind)};
}

std::optional<ForbiddenWitness> brute_force_forbidden(const Tanglegram& t) {
  const auto n = static_cast<EdgeId>(t.size());
  for (EdgeId a = 0; a < n; ++a)
    for (EdgeId b = a + 1; b < n; ++b)
      for (EdgeId c = b + 1; c < n; ++c)
        for (EdgeId d = c + 1; d < n; ++d) {
          const std::array<EdgeId, 4> edges{a, b, c, d};
          if (auto kind = classify_forbidden(induce(t, edges))) return ForbiddenWitness{*kind, edges};
        }
  return std::nullopt;
}

}  // namespace tangle
