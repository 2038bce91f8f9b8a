#include "tangle/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>

#include "tangle/enumeration.hpp"
#include "tangle/forbidden.hpp"
#include "tangle/k33.hpp"
#include "tangle/literal.hpp"
#include "tangle/planarity.hpp"
#include "tangle/random.hpp"
#include "tangle/star_graph.hpp"
#include "tangle/subtanglegram.hpp"

namespace tangle {

namespace {

constexpr std::size_t kRequiredCensus = 6;
constexpr double kCensusSeconds = 120;
constexpr double kStretchSeconds = 1800;
constexpr double kEquivalenceSeconds = 300;
constexpr std::size_t kRandomCrossChecks = 10'000;
constexpr std::size_t kRandomCertificates = 10'000;
constexpr std::size_t kLawCases = 10'000;
constexpr std::size_t kZipCases = 1'000;

const std::vector<std::size_t> kTotals{0, 1, 1, 2, 13, 114, 1509, 25595};
const std::vector<std::size_t> kPlanar{0, 1, 1, 2, 11, 76, 649, 6173};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt(const char* format, double a, double b = 0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

// A failure counter that remembers the first offending input.
struct Failures {
  std::size_t count = 0;
  std::string first;

  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  std::string describe(std::size_t checked, const std::string& unit) const {
    std::string out = std::to_string(checked) + " " + unit + ", " + std::to_string(count) + " failures";
    if (count) out += " (first: " + first + ")";
    return out;
  }
};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

class Runner {
 public:
  explicit Runner(const AcceptanceOptions& options) : options_(options) {}

  std::vector<CriterionResult> run() {
    criterion(1, "census counts for n = 1..6", [this] { return census_counts(); });
    criterion(2, "planar iff no No6/No13 subset, all 1640 tanglegrams of size <= 6", [this] { return equivalence(); });
    criterion(3, "is_planar agrees with star-graph planarity", [this] { return star_cross_check(); });
    criterion(4, "crossing-critical tanglegrams: 2 at n = 4, none at n = 3, 5, 6", [this] { return critical(); });
    criterion(5, "crt of the 13 size-4 tanglegrams", [this] { return crt_values(); });
    criterion(6, "certificate soundness on random tanglegrams", [this] { return certificates(); });
    criterion(7, "K3,3 subdivisions for non-planar tanglegrams of size <= 5", [this] { return k33(); });
    criterion(8, "switch, mirror, key and induction laws", [this] { return laws(); });
    criterion(9, "zip merge on random legal instances", [this] { return zips(); });
    if (options_.stretch) criterion(10, "census counts for n = 7 (stretch)", [this] { return stretch(); });
    return std::move(results_);
  }

 private:
  struct Outcome {
    bool passed;
    std::string detail;
  };

  void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    CriterionResult r{id, name, false, {}, 0};
    try {
      const Outcome o = body();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = since(start);
    if (options_.log)
      *options_.log << (r.passed ? "PASS" : "FAIL") << "  criterion " << id << ": " << name << " -- " << r.detail
                    << fmt(" [%.1f s]", r.seconds) << std::endl;
    results_.push_back(std::move(r));
  }

  Rng rng(int id) const { return Rng(options_.seed + static_cast<std::uint64_t>(id)); }

  const Census& census(std::size_t n) {
    if (census_.size() <= n) census_.resize(n + 1);
    if (census_[n].size != n) census_[n] = enumerate_tanglegrams(n);
    return census_[n];
  }

  Outcome census_counts() {
    const auto start = Clock::now();
    Failures f;
    for (std::size_t n = 1; n <= kRequiredCensus; ++n) {
      const Census& c = census(n);
      if (c.entries.size() != kTotals[n] || c.stats.planar != kPlanar[n])
        f.add("n=" + std::to_string(n) + " gives " + std::to_string(c.entries.size()) + "/" +
              std::to_string(c.stats.planar));
    }
    const double seconds = since(start);
    return {f.count == 0 && seconds < kCensusSeconds,
            f.describe(kRequiredCensus, "sizes") + fmt(", %.1f s (limit %.0f s)", seconds, kCensusSeconds)};
  }

  Outcome stretch() {
    const auto start = Clock::now();
    const Census c = enumerate_tanglegrams(7);
    const double seconds = since(start);
    const bool ok = c.entries.size() == kTotals[7] && c.stats.planar == kPlanar[7];
    return {ok && seconds < kStretchSeconds,
            std::to_string(c.entries.size()) + " total, " + std::to_string(c.stats.planar) + " planar" +
                fmt(", %.1f s (limit %.0f s)", seconds, kStretchSeconds)};
  }

  Outcome equivalence() {
    const auto start = Clock::now();
    Failures f;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= kRequiredCensus; ++n)
      for (const auto& [key, t] : census(n).entries) {
        ++checked;
        if (is_planar(t) == brute_force_forbidden(t).has_value()) f.add(key.hex());
      }
    const double seconds = since(start);
    return {f.count == 0 && checked == 1640 && seconds < kEquivalenceSeconds,
            f.describe(checked, "tanglegrams") + fmt(", %.1f s (limit %.0f s)", seconds, kEquivalenceSeconds)};
  }

  Outcome star_cross_check() {
    Failures f;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= kRequiredCensus; ++n)
      for (const auto& [key, t] : census(n).entries) {
        ++checked;
        if (is_planar(t) != star_planarity(t)) f.add(key.hex());
      }
    Rng r = rng(3);
    for (std::size_t i = 0; i < kRandomCrossChecks; ++i) {
      const Tanglegram t = random_tanglegram(uniform(r, 7, 12), r);
      ++checked;
      if (is_planar(t) != star_planarity(t)) f.add(serialize(t));
    }
    return {f.count == 0, f.describe(checked, "tanglegrams")};
  }

  Outcome critical() {
    Failures f;
    for (std::size_t n = 3; n <= kRequiredCensus; ++n) {
      const std::size_t expected = n == 4 ? 2 : 0;
      const std::size_t got = count_crossing_critical(census(n));
      if (got != expected) f.add("n=" + std::to_string(n) + " has " + std::to_string(got));
    }
    std::vector<CanonicalKey> critical_keys;
    for (const auto& [key, t] : census(4).entries)
      if (is_crossing_critical(t)) critical_keys.push_back(key);
    std::vector<CanonicalKey> refs{reference_key(ForbiddenKind::no6), reference_key(ForbiddenKind::no13)};
    std::sort(refs.begin(), refs.end());
    if (critical_keys != refs) f.add("size-4 critical classes are not the two references");
    return {f.count == 0, f.describe(4, "sizes")};
  }

  Outcome crt_values() {
    Failures f;
    std::size_t checked = 0;
    for (const auto& [key, t] : census(4).entries) {
      ++checked;
      const std::uint64_t expected = classify_forbidden(t) ? 1 : 0;
      const CrtResult r = crt(t);
      if (r.value != expected || crossings(r.optimal_layout) != expected) f.add(key.hex());
    }
    return {f.count == 0 && checked == 13, f.describe(checked, "tanglegrams")};
  }

  Outcome certificates() {
    Failures f;
    Rng r = rng(6);
    std::size_t nonplanar = 0;
    for (std::size_t i = 0; i < kRandomCertificates; ++i) {
      const Tanglegram t = random_tanglegram(uniform(r, 5, 12), r);
      const PlanarityCertificate cert = find_forbidden(t);
      bool ok = cert.layout.has_value() != cert.witness.has_value();
      if (ok && cert.witness) {
        ++nonplanar;
        const Tanglegram sub = induce(t, cert.witness->edges);
        ok = canonical_key(sub) == reference_key(cert.witness->kind);
      } else if (ok) {
        ok = crossings(*cert.layout) == 0 && labeled_form(*cert.layout) == labeled_form(t);
      }
      ok = ok && cert.planar() == is_planar(t);
      if (!ok) f.add(serialize(t));
    }
    return {f.count == 0, f.describe(kRandomCertificates, "tanglegrams") + ", " + std::to_string(nonplanar) +
                              " non-planar"};
  }

  Outcome k33() {
    Failures f;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 5; ++n)
      for (const auto& [key, t] : census(n).entries) {
        if (is_planar(t)) continue;
        ++checked;
        std::string reason;
        if (!validate_k33(star_graph(t), k33_witness(t), &reason)) f.add(key.hex() + ": " + reason);
      }
    return {f.count == 0 && checked == kTotals[4] + kTotals[5] - kPlanar[4] - kPlanar[5],
            f.describe(checked, "non-planar tanglegrams")};
  }

  Outcome laws() {
    Rng r = rng(8);
    Failures f;
    auto random_vertex = [&](const Tanglegram& t) {
      const Side s = uniform(r, 0, 1) ? Side::right : Side::left;
      const auto internal = t.tree(s).internal_nodes();
      return Vertex{s, internal[uniform(r, 0, internal.size() - 1)]};
    };
    auto next = [&](std::size_t lo) { return random_tanglegram(uniform(r, lo, 12), r); };
    for (std::size_t i = 0; i < kLawCases; ++i) {
      const Tanglegram t = next(2);
      const Vertex v = random_vertex(t);
      if (serialize(switch_at(switch_at(t, v), v)) != serialize(t)) f.add("switch involution: " + serialize(t));
    }
    for (std::size_t i = 0; i < kLawCases; ++i) {
      const Tanglegram t = next(2);
      const Vertex v = random_vertex(t);
      if (serialize(mirror_at(mirror_at(t, v), v)) != serialize(t)) f.add("mirror involution: " + serialize(t));
    }
    for (std::size_t i = 0; i < kLawCases; ++i) {
      const Tanglegram t = next(2);
      const Vertex v = random_vertex(t);
      const auto key = canonical_key(t);
      if (canonical_key(switch_at(t, v)) != key || canonical_key(mirror_at(t, v)) != key ||
          canonical_key(random_switches(t, r)) != key)
        f.add("key invariance: " + serialize(t));
    }
    for (std::size_t i = 0; i < kLawCases; ++i) {
      const Tanglegram t = next(2);
      const auto edges = random_edge_subset(t.size(), 1, r);
      if (canonical_key(induce(random_switches(t, r), edges)) != canonical_key(induce(t, edges)))
        f.add("induce commutes with switches: " + serialize(t));
    }
    for (std::size_t i = 0; i < kLawCases; ++i) {
      const Tanglegram t = next(2);
      const auto outer = random_edge_subset(t.size(), 1, r);
      const auto inner = random_edge_subset(outer.size(), 1, r);
      std::vector<EdgeId> inner_in_t;
      for (EdgeId e : inner) inner_in_t.push_back(outer[e]);
      if (canonical_key(induce(induce(t, outer), inner)) != canonical_key(induce(t, inner_in_t)))
        f.add("induce monotonicity: " + serialize(t));
    }
    return {f.count == 0, f.describe(5 * kLawCases, "cases over 5 laws")};
  }

  Outcome zips() {
    Rng r = rng(9);
    Failures f;
    for (std::size_t i = 0; i < kZipCases; ++i) {
      const ZipInstance z = random_zip_instance(uniform(r, 3, 12), r);
      const Tanglegram merged = lemma_zip(z.full, z.set1, z.set2, z.layout1, z.layout2);
      const auto boundary = outer_boundary(merged);
      const std::string f_label = z.full.edge_label(z.shared);
      auto other_extreme = [&](const Tanglegram& layout) {
        const auto b = outer_boundary(layout);
        return layout.edge_label(layout.edge_label(b.top_edge) == f_label ? b.bottom_edge : b.top_edge);
      };
      const bool ok = crossings(merged) == 0 && labeled_form(merged) == labeled_form(z.full) &&
                      z.full.edge_label(boundary.top_edge) == other_extreme(z.layout1) &&
                      z.full.edge_label(boundary.bottom_edge) == other_extreme(z.layout2);
      if (!ok) f.add(serialize(z.full));
    }
    return {f.count == 0, f.describe(kZipCases, "instances")};
  }

  const AcceptanceOptions& options_;
  std::vector<Census> census_;
  std::vector<CriterionResult> results_;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) { return Runner(options).run(); }

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

}  // namespace tangle
