#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "tangle/error.hpp"
#include "tangle/layout.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

/// The two non-planar tanglegrams of size 4.
enum class ForbiddenKind { no6, no13 };

/// "No6" / "No13".
const char* to_string(ForbiddenKind kind) noexcept;

/// Stored representatives:
///   No. 6:  (((1,2),3),4) | (((1,4),3),2)   two caterpillars
///   No. 13: ((1,2),(3,4)) | ((1,3),(2,4))   two balanced trees
const Tanglegram& reference(ForbiddenKind kind);
const CanonicalKey& reference_key(ForbiddenKind kind);

/// Which reference a size-4 tanglegram is, if any.
std::optional<ForbiddenKind> classify_forbidden(const Tanglegram& t);

struct ForbiddenWitness {
  ForbiddenKind kind;
  std::array<EdgeId, 4> edges;  // ascending
};

/// Exactly one of `layout` (zero crossings) and `witness` is set.
struct PlanarityCertificate {
  std::optional<Tanglegram> layout;
  std::optional<ForbiddenWitness> witness;

  bool planar() const noexcept { return layout.has_value(); }
};

/// Independent check of a certificate against `t`: the layout must be a
/// zero-crossing layout of t, the witness must induce its claimed reference.
bool verify_certificate(const Tanglegram& t, const PlanarityCertificate& cert);
bool verify_witness(const Tanglegram& t, const ForbiddenWitness& witness);

struct CriticalCore {
  Tanglegram core;
  std::vector<EdgeId> edges;  // parent edge ids, ascending
};

/// Non-planar and every proper induced subtanglegram planar. Checking the
/// single-edge deletions suffices because planarity is inherited by induced
/// subtanglegrams.
bool is_crossing_critical(const Tanglegram& t);

/// Deletes matching edges in ascending id order whenever the rest stays
/// non-planar, then checks minimality. A failed deletion never succeeds
/// later on a smaller set, so one pass gives the same core as restarting
/// after every deletion. Throws PreconditionError if `t` is planar.
CriticalCore crossing_critical_core(const Tanglegram& t);

/// Planar: a zero-crossing layout. Non-planar: four matching edges inducing
/// No. 6 or No. 13, found by the constructive case analysis on the
/// crossing-critical core. Every witness is checked against the references
/// before it is returned; a failed check or an impossible case raises
/// InvariantViolation.
PlanarityCertificate find_forbidden(const Tanglegram& t);

/// First 4-subset of edges (lexicographic in sorted ids) inducing a
/// reference tanglegram.
std::optional<ForbiddenWitness> brute_force_forbidden(const Tanglegram& t);

/// The three-edge pattern of the marked-edge lemma, with the mark on the
/// right tree edge above leaf 2:  ((3,2),1) | (3,(2,1)).
const Tanglegram& kukac_pattern();
TreeEdge kukac_pattern_mark();

/// Raised when some planar layout puts the marked edge on the boundary of
/// the infinite face. `layout()` is such a layout.
class KukacPreconditionError : public PreconditionError {
 public:
  KukacPreconditionError(const std::string& what, Tanglegram layout)
      : PreconditionError(what), layout_(std::move(layout)) {}

  const Tanglegram& layout() const noexcept { return layout_; }

 private:
  Tanglegram layout_;
};

struct KukacOptions {
  /// Verify that no planar layout exposes the mark. When false the caller
  /// vouches for it; a violation then surfaces as InvariantViolation.
  bool check_precondition = true;
  std::size_t max_size = 16;
};

/// Given a planar `f` and a tree edge that is on the outer boundary of no
/// planar layout, three matching edges inducing kukac_pattern() with the
/// marked edge on the path that becomes the pattern's marked edge. Follows
/// the constructive proof: walk from the root towards the mark to the first
/// never-exposed edge, read e1, e2, e3 off a layout exposing its upper
/// endpoint, then correct with an edge below the mark when needed.
std::array<EdgeId, 3> lemma_kukac(const Tanglegram& f, TreeEdge marked, const KukacOptions& options = {});

/// Merges planar layouts of the subtanglegrams induced by `e_set1` and
/// `e_set2` (which share exactly one edge f and cover all of `f_full`) into
/// a planar layout of `f_full`. The layouts must carry the labels of
/// `f_full`, have f on the outer boundary, and the scars of each set in the
/// other's subtanglegram must lie on f's root-to-root path. The result has
/// e1 (the other boundary edge of layout1) on top and e2 at the bottom.
/// Throws PreconditionError naming the violated condition.
Tanglegram lemma_zip(const Tanglegram& f_full, std::span<const EdgeId> e_set1, std::span<const EdgeId> e_set2,
                     const Tanglegram& layout1, const Tanglegram& layout2);

}  // namespace tangle
