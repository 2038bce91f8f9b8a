#pragma once

#include <optional>

#include <json.hpp>

#include "tangle/forbidden.hpp"
#include "tangle/k33.hpp"
#include "tangle/subtanglegram.hpp"

namespace tangle {

/// Certificate document, see docs/certificate.schema.json:
///   { "input", "size", "planar", "kind", "edges", "edge_labels", "layout", "k33" }
/// Star-graph vertices are written as "L<id>" / "R<id>" with tree node ids.
nlohmann::json certificate_json(const Tanglegram& t, const PlanarityCertificate& cert,
                                const std::optional<K33Witness>& k33 = std::nullopt);

nlohmann::json k33_json(const Tanglegram& t, const K33Witness& w);

/// Induced literal, edge map and scars of both sides.
nlohmann::json induced_json(const Tanglegram& t, const ScarredSubtanglegram& induced);

}  // namespace tangle
