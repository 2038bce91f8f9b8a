#include "tangle/report.hpp"

#include "tangle/literal.hpp"

namespace tangle {

namespace {

std::string vertex_name(const StarGraph& g, std::size_t x) {
  const Vertex v = g.tree_vertex(x);
  return (v.side == Side::left ? "L" : "R") + std::to_string(v.node);
}

}  // namespace

nlohmann::json k33_json(const Tanglegram& t, const K33Witness& w) {
  const StarGraph g = star_graph(t);
  nlohmann::json parts = nlohmann::json::array();
  for (const auto* part : {&w.part_a, &w.part_b}) {
    nlohmann::json names = nlohmann::json::array();
    for (std::size_t x : *part) names.push_back(vertex_name(g, x));
    parts.push_back(std::move(names));
  }
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& path : w.paths) {
    nlohmann::json names = nlohmann::json::array();
    for (std::size_t x : path) names.push_back(vertex_name(g, x));
    paths.push_back(std::move(names));
  }
  return {{"branch_vertices", parts}, {"paths", paths}};
}

nlohmann::json certificate_json(const Tanglegram& t, const PlanarityCertificate& cert,
                                const std::optional<K33Witness>& k33) {
  nlohmann::json out;
  out["input"] = serialize(t);
  out["size"] = t.size();
  out["planar"] = cert.planar();
  if (cert.witness) {
    out["kind"] = to_string(cert.witness->kind);
    out["edges"] = cert.witness->edges;
    nlohmann::json labels = nlohmann::json::array();
    for (EdgeId e : cert.witness->edges) labels.push_back(t.edge_label(e));
    out["edge_labels"] = labels;
    out["layout"] = nullptr;
  } else {
    out["kind"] = nullptr;
    out["edges"] = nlohmann::json::array();
    out["edge_labels"] = nlohmann::json::array();
    out["layout"] = serialize(*cert.layout);
  }
  out["k33"] = k33 ? k33_json(t, *k33) : nlohmann::json(nullptr);
  return out;
}

nlohmann::json induced_json(const Tanglegram& t, const ScarredSubtanglegram& induced) {
  nlohmann::json out;
  out["input"] = serialize(t);
  out["induced"] = serialize(induced.sub);
  out["edge_map"] = induced.edge_map;
  nlohmann::json scars = nlohmann::json::array();
  for (Side s : {Side::left, Side::right}) {
    const auto& per_edge = induced.scars(s);
    for (NodeId x = 0; x < per_edge.size(); ++x)
      for (std::size_t rank = 0; rank < per_edge[x].size(); ++rank) {
        const Scar& scar = per_edge[x][rank];
        nlohmann::json labels = nlohmann::json::array();
        for (EdgeId e : scar.hosted) labels.push_back(t.edge_label(e));
        scars.push_back({{"side", to_string(s)},
                         {"sub_edge", x},
                         {"rank", rank},
                         {"host", scar.host},
                         {"hosted", scar.hosted},
                         {"hosted_labels", labels}});
      }
  }
  out["scars"] = scars;
  return out;
}

}  // namespace tangle
