#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "tangle/acceptance.hpp"
#include "tangle/enumeration.hpp"
#include "tangle/forbidden.hpp"
#include "tangle/k33.hpp"
#include "tangle/literal.hpp"
#include "tangle/planarity.hpp"
#include "tangle/render.hpp"
#include "tangle/report.hpp"
#include "tangle/subtanglegram.hpp"

using namespace tangle;

namespace {

// Exit codes.
constexpr int kOk = 0;            // planar / success
constexpr int kNonPlanar = 1;     // check: non-planar; selftest: a criterion failed
constexpr int kInputError = 2;    // parse, validation, precondition or bound errors
constexpr int kInternalError = 3; // broken invariant

struct Globals {
  bool json = false;
  std::size_t max_n = 0;  // 0: the operation's own default
  std::optional<std::uint64_t> seed;
};

std::size_t bound_or(const Globals& g, std::size_t fallback) { return g.max_n ? g.max_n : fallback; }

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// A literal, a `.tgl` file, or "-" for standard input.
std::vector<Tanglegram> read_inputs(const std::string& arg) {
  if (arg == "-") return parse_tgl(slurp(std::cin));
  std::error_code ec;
  if (arg.find('|') == std::string::npos && std::filesystem::is_regular_file(arg, ec)) return read_tgl_file(arg);
  return {parse(arg)};
}

Tanglegram read_one(const std::string& arg) {
  auto all = read_inputs(arg);
  if (all.size() != 1)
    throw PreconditionError("expected exactly one tanglegram, got " + std::to_string(all.size()));
  return std::move(all.front());
}

void check_bound(const char* what, const Tanglegram& t, std::size_t bound) {
  if (t.size() > bound) throw BoundExceeded(what, t.size(), bound);
}

int cmd_check(const Globals& g, const std::string& input) {
  const auto items = read_inputs(input);
  nlohmann::json out = nlohmann::json::array();
  int code = kOk;
  for (const Tanglegram& t : items) {
    check_bound("check", t, bound_or(g, 64));
    const auto cert = find_forbidden(t);
    if (!cert.planar()) code = kNonPlanar;
    out.push_back(certificate_json(t, cert));
  }
  std::cout << (items.size() == 1 ? out.front() : out).dump(2) << "\n";
  return code;
}

int cmd_crt(const Globals& g, const std::string& input) {
  const Tanglegram t = read_one(input);
  CrtOptions options;
  options.max_size = bound_or(g, options.max_size);
  const CrtResult r = crt(t, options);
  if (g.json) {
    std::cout << nlohmann::json{{"input", serialize(t)}, {"crt", r.value}, {"layout", serialize(r.optimal_layout)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << r.value << "\n" << serialize(r.optimal_layout) << "\n";
  }
  return kOk;
}

int cmd_witness(const Globals& g, const std::string& input) {
  const Tanglegram t = read_one(input);
  check_bound("witness", t, bound_or(g, 64));
  const auto cert = find_forbidden(t);
  if (cert.planar()) throw PreconditionError("witness: tanglegram is planar, there is no K3,3 subdivision");
  std::cout << certificate_json(t, cert, k33_witness(t)).dump(2) << "\n";
  return kOk;
}

// "e1+e2": the leaves below a sub edge, naming the edge in text output.
std::string leaves_below(const PlaneTree& tree, NodeId x) {
  std::string out;
  for (NodeId leaf : tree.leaves_under(x)) out += (out.empty() ? "" : "+") + tree.label(leaf);
  return out;
}

std::vector<EdgeId> edge_ids(const Tanglegram& t, const std::string& list) {
  std::vector<EdgeId> out;
  std::stringstream ss(list);
  for (std::string label; std::getline(ss, label, ',');) {
    const auto e = t.edge_by_label(label);
    if (!e) throw PreconditionError("induce: no matching edge labelled '" + label + "'");
    out.push_back(*e);
  }
  return out;
}

int cmd_induce(const Globals& g, const std::string& input, const std::string& edges) {
  const Tanglegram t = read_one(input);
  const auto induced = induce_with_scars(t, edge_ids(t, edges));
  if (g.json) {
    std::cout << induced_json(t, induced).dump(2) << "\n";
    return kOk;
  }
  std::cout << serialize(induced.sub) << "\n";
  for (Side s : {Side::left, Side::right}) {
    const auto& scars = induced.scars(s);
    for (NodeId x = 0; x < scars.size(); ++x)
      for (const Scar& scar : scars[x]) {
        std::cout << "scar " << to_string(s) << " above " << leaves_below(induced.sub.tree(s), x) << ":";
        for (EdgeId e : scar.hosted) std::cout << " " << t.edge_label(e);
        std::cout << "\n";
      }
  }
  return kOk;
}

int cmd_census(const Globals& g, std::size_t n, const std::string& emit) {
  CensusOptions options;
  options.max_size = bound_or(g, options.max_size);
  options.shuffle_seed = g.seed;
  const Census c = enumerate_tanglegrams(n, options);
  if (g.json) {
    std::cout << nlohmann::json{{"n", n},
                                {"total", c.stats.total},
                                {"planar", c.stats.planar},
                                {"nonplanar", c.stats.nonplanar},
                                {"crossing_critical", c.stats.crossing_critical}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "n, total, planar, crossing_critical\n"
              << n << ", " << c.stats.total << ", " << c.stats.planar << ", " << c.stats.crossing_critical << "\n";
  }
  if (!emit.empty()) {
    std::vector<Tanglegram> items;
    for (const auto& [key, t] : c.entries) items.push_back(t);
    write_tgl_file(emit, items, "all " + std::to_string(c.entries.size()) + " tanglegrams of size " + std::to_string(n));
  }
  return kOk;
}

int cmd_render(const Globals&, const std::string& input, bool planar, const std::string& output) {
  Tanglegram t = read_one(input);
  if (planar) {
    auto layout = planar_layout(t);
    if (!layout) throw PreconditionError("render --planar: tanglegram is not planar");
    t = std::move(*layout);
  }
  const std::string svg = render_svg(t);
  if (output.empty()) {
    std::cout << svg;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw PreconditionError("render: cannot write " + output);
    out << svg;
  }
  return kOk;
}

int cmd_selftest(const Globals& g, bool stretch) {
  AcceptanceOptions options;
  if (g.seed) options.seed = *g.seed;
  options.stretch = stretch;
  options.log = &std::cout;
  const auto results = run_acceptance(options);
  if (g.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : results)
      out.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    std::cout << out.dump(2) << "\n";
  }
  return all_passed(results) ? kOk : kNonPlanar;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tanglegram planarity with certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--max-n", g.max_n, "Largest input size accepted by exact searches");
  app.add_option("--seed", g.seed, "Seed for shuffling and randomized tests");

  std::string input;
  auto* check = app.add_subcommand("check", "Planarity verdict with a certificate (JSON)");
  check->add_option("input", input, "Literal, .tgl file or '-'")->required();

  auto* crt_cmd = app.add_subcommand("crt", "Minimum number of crossings over all layouts");
  crt_cmd->add_option("input", input, "Literal, .tgl file or '-'")->required();

  auto* witness = app.add_subcommand("witness", "K3,3 subdivision in the star graph of a non-planar input");
  witness->add_option("input", input, "Literal, .tgl file or '-'")->required();

  std::string edges;
  auto* induce_cmd = app.add_subcommand("induce", "Induced subtanglegram with scars");
  induce_cmd->add_option("--edges", edges, "Comma-separated leaf labels")->required();
  induce_cmd->add_option("input", input, "Literal, .tgl file or '-'")->required();

  std::size_t n = 0;
  std::string emit;
  auto* census = app.add_subcommand("census", "Count all tanglegrams of one size");
  census->add_option("n", n, "Size")->required();
  census->add_option("--emit", emit, "Write one representative per class to a .tgl file");

  bool planar = false;
  std::string output;
  auto* render = app.add_subcommand("render", "SVG drawing of a layout");
  render->add_flag("--planar", planar, "Draw a crossing-free layout instead of the literal one");
  render->add_option("-o,--output", output, "Output file (default: standard output)");
  render->add_option("input", input, "Literal, .tgl file or '-'")->required();

  bool stretch = false;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_flag("--stretch", stretch, "Include the n = 7 census");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(g, input);
    if (*crt_cmd) return cmd_crt(g, input);
    if (*witness) return cmd_witness(g, input);
    if (*induce_cmd) return cmd_induce(g, input, edges);
    if (*census) return cmd_census(g, n, emit);
    if (*render) return cmd_render(g, input, planar, output);
    if (*selftest) return cmd_selftest(g, stretch);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
