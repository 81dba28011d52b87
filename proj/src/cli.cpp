#include "graphdecomp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphdecomp/decomposition.hpp"
#include "graphdecomp/inflation.hpp"
#include "graphdecomp/io.hpp"
#include "graphdecomp/matching.hpp"
#include "graphdecomp/turan.hpp"

namespace graphdecomp::cli {

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string input = "-";
  bool directed = false;
  std::string format = "edge-list";
  std::string output = "json";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("-i,--input", opts.input,
                  "input file, or '-' for standard input");
  cmd->add_flag("--directed", opts.directed, "treat the input as a digraph");
  cmd->add_option("--format", opts.format, "input format")
      ->check(CLI::IsMember({"edge-list", "dot", "dot-subset"}));
  cmd->add_option("--output", opts.output, "report format")
      ->check(CLI::IsMember({"json", "text"}));
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw DomainError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::variant<Digraph, UndirectedGraph> load_graph(const CommonOptions& opts,
                                                  std::istream& in,
                                                  bool directed_flag_given) {
  std::string text = read_input(opts.input, in);
  if (opts.format == "dot" || opts.format == "dot-subset") {
    auto parsed = io::parse_dot(text);
    bool parsed_directed = std::holds_alternative<Digraph>(parsed);
    if (directed_flag_given && opts.directed != parsed_directed)
      throw DomainError("--directed conflicts with the DOT header");
    return parsed;
  }
  if (opts.directed)
    return io::parse_edge_list_digraph(text);
  return io::parse_edge_list_undirected(text);
}

const Digraph& require_digraph(const std::variant<Digraph, UndirectedGraph>& g,
                               const char* command) {
  if (!std::holds_alternative<Digraph>(g))
    throw DomainError(std::string(command) +
                      " needs a directed graph (pass --directed or a digraph "
                      "DOT header)");
  return std::get<Digraph>(g);
}

const UndirectedGraph& require_undirected(
    const std::variant<Digraph, UndirectedGraph>& g, const char* command) {
  if (!std::holds_alternative<UndirectedGraph>(g))
    throw DomainError(std::string(command) + " needs an undirected graph");
  return std::get<UndirectedGraph>(g);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      if (!current.empty()) parts.push_back(std::move(current));
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (!current.empty()) parts.push_back(std::move(current));
  return parts;
}

template <class Graph>
VertexSet set_from_labels(const Graph& g, const std::vector<std::string>& labels) {
  VertexSet s(g.vertex_count());
  for (const std::string& label : labels) {
    auto v = g.find_label(label);
    if (!v) throw DomainError("unknown vertex label '" + label + "'");
    s.set(*v);
  }
  return s;
}

template <class Graph>
json label_array(const Graph& g, const VertexSet& s) {
  std::vector<std::string> labels;
  labels.reserve(s.count());
  for (VertexId v : s) labels.push_back(g.label(v));
  std::sort(labels.begin(), labels.end());
  return json(labels);
}

template <class Graph>
json edge_array(const Graph& g,
                const std::vector<std::pair<VertexId, VertexId>>& links) {
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(links.size());
  for (auto [u, v] : links) {
    std::string a = g.label(u), b = g.label(v);
    if (b < a) std::swap(a, b);
    named.emplace_back(std::move(a), std::move(b));
  }
  std::sort(named.begin(), named.end());
  json out = json::array();
  for (auto& [a, b] : named) out.push_back(json::array({a, b}));
  return out;
}

void emit(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

// ---- inflate ----------------------------------------------------------

struct InflateArgs {
  CommonOptions common;
  std::string set_list;
};

template <class Graph>
int run_inflate_on(const Graph& g, const InflateArgs& args, std::ostream& out) {
  VertexSet u = set_from_labels(g, split(args.set_list, ','));
  InflationTrace trace = hyperinflate(g, u);

  if (args.common.output == "text") {
    out << "input:";
    for (VertexId v : u) out << ' ' << g.label(v);
    out << '\n';
    for (std::size_t i = 1; i < trace.layers.size(); ++i) {
      out << "step " << i << ":";
      for (VertexId v : trace.layers[i]) out << ' ' << g.label(v);
      out << '\n';
    }
    out << "hull:";
    for (VertexId v : trace.fixpoint()) out << ' ' << g.label(v);
    out << '\n';
    out << "stable: " << (trace.steps() == 0 ? "yes" : "no") << '\n';
    return 0;
  }

  json layers = json::array();
  for (const VertexSet& layer : trace.layers)
    layers.push_back(label_array(g, layer));
  json j{{"input", label_array(g, u)},
         {"layers", layers},
         {"hull", label_array(g, trace.fixpoint())},
         {"stable", trace.steps() == 0},
         {"steps", trace.steps()}};
  emit(j, out);
  return 0;
}

// ---- decompose --------------------------------------------------------

json interval_components_json(const Digraph& g, const Decomposition& d) {
  json components = json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    Region r = region_of(g, d.seeds[i].first());
    // Layers from the lexicographically smallest heading label.
    VertexId heading = r.headings.first();
    for (VertexId h : r.headings)
      if (g.label(h) < g.label(heading)) heading = h;
    Jet jet = jet_layers(g, r, heading);
    json layer_array = json::array();
    for (const VertexSet& layer : jet.layers)
      layer_array.push_back(label_array(g, layer));
    components.push_back(json{{"vertices", label_array(g, d.components[i])},
                              {"headings", label_array(g, r.headings)},
                              {"jet_layers", layer_array}});
  }
  std::sort(components.begin(), components.end(),
            [](const json& a, const json& b) {
              return a["vertices"] < b["vertices"];
            });
  return components;
}

template <class Graph>
json seeded_components_json(const Graph& g, const Decomposition& d) {
  json components = json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i)
    components.push_back(json{{"vertices", label_array(g, d.components[i])},
                              {"seed", label_array(g, d.seeds[i])}});
  std::sort(components.begin(), components.end(),
            [](const json& a, const json& b) {
              return a["vertices"] < b["vertices"];
            });
  return components;
}

template <class Graph>
int emit_decomposition(const Graph& g, const Decomposition& d, json components,
                       const std::string& output, std::ostream& out) {
  if (output == "text") {
    out << "kind: " << to_string(d.kind) << '\n';
    std::size_t i = 0;
    for (const auto& component : components) {
      out << "component " << ++i << ":";
      for (const auto& label : component["vertices"])
        out << ' ' << label.get<std::string>();
      if (component.contains("headings")) {
        out << " (headings:";
        for (const auto& label : component["headings"])
          out << ' ' << label.get<std::string>();
        out << ')';
      }
      if (component.contains("seed")) {
        out << " (seed:";
        for (const auto& label : component["seed"])
          out << ' ' << label.get<std::string>();
        out << ')';
      }
      out << '\n';
    }
    out << "leftover:";
    for (VertexId v : d.leftover) out << ' ' << g.label(v);
    out << '\n';
    return 0;
  }
  json j{{"kind", to_string(d.kind)},
         {"components", std::move(components)},
         {"leftover", label_array(g, d.leftover)}};
  emit(j, out);
  return 0;
}

struct DecomposeArgs {
  CommonOptions common;
  std::string kind;  // empty = default for the input kind
  bool intervals = false;
  std::string seed_list;
};

int run_decompose(const std::variant<Digraph, UndirectedGraph>& graph,
                  const DecomposeArgs& args, std::ostream& out) {
  std::string kind = args.kind;
  if (args.intervals) kind = "interval";
  if (kind.empty())
    kind = std::holds_alternative<Digraph>(graph) ? "interval" : "arc";

  if (kind == "interval") {
    const Digraph& g = require_digraph(graph, "interval decomposition");
    if (!args.seed_list.empty())
      throw DomainError("--seeds applies to the connected kind only");
    Decomposition d = interval_decomposition(g);
    return emit_decomposition(g, d, interval_components_json(g, d),
                              args.common.output, out);
  }
  if (kind == "connected") {
    if (std::holds_alternative<UndirectedGraph>(graph)) {
      if (!args.seed_list.empty())
        throw DomainError("--seeds applies to directed input only");
      const UndirectedGraph& g = std::get<UndirectedGraph>(graph);
      Decomposition d = connected_seed_decomposition(g);
      return emit_decomposition(g, d, seeded_components_json(g, d),
                                args.common.output, out);
    }
    const Digraph& g = std::get<Digraph>(graph);
    SeedStrategy strategy;
    if (!args.seed_list.empty()) {
      auto groups = std::make_shared<std::vector<VertexSet>>();
      for (const std::string& group : split(args.seed_list, ';'))
        groups->push_back(set_from_labels(g, split(group, ',')));
      auto next = std::make_shared<std::size_t>(0);
      strategy = [groups, next](const Digraph& host,
                                const VertexSet& remaining)
          -> std::optional<VertexSet> {
        if (*next < groups->size()) return (*groups)[(*next)++];
        return lowest_vertex_strategy()(host, remaining);
      };
    }
    Decomposition d = seeded_decomposition(g, strategy);
    return emit_decomposition(g, d, seeded_components_json(g, d),
                              args.common.output, out);
  }
  if (kind == "arc") {
    const UndirectedGraph& g = require_undirected(graph, "arc-seed decomposition");
    Decomposition d = arc_seed_decomposition(g);
    return emit_decomposition(g, d, seeded_components_json(g, d),
                              args.common.output, out);
  }
  throw DomainError("unknown decomposition kind '" + kind + "'");
}

// ---- matching ---------------------------------------------------------

int run_matching(const UndirectedGraph& g, const std::string& output,
                 std::ostream& out) {
  Decomposition d = arc_seed_decomposition(g);
  Matching m = matching_from_decomposition(g, d);

  if (output == "text") {
    out << "matching:";
    for (auto [u, v] : m.edges)
      out << ' ' << g.label(u) << '-' << g.label(v);
    out << "\nmaximal: yes\n";
    return 0;
  }
  json j{{"matching", edge_array(g, m.edges)}, {"maximal", true}};
  emit(j, out);
  return 0;
}

// ---- turan ------------------------------------------------------------

json bowtie_json(const UndirectedGraph& g, const BowtieWitness& w) {
  auto pair_json = [&](std::pair<VertexId, VertexId> e) {
    std::string a = g.label(e.first), b = g.label(e.second);
    if (b < a) std::swap(a, b);
    return json::array({a, b});
  };
  return json{{"center", g.label(w.center)},
              {"triangle1", pair_json(w.triangle1)},
              {"triangle2", pair_json(w.triangle2)}};
}

int run_turan_check(const UndirectedGraph& g, const std::string& output,
                    std::ostream& out) {
  VolumeBoundReport report = volume_bound_check(g);
  bool negative = report.applicable && !report.holds;

  if (output == "text") {
    out << "p: " << report.vol.p << "\nq: " << report.vol.q << '\n';
    out << "bowtie: "
        << (report.bowtie ? g.label(report.bowtie->center) : "none") << '\n';
    out << "k4: " << (report.k4 ? "yes" : "no") << '\n';
    if (report.applicable)
      out << "bound holds: " << (report.holds ? "yes" : "no") << '\n';
    else
      out << "bound: not applicable\n";
    return negative ? 1 : 0;
  }

  json j{{"p", report.vol.p},
         {"q", report.vol.q},
         {"bowtie", report.bowtie ? bowtie_json(g, *report.bowtie) : json()},
         {"k4", report.k4},
         {"applicable", report.applicable},
         {"holds", report.applicable ? json(report.holds) : json()}};
  emit(j, out);
  return negative ? 1 : 0;
}

unsigned env_threads() {
  if (const char* value = std::getenv("GRAPHDECOMP_THREADS")) {
    long n = std::strtol(value, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 0;
}

json extremal_report_json(const ExtremalReport& report) {
  return json{{"p", report.p},
              {"formula_bound", report.formula_bound},
              {"oracle_bound", report.oracle_bound},
              {"formula_matches", report.formula_matches()},
              {"method", report.method == ExtremalMethod::construction
                             ? "construction"
                             : "exhaustive"},
              {"witness_edges", edge_array(report.witness, report.witness.edges())}};
}

int emit_extremal(const ExtremalReport& report, const std::string& output,
                  std::ostream& out) {
  if (output == "text") {
    out << "p: " << report.p << '\n';
    out << "formula bound: " << report.formula_bound << '\n';
    out << "verified bound: " << report.oracle_bound
        << (report.formula_matches() ? " (matches the formula)"
                                     : " (formula mismatch)")
        << '\n';
    out << "witness edges: " << report.witness.edge_count() << '\n';
    return 0;
  }
  emit(extremal_report_json(report), out);
  return 0;
}

// ---- jet-verify -------------------------------------------------------

int run_jet_verify(const Digraph& g, const std::string& layer_list,
                   const std::string& output, std::ostream& out) {
  Jet jet;
  for (const std::string& group : split(layer_list, ';'))
    jet.layers.push_back(set_from_labels(g, split(group, ',')));
  JetCheck check = verify_jet(g, jet);

  if (output == "text") {
    out << (check.ok ? "valid jet\n" : "invalid jet: " + check.message + "\n");
    return check.ok ? 0 : 1;
  }

  json violation;
  if (!check.ok) {
    violation = json{{"message", check.message}};
    if (check.bad_arc)
      violation["arc"] = json::array(
          {g.label(check.bad_arc->first), g.label(check.bad_arc->second)});
    if (check.unreachable) violation["vertex"] = g.label(*check.unreachable);
  }
  json j{{"valid", check.ok}, {"violation", violation}};
  emit(j, out);
  return check.ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"vertex decomposition calculus for (di)graphs"};
  app.require_subcommand(1);

  InflateArgs inflate_args;
  CLI::App* cmd_inflate =
      app.add_subcommand("inflate", "iterate the inflation of a vertex set to "
                                    "its fixpoint");
  add_common(cmd_inflate, inflate_args.common);
  cmd_inflate
      ->add_option("--set", inflate_args.set_list,
                   "comma-separated vertex labels to inflate")
      ->required();

  DecomposeArgs decompose_args;
  CLI::App* cmd_decompose = app.add_subcommand(
      "decompose", "interval, connected-seed, or arc-seed decomposition");
  add_common(cmd_decompose, decompose_args.common);
  cmd_decompose->add_option("--kind", decompose_args.kind,
                            "decomposition kind")
      ->check(CLI::IsMember({"interval", "connected", "arc"}));
  cmd_decompose->add_flag("--intervals", decompose_args.intervals,
                          "shorthand for --kind interval");
  cmd_decompose->add_option(
      "--seeds", decompose_args.seed_list,
      "semicolon-separated seed sets (comma-separated labels) for the "
      "connected kind");

  CommonOptions matching_common;
  CLI::App* cmd_matching = app.add_subcommand(
      "matching", "maximal matching from the arc-seed decomposition");
  add_common(cmd_matching, matching_common);

  CommonOptions check_common;
  CLI::App* cmd_check = app.add_subcommand(
      "turan-check", "check the bowtie-free volume bound on a graph");
  add_common(cmd_check, check_common);

  std::size_t oracle_p = 0;
  std::size_t oracle_budget_vertices = 7;
  double oracle_budget_seconds = 0;
  std::string oracle_output = "json";
  CLI::App* cmd_oracle = app.add_subcommand(
      "turan-oracle", "certify ex(p, bowtie) by exhaustive refutation");
  cmd_oracle->add_option("--p", oracle_p, "number of vertices")->required();
  cmd_oracle->add_option("--budget-vertices", oracle_budget_vertices,
                         "largest p the oracle will attempt");
  cmd_oracle->add_option("--budget-seconds", oracle_budget_seconds,
                         "wall-clock budget for the enumeration");
  cmd_oracle->add_option("--output", oracle_output, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  std::size_t extremal_p = 0;
  std::string extremal_output = "json";
  CLI::App* cmd_extremal = app.add_subcommand(
      "turan-extremal", "bowtie-free graph attaining the volume bound");
  cmd_extremal->add_option("--p", extremal_p, "number of vertices")->required();
  cmd_extremal->add_option("--output", extremal_output, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  CommonOptions jet_common;
  std::string jet_layers_list;
  CLI::App* cmd_jet =
      app.add_subcommand("jet-verify", "check the jet conditions of a layering");
  add_common(cmd_jet, jet_common);
  cmd_jet->add_option("--layers", jet_layers_list,
                      "semicolon-separated layers of comma-separated labels")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("graphdecomp");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*cmd_inflate) {
      auto graph = load_graph(inflate_args.common, in,
                              cmd_inflate->count("--directed") > 0);
      return std::visit(
          [&](const auto& g) { return run_inflate_on(g, inflate_args, out); },
          graph);
    }
    if (*cmd_decompose) {
      auto graph = load_graph(decompose_args.common, in,
                              cmd_decompose->count("--directed") > 0);
      return run_decompose(graph, decompose_args, out);
    }
    if (*cmd_matching) {
      auto graph =
          load_graph(matching_common, in, cmd_matching->count("--directed") > 0);
      return run_matching(require_undirected(graph, "matching"),
                          matching_common.output, out);
    }
    if (*cmd_check) {
      auto graph =
          load_graph(check_common, in, cmd_check->count("--directed") > 0);
      return run_turan_check(require_undirected(graph, "turan-check"),
                             check_common.output, out);
    }
    if (*cmd_oracle) {
      ExOracleOptions opts;
      opts.vertex_budget = oracle_budget_vertices;
      opts.threads = env_threads();
      if (oracle_budget_seconds > 0)
        opts.time_budget = std::chrono::milliseconds(
            static_cast<long long>(oracle_budget_seconds * 1000));
      return emit_extremal(ex_oracle(oracle_p, opts), oracle_output, out);
    }
    if (*cmd_extremal) {
      UndirectedGraph witness = extremal_construction(extremal_p);
      ExtremalReport report;
      report.p = extremal_p;
      report.formula_bound = bowtie_bound(extremal_p);
      report.oracle_bound = witness.edge_count();
      report.witness = std::move(witness);
      report.method = ExtremalMethod::construction;
      return emit_extremal(report, extremal_output, out);
    }
    if (*cmd_jet) {
      auto graph = load_graph(jet_common, in, cmd_jet->count("--directed") > 0);
      return run_jet_verify(require_digraph(graph, "jet-verify"),
                            jet_layers_list, jet_common.output, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace graphdecomp::cli
