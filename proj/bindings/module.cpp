#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "graphdecomp/decomposition.hpp"
#include "graphdecomp/inflation.hpp"
#include "graphdecomp/io.hpp"
#include "graphdecomp/matching.hpp"
#include "graphdecomp/turan.hpp"

namespace py = pybind11;
using namespace graphdecomp;

namespace {

using LabelPair = std::pair<std::string, std::string>;

// Labels are the python-facing currency; indices stay internal.
template <class Graph>
VertexSet set_of(const Graph& g, const std::vector<std::string>& labels) {
  VertexSet s(g.vertex_count());
  for (const std::string& label : labels) {
    auto v = g.find_label(label);
    if (!v) throw DomainError("unknown vertex label '" + label + "'");
    s.set(*v);
  }
  return s;
}

template <class Graph>
std::vector<std::string> labels_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  out.reserve(s.count());
  for (VertexId v : s) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

template <class Graph>
std::vector<std::vector<std::string>> layer_labels(
    const Graph& g, const std::vector<VertexSet>& layers) {
  std::vector<std::vector<std::string>> out;
  out.reserve(layers.size());
  for (const VertexSet& layer : layers) out.push_back(labels_of(g, layer));
  return out;
}

struct Interned {
  std::size_t p = 0;
  std::vector<std::pair<VertexId, VertexId>> links;
  std::vector<std::string> labels;
};

Interned intern(const std::vector<LabelPair>& links,
                const std::vector<std::string>& isolated) {
  Interned acc;
  auto id_of = [&acc](const std::string& label) {
    for (std::size_t i = 0; i < acc.labels.size(); ++i)
      if (acc.labels[i] == label) return i;
    acc.labels.push_back(label);
    return acc.labels.size() - 1;
  };
  for (const auto& [a, b] : links) acc.links.emplace_back(id_of(a), id_of(b));
  for (const std::string& label : isolated) id_of(label);
  acc.p = acc.labels.size();
  return acc;
}

Digraph make_digraph(const std::vector<LabelPair>& arcs,
                     const std::vector<std::string>& isolated) {
  Interned acc = intern(arcs, isolated);
  return Digraph(acc.p, acc.links, std::move(acc.labels));
}

UndirectedGraph make_undirected(const std::vector<LabelPair>& edges,
                                const std::vector<std::string>& isolated) {
  Interned acc = intern(edges, isolated);
  return UndirectedGraph(acc.p, acc.links, std::move(acc.labels));
}

template <class Graph>
std::vector<LabelPair> link_labels(
    const Graph& g, const std::vector<std::pair<VertexId, VertexId>>& links,
    bool ordered) {
  std::vector<LabelPair> out;
  out.reserve(links.size());
  for (auto [u, v] : links) {
    std::string a = g.label(u), b = g.label(v);
    if (!ordered && b < a) std::swap(a, b);
    out.emplace_back(std::move(a), std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Graph>
py::dict decomposition_dict(const Graph& g, const Decomposition& d) {
  py::list components;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    py::dict component;
    component["vertices"] = labels_of(g, d.components[i]);
    component["seed"] = labels_of(g, d.seeds[i]);
    components.append(component);
  }
  py::dict out;
  out["kind"] = to_string(d.kind);
  out["components"] = components;
  out["leftover"] = labels_of(g, d.leftover);
  return out;
}

py::dict interval_dict(const Digraph& g, const Decomposition& d) {
  py::list components;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    Region r = region_of(g, d.seeds[i].first());
    VertexId heading = r.headings.first();
    for (VertexId h : r.headings)
      if (g.label(h) < g.label(heading)) heading = h;
    py::dict component;
    component["vertices"] = labels_of(g, d.components[i]);
    component["headings"] = labels_of(g, r.headings);
    component["jet_layers"] = layer_labels(g, jet_layers(g, r, heading).layers);
    components.append(component);
  }
  py::dict out;
  out["kind"] = to_string(d.kind);
  out["components"] = components;
  out["leftover"] = labels_of(g, d.leftover);
  return out;
}

py::dict report_dict(const ExtremalReport& r) {
  py::dict out;
  out["p"] = r.p;
  out["formula_bound"] = r.formula_bound;
  out["oracle_bound"] = r.oracle_bound;
  out["formula_matches"] = r.formula_matches();
  out["method"] = r.method == ExtremalMethod::construction ? "construction"
                                                           : "exhaustive";
  out["witness_edges"] = link_labels(r.witness, r.witness.edges(), false);
  return out;
}

py::object bowtie_dict(const UndirectedGraph& g,
                       const std::optional<BowtieWitness>& w) {
  if (!w) return py::none();
  auto norm = [&](std::pair<VertexId, VertexId> e) {
    std::string a = g.label(e.first), b = g.label(e.second);
    if (b < a) std::swap(a, b);
    return py::make_tuple(a, b);
  };
  py::dict out;
  out["center"] = g.label(w->center);
  out["triangle1"] = norm(w->triangle1);
  out["triangle2"] = norm(w->triangle2);
  return out;
}

Jet jet_from_layers(const Digraph& g,
                    const std::vector<std::vector<std::string>>& layers) {
  Jet jet;
  for (const auto& layer : layers) jet.layers.push_back(set_of(g, layer));
  return jet;
}

}  // namespace

PYBIND11_MODULE(_graphdecomp, m) {
  m.doc() = "vertex decomposition calculus: inflation fixpoints, regions, "
            "intervals, jets, matchings, and the bowtie extremal bound";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ResourceLimitError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const ContractViolation& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("arcs") = std::vector<LabelPair>{},
           py::arg("isolated") = std::vector<std::string>{},
           "Directed graph from (from, to) label pairs; loops allowed.")
      .def_property_readonly("vertex_count", &Digraph::vertex_count)
      .def_property_readonly("arc_count", &Digraph::arc_count)
      .def_property_readonly("vertices",
                             [](const Digraph& g) { return g.labels(); })
      .def_property_readonly(
          "arcs",
          [](const Digraph& g) { return link_labels(g, g.arcs(), true); })
      .def("in_set",
           [](const Digraph& g, const std::string& label) {
             auto v = g.find_label(label);
             if (!v) throw DomainError("unknown vertex label '" + label + "'");
             return labels_of(g, g.in_neighbors(*v));
           },
           py::arg("vertex"), "Inputs of a vertex (loops included).")
      .def("out_set",
           [](const Digraph& g, const std::string& label) {
             auto v = g.find_label(label);
             if (!v) throw DomainError("unknown vertex label '" + label + "'");
             return labels_of(g, g.out_neighbors(*v));
           },
           py::arg("vertex"), "Outputs of a vertex (loops included).")
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(" + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.arc_count()) + " arcs)";
      });

  py::class_<UndirectedGraph>(m, "UndirectedGraph")
      .def(py::init(&make_undirected),
           py::arg("edges") = std::vector<LabelPair>{},
           py::arg("isolated") = std::vector<std::string>{},
           "Undirected loop-free graph from label pairs.")
      .def_property_readonly("vertex_count", &UndirectedGraph::vertex_count)
      .def_property_readonly("edge_count", &UndirectedGraph::edge_count)
      .def_property_readonly("vertices",
                             [](const UndirectedGraph& g) { return g.labels(); })
      .def_property_readonly("edges",
                             [](const UndirectedGraph& g) {
                               return link_labels(g, g.edges(), false);
                             })
      .def("neighbors",
           [](const UndirectedGraph& g, const std::string& label) {
             auto v = g.find_label(label);
             if (!v) throw DomainError("unknown vertex label '" + label + "'");
             return labels_of(g, g.neighbors(*v));
           },
           py::arg("vertex"))
      .def("__repr__", [](const UndirectedGraph& g) {
        return "UndirectedGraph(" + std::to_string(g.vertex_count()) +
               " vertices, " + std::to_string(g.edge_count()) + " edges)";
      });

  // Inflation calculus. Each overload takes and returns vertex labels.
  m.def("inflate",
        [](const Digraph& g, const std::vector<std::string>& u) {
          return labels_of(g, inflate(g, set_of(g, u)));
        },
        py::arg("graph"), py::arg("vertices"));
  m.def("inflate",
        [](const UndirectedGraph& g, const std::vector<std::string>& u) {
          return labels_of(g, inflate(g, set_of(g, u)));
        },
        py::arg("graph"), py::arg("vertices"));
  m.def("inflate_n",
        [](const Digraph& g, const std::vector<std::string>& u, std::size_t n) {
          return labels_of(g, inflate_n(g, set_of(g, u), n));
        },
        py::arg("graph"), py::arg("vertices"), py::arg("n"));
  m.def("inflate_n",
        [](const UndirectedGraph& g, const std::vector<std::string>& u,
           std::size_t n) {
          return labels_of(g, inflate_n(g, set_of(g, u), n));
        },
        py::arg("graph"), py::arg("vertices"), py::arg("n"));
  m.def("hyperinflate",
        [](const Digraph& g, const std::vector<std::string>& u) {
          return layer_labels(g, hyperinflate(g, set_of(g, u)).layers);
        },
        py::arg("graph"), py::arg("vertices"),
        "Full fixpoint trace; the first layer is the input, the last the hull.");
  m.def("hyperinflate",
        [](const UndirectedGraph& g, const std::vector<std::string>& u) {
          return layer_labels(g, hyperinflate(g, set_of(g, u)).layers);
        },
        py::arg("graph"), py::arg("vertices"));
  m.def("hull",
        [](const Digraph& g, const std::vector<std::string>& u) {
          return labels_of(g, hull(g, set_of(g, u)));
        },
        py::arg("graph"), py::arg("vertices"));
  m.def("hull",
        [](const UndirectedGraph& g, const std::vector<std::string>& u) {
          return labels_of(g, hull(g, set_of(g, u)));
        },
        py::arg("graph"), py::arg("vertices"));
  m.def("is_stable",
        [](const Digraph& g, const std::vector<std::string>& u) {
          return is_stable(g, set_of(g, u));
        },
        py::arg("graph"), py::arg("vertices"));
  m.def("is_stable",
        [](const UndirectedGraph& g, const std::vector<std::string>& u) {
          return is_stable(g, set_of(g, u));
        },
        py::arg("graph"), py::arg("vertices"));
  m.def("hyperinflation_witness",
        [](const Digraph& g, const std::vector<std::string>& u) -> py::object {
          auto w = hyperinflation_witness(g, set_of(g, u));
          if (!w) return py::none();
          return py::cast(labels_of(g, *w));
        },
        py::arg("graph"), py::arg("vertices"),
        "A minimal seed whose fixpoint is the given stable set, or None.");

  // Regions, intervals, jets.
  m.def("region_of",
        [](const Digraph& g, const std::string& label) {
          auto v = g.find_label(label);
          if (!v) throw DomainError("unknown vertex label '" + label + "'");
          Region r = region_of(g, *v);
          py::dict out;
          out["vertices"] = labels_of(g, r.vertices);
          out["headings"] = labels_of(g, r.headings);
          return out;
        },
        py::arg("graph"), py::arg("vertex"));
  m.def("interval_decomposition",
        [](const Digraph& g) { return interval_dict(g, interval_decomposition(g)); },
        py::arg("graph"));
  m.def("seeded_decomposition",
        [](const Digraph& g,
           const std::vector<std::vector<std::string>>& seeds) {
          SeedStrategy strategy;
          if (!seeds.empty()) {
            auto groups = std::make_shared<std::vector<VertexSet>>();
            for (const auto& group : seeds) groups->push_back(set_of(g, group));
            auto next = std::make_shared<std::size_t>(0);
            strategy = [groups, next](const Digraph& host,
                                      const VertexSet& remaining)
                -> std::optional<VertexSet> {
              if (*next < groups->size()) return (*groups)[(*next)++];
              return lowest_vertex_strategy()(host, remaining);
            };
          }
          return decomposition_dict(g, seeded_decomposition(g, strategy));
        },
        py::arg("graph"),
        py::arg("seeds") = std::vector<std::vector<std::string>>{},
        "The connected-seed process; given seeds are used first, then "
        "lowest-vertex singletons.");
  m.def("verify_jet",
        [](const Digraph& g, const std::vector<std::vector<std::string>>& layers) {
          JetCheck check = verify_jet(g, jet_from_layers(g, layers));
          return py::make_tuple(check.ok, check.message);
        },
        py::arg("graph"), py::arg("layers"));
  m.def("jet_layers",
        [](const Digraph& g, const std::string& heading) {
          auto v = g.find_label(heading);
          if (!v) throw DomainError("unknown vertex label '" + heading + "'");
          Region r = region_of(g, *v);
          return layer_labels(g, jet_layers(g, r, *v).layers);
        },
        py::arg("graph"), py::arg("heading"),
        "Layers of the region headed by the given vertex.");
  m.def("jet_to_interval",
        [](const Digraph& g, const std::vector<std::vector<std::string>>& layers,
           const std::vector<std::string>& back_sources, bool loop_at_heading,
           const std::string& heading_label) {
          JetExtension ext;
          ext.back_sources = set_of(g, back_sources);
          ext.loop_at_heading = loop_at_heading;
          ext.heading_label = heading_label;
          return jet_to_interval(g, jet_from_layers(g, layers), ext);
        },
        py::arg("graph"), py::arg("layers"),
        py::arg("back_sources") = std::vector<std::string>{},
        py::arg("loop_at_heading") = false, py::arg("heading_label") = "");

  // Undirected decompositions and matchings.
  m.def("connected_seed_decomposition",
        [](const UndirectedGraph& g) {
          return decomposition_dict(g, connected_seed_decomposition(g));
        },
        py::arg("graph"));
  m.def("arc_seed_decomposition",
        [](const UndirectedGraph& g) {
          return decomposition_dict(g, arc_seed_decomposition(g));
        },
        py::arg("graph"));
  m.def("maximal_matching",
        [](const UndirectedGraph& g) {
          Matching matching =
              matching_from_decomposition(g, arc_seed_decomposition(g));
          return link_labels(g, matching.edges, false);
        },
        py::arg("graph"),
        "The maximal matching carried by the arc-seed decomposition.");
  m.def("is_maximal_matching",
        [](const UndirectedGraph& g, const std::vector<LabelPair>& edges) {
          Matching matching;
          for (const auto& [a, b] : edges) {
            auto u = g.find_label(a), v = g.find_label(b);
            if (!u || !v)
              throw DomainError("unknown vertex label in the matching");
            matching.edges.emplace_back(std::min(*u, *v), std::max(*u, *v));
          }
          std::sort(matching.edges.begin(), matching.edges.end());
          MaximalityCheck check = is_maximal(g, matching);
          py::object witness = py::none();
          if (check.extendable)
            witness = py::make_tuple(g.label(check.extendable->first),
                                     g.label(check.extendable->second));
          return py::make_tuple(check.maximal, witness);
        },
        py::arg("graph"), py::arg("edges"));

  // The forbidden-subgraph suite.
  m.def("find_bowtie",
        [](const UndirectedGraph& g) { return bowtie_dict(g, find_bowtie(g)); },
        py::arg("graph"));
  m.def("bowtie_bound", &bowtie_bound, py::arg("p"));
  m.def("turan_k3_bound", &turan_k3_bound, py::arg("p"));
  m.def("extremal_construction", &extremal_construction, py::arg("p"));
  m.def("ex_oracle",
        [](std::size_t p, std::size_t budget_vertices, unsigned threads) {
          ExOracleOptions opts;
          opts.vertex_budget = budget_vertices;
          opts.threads = threads;
          return report_dict(ex_oracle(p, opts));
        },
        py::arg("p"), py::arg("budget_vertices") = 7, py::arg("threads") = 0);
  m.def("verify_k3_bound",
        [](std::size_t p, std::size_t budget_vertices) {
          ExOracleOptions opts;
          opts.vertex_budget = budget_vertices;
          return verify_k3_bound(p, opts);
        },
        py::arg("p"), py::arg("budget_vertices") = 7);
  m.def("volume_bound_check",
        [](const UndirectedGraph& g) {
          VolumeBoundReport r = volume_bound_check(g);
          py::dict out;
          out["p"] = r.vol.p;
          out["q"] = r.vol.q;
          out["bowtie"] = bowtie_dict(g, r.bowtie);
          out["k4"] = r.k4;
          out["applicable"] = r.applicable;
          out["holds"] = r.holds;
          return out;
        },
        py::arg("graph"));

  // Text formats.
  m.def("parse_edge_list",
        [](const std::string& text, bool directed) -> py::object {
          if (directed) return py::cast(io::parse_edge_list_digraph(text));
          return py::cast(io::parse_edge_list_undirected(text));
        },
        py::arg("text"), py::arg("directed") = false);
  m.def("parse_dot",
        [](const std::string& text) -> py::object {
          auto parsed = io::parse_dot(text);
          if (std::holds_alternative<Digraph>(parsed))
            return py::cast(std::get<Digraph>(parsed));
          return py::cast(std::get<UndirectedGraph>(parsed));
        },
        py::arg("text"));
  m.def("to_edge_list",
        [](const Digraph& g) { return io::to_edge_list(g); }, py::arg("graph"));
  m.def("to_edge_list",
        [](const UndirectedGraph& g) { return io::to_edge_list(g); },
        py::arg("graph"));
}
