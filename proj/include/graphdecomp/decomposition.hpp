#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphdecomp/graph.hpp"
#include "graphdecomp/inflation.hpp"

namespace graphdecomp {

// The inflation fixpoint of a single vertex, together with every vertex
// whose fixpoint is the same set (the headings, possibly more than one).
struct Region {
  VertexSet vertices;
  VertexSet headings;
};

enum class DecompositionKind { interval, connected_seed, arc_seed };

const char* to_string(DecompositionKind kind);

// A partition of the vertex set into inflation fixpoints of the recorded
// seeds. Undirected kinds may leave a set of vertices (the leftover) that
// belongs to no component; its induced subgraph has no edges.
struct Decomposition {
  DecompositionKind kind = DecompositionKind::interval;
  std::vector<VertexSet> components;
  std::vector<VertexSet> seeds;  // seeds[i] hyperinflates to components[i]
  VertexSet leftover;
};

Region region_of(const Digraph& g, VertexId x);

// The unique partition of V into maximal regions. Component order follows
// the smallest vertex index of each component.
Decomposition interval_decomposition(const Digraph& g);

// When some outside vertex y has an arc into the region, the heading is
// forced: D+(y) intersects the region exactly in the unique heading x.
// Returns such a pair (y, x), or nullopt when no outside vertex reaches
// the region.
std::optional<std::pair<VertexId, VertexId>> unique_heading_witness(
    const Digraph& g, const Region& r);

// Chooses a connected subset of the not-yet-covered vertices, or nullopt to
// signal that it cannot (legal only once no vertices remain).
using SeedStrategy = std::function<std::optional<VertexSet>(
    const Digraph& g, const VertexSet& remaining)>;

// Smallest-index vertex of the remaining set, as a singleton.
SeedStrategy lowest_vertex_strategy();

// The generic decomposition process: repeatedly take a connected seed from
// the uncovered part, compute its inflation fixpoint, and absorb every
// earlier component whose fixpoint it meets (the fixpoint of the earlier
// connected seed is then contained in the new one). Terminates with
// pairwise-disjoint stable components covering V.
Decomposition seeded_decomposition(const Digraph& g,
                                   const SeedStrategy& strategy = {});

// Layered partition of a vertex set: no arc runs from a layer into the same
// or an earlier layer, and every vertex of layer j is the end of a directed
// path picking one vertex from each earlier layer in order.
struct Jet {
  std::vector<VertexSet> layers;
};

struct JetCheck {
  bool ok = true;
  // Set when an arc violates the no-backward/no-intra-layer condition.
  std::optional<std::pair<VertexId, VertexId>> bad_arc;
  // Set when a vertex of some layer has no full-chain path from layer 1.
  std::optional<VertexId> unreachable;
  std::string message;
};

// Checks both jet conditions against the arcs of g among the layer
// vertices; arcs to or from vertices outside the layers are ignored.
JetCheck verify_jet(const Digraph& g, const Jet& j);

// Peels a region into layers around a heading: layer i holds the vertices
// that enter the inflation fixpoint of {x} at step i exactly. The result,
// read inside the region minus its heading, satisfies both jet conditions.
Jet jet_layers(const Digraph& g, const Region& r, VertexId x);

// Optional extra arcs when rebuilding an interval from a jet: arcs from
// vertices of layers >= 2 back to the fresh heading, and/or a loop on it.
struct JetExtension {
  VertexSet back_sources;  // subset of the layers beyond the first
  bool loop_at_heading = false;
  std::string heading_label;  // empty = pick a fresh unused label
};

// Builds the digraph on the jet's vertices plus one fresh heading vertex x:
// keeps every jet arc, adds x -> w for each w of the first layer, and adds
// the chosen extension arcs. The whole vertex set of the result is then a
// region headed by x (checked; the fresh heading is the last index).
Digraph jet_to_interval(const Digraph& jet_graph, const Jet& j,
                        const JetExtension& ext = {});

}  // namespace graphdecomp
