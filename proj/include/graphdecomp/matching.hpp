#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "graphdecomp/decomposition.hpp"
#include "graphdecomp/graph.hpp"

namespace graphdecomp {

// A set of pairwise vertex-disjoint edges; pairs are normalized (min, max)
// and kept sorted.
struct Matching {
  std::vector<std::pair<VertexId, VertexId>> edges;
};

struct MaximalityCheck {
  bool maximal = true;
  // An edge of the graph disjoint from every matched vertex, when not.
  std::optional<std::pair<VertexId, VertexId>> extendable;
};

// Validates that m is a matching of g and reports whether it extends.
MaximalityCheck is_maximal(const UndirectedGraph& g, const Matching& m);

// Picks the lexicographically smallest connected seed available among the
// uncovered vertices (or nullopt once none is left). Seeds must be
// connected and have at least two vertices.
using UndirectedSeedStrategy = std::function<std::optional<VertexSet>(
    const UndirectedGraph& g, const VertexSet& remaining)>;

// The undirected decomposition: take non-singleton connected seeds from the
// uncovered part while any exist; each component is the inflation of its
// seed, the components are pairwise disjoint, and what remains (the
// leftover) spans no edge. Default seed choice: smallest available edge.
// On a disconnected graph this works per connected component.
Decomposition connected_seed_decomposition(
    const UndirectedGraph& g, const UndirectedSeedStrategy& strategy = {});

// Same process with seeds restricted to single edges; the seeds then form
// a maximal matching.
Decomposition arc_seed_decomposition(const UndirectedGraph& g);

// Expands a maximal matching into the decomposition whose components are
// the inflations of its edges. Throws ContractViolation (carrying an
// extendable edge) when m is not maximal.
Decomposition decomposition_from_matching(const UndirectedGraph& g,
                                          const Matching& m);

// Reads the maximal matching back off an arc-seed decomposition.
Matching matching_from_decomposition(const UndirectedGraph& g,
                                     const Decomposition& d);

struct GreatestMatchingOptions {
  std::size_t vertex_budget = 16;
};

// Maximum-cardinality matching by exhaustive branching. This exists as a
// test oracle for telling "maximal" apart from "greatest"; nothing in the
// library builds on it.
Matching greatest_matching(const UndirectedGraph& g,
                           const GreatestMatchingOptions& opts = {});

}  // namespace graphdecomp
