#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphdecomp/graph.hpp"

namespace graphdecomp {

// The full iteration record of an inflation fixpoint computation:
// layers[0] is the input set, layers.back() the fixpoint, and the layers
// grow strictly until the last one. steps() == number of applications
// needed to reach the fixpoint.
struct InflationTrace {
  std::vector<VertexSet> layers;

  std::size_t steps() const { return layers.size() - 1; }
  const VertexSet& fixpoint() const { return layers.back(); }
};

// Inf U = U plus every vertex whose in-neighborhood is nonempty and lies
// entirely inside U. On undirected graphs the neighborhood plays the role
// of the in-neighborhood.
VertexSet inflate(const Digraph& g, const VertexSet& u);
VertexSet inflate(const UndirectedGraph& g, const VertexSet& u);

// n-fold application; n = 0 returns u unchanged.
VertexSet inflate_n(const Digraph& g, const VertexSet& u, std::size_t n);
VertexSet inflate_n(const UndirectedGraph& g, const VertexSet& u, std::size_t n);

// Iterates Inf until the fixpoint and returns the whole trace. On a finite
// graph the fixpoint is reached in at most vertex_count() steps and equals
// the hull of u.
InflationTrace hyperinflate(const Digraph& g, const VertexSet& u);
InflationTrace hyperinflate(const UndirectedGraph& g, const VertexSet& u);

// Smallest stable superset of u. Finite graphs have finite in-degrees
// everywhere, which makes the inflation fixpoint and the hull coincide, so
// this is hyperinflate(g, u).fixpoint().
VertexSet hull(const Digraph& g, const VertexSet& u);
VertexSet hull(const UndirectedGraph& g, const VertexSet& u);

// Stable means Inf U == U.
bool is_stable(const Digraph& g, const VertexSet& u);
bool is_stable(const UndirectedGraph& g, const VertexSet& u);

// A finite set is the inflation fixpoint of some seed exactly when it is
// stable (the fixpoint of anything is stable, and a stable set is its own
// fixpoint). For stable u this returns a minimal witness seed: vertices are
// greedily dropped in descending index order whenever dropping one keeps
// the fixpoint intact. Minimal under single removals, not globally minimum.
// Returns nullopt for non-stable u.
std::optional<VertexSet> hyperinflation_witness(const Digraph& g,
                                                const VertexSet& u);
std::optional<VertexSet> hyperinflation_witness(const UndirectedGraph& g,
                                                const VertexSet& u);

}  // namespace graphdecomp
