#include "graphdecomp/inflation.hpp"

#include <string>

namespace graphdecomp {

namespace {

void check_subset(std::size_t p, const VertexSet& u) {
  if (u.universe() != p)
    throw DomainError("vertex set over universe " +
                      std::to_string(u.universe()) +
                      " does not match a graph with " + std::to_string(p) +
                      " vertices");
}

// The in-neighborhood table drives every inflation variant; undirected
// graphs pass their symmetric adjacency.
template <class Graph>
const VertexSet& inputs_of(const Graph& g, VertexId v);

template <>
const VertexSet& inputs_of(const Digraph& g, VertexId v) {
  return g.in_neighbors(v);
}

template <>
const VertexSet& inputs_of(const UndirectedGraph& g, VertexId v) {
  return g.neighbors(v);
}

template <class Graph>
VertexSet inflate_impl(const Graph& g, const VertexSet& u) {
  check_subset(g.vertex_count(), u);
  VertexSet result = u;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (result.test(v)) continue;
    const VertexSet& inputs = inputs_of(g, v);
    if (!inputs.empty() && inputs.is_subset_of(u)) result.set(v);
  }
  return result;
}

template <class Graph>
InflationTrace hyperinflate_impl(const Graph& g, const VertexSet& u) {
  InflationTrace trace;
  trace.layers.push_back(u);
  while (true) {
    VertexSet next = inflate_impl(g, trace.layers.back());
    if (next == trace.layers.back()) break;
    trace.layers.push_back(std::move(next));
  }
  return trace;
}

template <class Graph>
std::optional<VertexSet> witness_impl(const Graph& g, const VertexSet& u) {
  if (inflate_impl(g, u) != u) return std::nullopt;
  VertexSet witness = u;
  std::vector<VertexId> members = u.to_vector();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    VertexSet candidate = witness;
    candidate.reset(*it);
    if (hyperinflate_impl(g, candidate).fixpoint() == u)
      witness = std::move(candidate);
  }
  return witness;
}

}  // namespace

VertexSet inflate(const Digraph& g, const VertexSet& u) {
  return inflate_impl(g, u);
}
VertexSet inflate(const UndirectedGraph& g, const VertexSet& u) {
  return inflate_impl(g, u);
}

VertexSet inflate_n(const Digraph& g, const VertexSet& u, std::size_t n) {
  check_subset(g.vertex_count(), u);
  VertexSet result = u;
  for (std::size_t i = 0; i < n; ++i) result = inflate_impl(g, result);
  return result;
}
VertexSet inflate_n(const UndirectedGraph& g, const VertexSet& u,
                    std::size_t n) {
  check_subset(g.vertex_count(), u);
  VertexSet result = u;
  for (std::size_t i = 0; i < n; ++i) result = inflate_impl(g, result);
  return result;
}

InflationTrace hyperinflate(const Digraph& g, const VertexSet& u) {
  return hyperinflate_impl(g, u);
}
InflationTrace hyperinflate(const UndirectedGraph& g, const VertexSet& u) {
  return hyperinflate_impl(g, u);
}

VertexSet hull(const Digraph& g, const VertexSet& u) {
  return hyperinflate_impl(g, u).fixpoint();
}
VertexSet hull(const UndirectedGraph& g, const VertexSet& u) {
  return hyperinflate_impl(g, u).fixpoint();
}

bool is_stable(const Digraph& g, const VertexSet& u) {
  return inflate_impl(g, u) == u;
}
bool is_stable(const UndirectedGraph& g, const VertexSet& u) {
  return inflate_impl(g, u) == u;
}

std::optional<VertexSet> hyperinflation_witness(const Digraph& g,
                                                const VertexSet& u) {
  return witness_impl(g, u);
}
std::optional<VertexSet> hyperinflation_witness(const UndirectedGraph& g,
                                                const VertexSet& u) {
  return witness_impl(g, u);
}

}  // namespace graphdecomp
