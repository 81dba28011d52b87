#include "graphdecomp/matching.hpp"

#include <algorithm>
#include <string>

namespace graphdecomp {

namespace {

void check_matching(const UndirectedGraph& g, const Matching& m) {
  VertexSet used(g.vertex_count());
  for (auto [u, v] : m.edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (!g.has_edge(u, v))
      throw DomainError("matching contains '" + g.label(u) + "' -- '" +
                        g.label(v) + "', which is not an edge of the graph");
    if (used.test(u) || used.test(v))
      throw DomainError("matching edges share the vertex '" +
                        g.label(used.test(u) ? u : v) + "'");
    used.set(u);
    used.set(v);
  }
}

VertexSet matched_vertices(const UndirectedGraph& g, const Matching& m) {
  VertexSet used(g.vertex_count());
  for (auto [u, v] : m.edges) {
    used.set(u);
    used.set(v);
  }
  return used;
}

std::optional<std::pair<VertexId, VertexId>> smallest_edge_within(
    const UndirectedGraph& g, const VertexSet& allowed) {
  for (VertexId u : allowed) {
    VertexSet candidates = g.neighbors(u) & allowed;
    for (VertexId v : candidates)
      if (v > u) return std::make_pair(u, v);
  }
  return std::nullopt;
}

Decomposition undirected_decomposition(const UndirectedGraph& g,
                                       const UndirectedSeedStrategy& strategy,
                                       DecompositionKind kind) {
  std::size_t p = g.vertex_count();
  Decomposition d;
  d.kind = kind;
  d.leftover = VertexSet(p);

  VertexSet covered(p);
  while (true) {
    VertexSet remaining = covered.complement();
    std::optional<VertexSet> seed;
    if (strategy) {
      seed = strategy(g, remaining);
    } else if (auto edge = smallest_edge_within(g, remaining)) {
      seed = VertexSet(p);
      seed->set(edge->first);
      seed->set(edge->second);
    }
    if (!seed) break;
    if (seed->universe() != p || !seed->is_subset_of(remaining))
      throw ContractViolation(
          "seed strategy must return a subset of the uncovered vertices");
    if (seed->count() < 2)
      throw ContractViolation("seeds must have at least two vertices");
    if (kind == DecompositionKind::arc_seed && seed->count() != 2)
      throw ContractViolation("arc seeds must be single edges");
    if (!is_connected_subset(g, *seed))
      throw ContractViolation("seed strategy returned a non-connected set");

    VertexSet component = inflate(g, *seed);
    // A fresh connected seed of two or more vertices cannot inflate into an
    // earlier component, so overlap here means the strategy misbehaved.
    if (component.intersects(covered))
      throw ContractViolation(
          "seed inflation overlaps an earlier component; seeds must be "
          "connected subsets of the uncovered vertices");
    covered |= component;
    d.components.push_back(std::move(component));
    d.seeds.push_back(std::move(*seed));
  }

  d.leftover = covered.complement();
  if (auto edge = smallest_edge_within(g, d.leftover))
    throw ContractViolation("the uncovered rest still spans the edge '" +
                            g.label(edge->first) + "' -- '" +
                            g.label(edge->second) + "'");
  return d;
}

}  // namespace

MaximalityCheck is_maximal(const UndirectedGraph& g, const Matching& m) {
  check_matching(g, m);
  VertexSet free = matched_vertices(g, m).complement();
  MaximalityCheck check;
  if (auto edge = smallest_edge_within(g, free)) {
    check.maximal = false;
    check.extendable = edge;
  }
  return check;
}

Decomposition connected_seed_decomposition(
    const UndirectedGraph& g, const UndirectedSeedStrategy& strategy) {
  return undirected_decomposition(g, strategy,
                                  DecompositionKind::connected_seed);
}

Decomposition arc_seed_decomposition(const UndirectedGraph& g) {
  return undirected_decomposition(g, {}, DecompositionKind::arc_seed);
}

Decomposition decomposition_from_matching(const UndirectedGraph& g,
                                          const Matching& m) {
  MaximalityCheck check = is_maximal(g, m);
  if (!check.maximal)
    throw ContractViolation("matching is not maximal: edge '" +
                            g.label(check.extendable->first) + "' -- '" +
                            g.label(check.extendable->second) +
                            "' could be added");

  std::size_t p = g.vertex_count();
  Decomposition d;
  d.kind = DecompositionKind::arc_seed;
  VertexSet covered(p);
  std::vector<std::pair<VertexId, VertexId>> edges = m.edges;
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) {
    VertexSet seed(p);
    seed.set(std::min(u, v));
    seed.set(std::max(u, v));
    VertexSet component = inflate(g, seed);
    if (component.intersects(covered))
      throw ContractViolation(
          "inflations of a maximal matching must be pairwise disjoint");
    covered |= component;
    d.components.push_back(std::move(component));
    d.seeds.push_back(std::move(seed));
  }
  d.leftover = covered.complement();
  if (auto edge = smallest_edge_within(g, d.leftover))
    throw ContractViolation(
        "leftover of a maximal matching must span no edge, found '" +
        g.label(edge->first) + "' -- '" + g.label(edge->second) + "'");
  return d;
}

Matching matching_from_decomposition(const UndirectedGraph& g,
                                     const Decomposition& d) {
  if (d.kind != DecompositionKind::arc_seed)
    throw DomainError("only arc-seed decompositions carry a matching");
  Matching m;
  for (const VertexSet& seed : d.seeds) {
    if (seed.count() != 2)
      throw DomainError("arc-seed decomposition has a non-edge seed");
    VertexId u = seed.first();
    VertexId v = seed.next(u);
    m.edges.emplace_back(u, v);
  }
  std::sort(m.edges.begin(), m.edges.end());
  MaximalityCheck check = is_maximal(g, m);
  if (!check.maximal)
    throw ContractViolation(
        "seeds of an arc-seed decomposition must form a maximal matching");
  return m;
}

namespace {

void best_matching(const UndirectedGraph& g, VertexId from, VertexSet& used,
                   std::vector<std::pair<VertexId, VertexId>>& current,
                   std::vector<std::pair<VertexId, VertexId>>& best) {
  // Branch on the smallest unmatched vertex >= from: either match it with
  // one of its free neighbors or leave it unmatched for good.
  VertexId v = from;
  while (v < g.vertex_count() && used.test(v)) ++v;
  if (current.size() + (g.vertex_count() - v) / 2 <= best.size()) return;
  if (v >= g.vertex_count()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  used.set(v);
  VertexSet free = g.neighbors(v) - used;
  for (VertexId w : free) {
    used.set(w);
    current.emplace_back(v, w);
    best_matching(g, v + 1, used, current, best);
    current.pop_back();
    used.reset(w);
  }
  best_matching(g, v + 1, used, current, best);
  used.reset(v);
}

}  // namespace

Matching greatest_matching(const UndirectedGraph& g,
                           const GreatestMatchingOptions& opts) {
  if (g.vertex_count() > opts.vertex_budget)
    throw ResourceLimitError(
        "greatest_matching: graph has " + std::to_string(g.vertex_count()) +
        " vertices, exceeding the exhaustive-search budget of " +
        std::to_string(opts.vertex_budget));
  VertexSet used(g.vertex_count());
  std::vector<std::pair<VertexId, VertexId>> current, best;
  best_matching(g, 0, used, current, best);
  std::sort(best.begin(), best.end());
  return Matching{std::move(best)};
}

}  // namespace graphdecomp
