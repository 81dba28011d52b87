#include "graphdecomp/decomposition.hpp"

#include <algorithm>
#include <string>

namespace graphdecomp {

const char* to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::interval: return "interval";
    case DecompositionKind::connected_seed: return "connected-seed";
    case DecompositionKind::arc_seed: return "arc-seed";
  }
  return "?";
}

Region region_of(const Digraph& g, VertexId x) {
  g.check_vertex(x);
  VertexSet seed(g.vertex_count());
  seed.set(x);
  Region r{hull(g, seed), VertexSet(g.vertex_count())};
  for (VertexId y : r.vertices) {
    VertexSet other(g.vertex_count());
    other.set(y);
    if (hull(g, other) == r.vertices) r.headings.set(y);
  }
  return r;
}

Decomposition interval_decomposition(const Digraph& g) {
  std::size_t p = g.vertex_count();
  std::vector<VertexSet> regions;
  regions.reserve(p);
  for (VertexId x = 0; x < p; ++x) {
    VertexSet seed(p);
    seed.set(x);
    regions.push_back(hull(g, seed));
  }

  // Two regions are disjoint or nested, so the maximal ones partition V.
  // Scanning by descending size and keeping whatever is disjoint from the
  // kept ones selects exactly the maximal regions.
  std::vector<std::size_t> order(p);
  for (std::size_t i = 0; i < p; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t ca = regions[a].count(), cb = regions[b].count();
    return ca != cb ? ca > cb : a < b;
  });

  Decomposition d;
  d.kind = DecompositionKind::interval;
  d.leftover = VertexSet(p);
  VertexSet covered(p);
  for (std::size_t idx : order) {
    if (regions[idx].intersects(covered)) continue;
    covered |= regions[idx];
    d.components.push_back(regions[idx]);
    VertexSet seed(p);
    seed.set(idx);
    d.seeds.push_back(seed);
  }

  // Deterministic order: by smallest member.
  std::vector<std::size_t> comp_order(d.components.size());
  for (std::size_t i = 0; i < comp_order.size(); ++i) comp_order[i] = i;
  std::sort(comp_order.begin(), comp_order.end(),
            [&](std::size_t a, std::size_t b) {
              return d.components[a].first() < d.components[b].first();
            });
  Decomposition sorted;
  sorted.kind = d.kind;
  sorted.leftover = d.leftover;
  for (std::size_t i : comp_order) {
    sorted.components.push_back(std::move(d.components[i]));
    sorted.seeds.push_back(std::move(d.seeds[i]));
  }
  return sorted;
}

std::optional<std::pair<VertexId, VertexId>> unique_heading_witness(
    const Digraph& g, const Region& r) {
  if (r.vertices.universe() != g.vertex_count() || r.headings.empty() ||
      !r.headings.is_subset_of(r.vertices))
    throw DomainError("not a region of this graph");
  Region actual = region_of(g, r.headings.first());
  if (actual.vertices != r.vertices || actual.headings != r.headings)
    throw DomainError("not a region of this graph");

  std::optional<std::pair<VertexId, VertexId>> found;
  for (VertexId y = 0; y < g.vertex_count(); ++y) {
    if (r.vertices.test(y)) continue;
    VertexSet hits = g.out_neighbors(y) & r.vertices;
    if (hits.empty()) continue;
    if (hits.count() != 1)
      throw ContractViolation(
          "outside vertex '" + g.label(y) +
          "' reaches a region in more than one vertex, which contradicts the "
          "unique-heading property");
    VertexId x = hits.first();
    VertexSet expected(g.vertex_count());
    expected.set(x);
    if (r.headings != expected)
      throw ContractViolation(
          "region entered from outside must have exactly one heading");
    if (!found) found = {y, x};
  }
  return found;
}

SeedStrategy lowest_vertex_strategy() {
  return [](const Digraph& g, const VertexSet& remaining)
             -> std::optional<VertexSet> {
    if (remaining.empty()) return std::nullopt;
    VertexSet seed(g.vertex_count());
    seed.set(remaining.first());
    return seed;
  };
}

Decomposition seeded_decomposition(const Digraph& g,
                                   const SeedStrategy& strategy) {
  SeedStrategy chooser = strategy ? strategy : lowest_vertex_strategy();
  std::size_t p = g.vertex_count();

  Decomposition d;
  d.kind = DecompositionKind::connected_seed;
  d.leftover = VertexSet(p);

  VertexSet covered(p);
  while (covered.count() < p) {
    VertexSet remaining = covered.complement();
    std::optional<VertexSet> seed = chooser(g, remaining);
    if (!seed)
      throw ContractViolation(
          "seed strategy gave up with " + std::to_string(remaining.count()) +
          " vertices still uncovered");
    if (seed->universe() != p || seed->empty() ||
        !seed->is_subset_of(remaining))
      throw ContractViolation(
          "seed strategy must return a nonempty subset of the uncovered "
          "vertices");
    if (!is_connected_subset(g, *seed))
      throw ContractViolation("seed strategy returned a non-connected set");

    VertexSet component = hull(g, *seed);
    // Absorb the earlier components this fixpoint meets; each of them is
    // contained in it.
    for (std::size_t i = d.components.size(); i-- > 0;) {
      if (!component.intersects(d.components[i])) continue;
      d.components.erase(d.components.begin() + i);
      d.seeds.erase(d.seeds.begin() + i);
    }
    d.components.push_back(std::move(component));
    d.seeds.push_back(std::move(*seed));

    covered = VertexSet(p);
    for (const VertexSet& c : d.components) covered |= c;
  }
  return d;
}

namespace {

void check_jet_shape(const Digraph& g, const Jet& j) {
  VertexSet seen(g.vertex_count());
  for (const VertexSet& layer : j.layers) {
    if (layer.universe() != g.vertex_count())
      throw DomainError("jet layer does not match the graph's vertex count");
    if (layer.empty()) throw DomainError("jet layers must be nonempty");
    if (layer.intersects(seen))
      throw DomainError("jet layers must be pairwise disjoint");
    seen |= layer;
  }
}

}  // namespace

JetCheck verify_jet(const Digraph& g, const Jet& j) {
  check_jet_shape(g, j);
  JetCheck check;

  // No arc may land in the same or an earlier layer.
  for (std::size_t i = 0; i < j.layers.size(); ++i) {
    for (std::size_t jj = i; jj < j.layers.size(); ++jj) {
      for (VertexId u : j.layers[jj]) {
        VertexSet hits = g.out_neighbors(u) & j.layers[i];
        if (!hits.empty()) {
          check.ok = false;
          check.bad_arc = {u, hits.first()};
          check.message = "arc '" + g.label(u) + "' -> '" +
                          g.label(hits.first()) + "' runs from layer " +
                          std::to_string(jj + 1) + " into layer " +
                          std::to_string(i + 1);
          return check;
        }
      }
    }
  }

  // Every vertex of layer j must end a chain with one vertex per earlier
  // layer; walk forward keeping the chain-reachable part of each layer.
  if (!j.layers.empty()) {
    VertexSet reachable = j.layers[0];
    for (std::size_t i = 1; i < j.layers.size(); ++i) {
      VertexSet next(g.vertex_count());
      for (VertexId v : j.layers[i])
        if (g.in_neighbors(v).intersects(reachable)) next.set(v);
      if (next != j.layers[i]) {
        VertexSet missing = j.layers[i] - next;
        check.ok = false;
        check.unreachable = missing.first();
        check.message = "vertex '" + g.label(missing.first()) + "' of layer " +
                        std::to_string(i + 1) +
                        " has no chain through the earlier layers";
        return check;
      }
      reachable = next;
    }
  }
  return check;
}

Jet jet_layers(const Digraph& g, const Region& r, VertexId x) {
  g.check_vertex(x);
  if (!r.headings.test(x))
    throw DomainError("vertex '" + g.label(x) +
                      "' is not a heading of the region");
  VertexSet seed(g.vertex_count());
  seed.set(x);
  InflationTrace trace = hyperinflate(g, seed);
  if (trace.fixpoint() != r.vertices)
    throw DomainError("region does not belong to this graph");

  Jet j;
  for (std::size_t i = 1; i < trace.layers.size(); ++i)
    j.layers.push_back(trace.layers[i] - trace.layers[i - 1]);
  return j;
}

Digraph jet_to_interval(const Digraph& jet_graph, const Jet& j,
                        const JetExtension& ext) {
  JetCheck check = verify_jet(jet_graph, j);
  if (!check.ok) throw DomainError("invalid jet: " + check.message);

  std::size_t p = jet_graph.vertex_count();
  VertexSet covered(p);
  for (const VertexSet& layer : j.layers) covered |= layer;
  if (covered.count() != p)
    throw DomainError("jet layers must cover the whole graph");

  VertexSet beyond_first(p);
  for (std::size_t i = 1; i < j.layers.size(); ++i)
    beyond_first |= j.layers[i];
  if (ext.back_sources.universe() != 0 &&
      (ext.back_sources.universe() != p ||
       !ext.back_sources.is_subset_of(beyond_first)))
    throw DomainError(
        "back arcs to the heading may start only in layers beyond the first");

  VertexId x = p;
  std::vector<std::pair<VertexId, VertexId>> arcs = jet_graph.arcs();
  if (!j.layers.empty())
    for (VertexId w : j.layers[0]) arcs.emplace_back(x, w);
  if (ext.back_sources.universe() == p)
    for (VertexId w : ext.back_sources) arcs.emplace_back(w, x);
  if (ext.loop_at_heading) arcs.emplace_back(x, x);

  std::vector<std::string> labels = jet_graph.labels();
  std::string heading = ext.heading_label;
  if (heading.empty()) {
    heading = "x";
    while (std::find(labels.begin(), labels.end(), heading) != labels.end())
      heading += "'";
  } else if (std::find(labels.begin(), labels.end(), heading) != labels.end()) {
    throw DomainError("heading label '" + heading + "' is already in use");
  }
  labels.push_back(heading);

  Digraph result(p + 1, arcs, std::move(labels));
  Region r = region_of(result, x);
  if (r.vertices != VertexSet::all(p + 1))
    throw ContractViolation(
        "extending a valid jet by a heading must make the whole vertex set a "
        "region");
  return result;
}

}  // namespace graphdecomp
