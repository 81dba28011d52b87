#include "graphdecomp/graph.hpp"

#include <algorithm>
#include <string>

namespace graphdecomp {

namespace {

std::vector<std::string> make_labels(std::size_t p,
                                     std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(p);
    for (std::size_t i = 0; i < p; ++i) labels.push_back(std::to_string(i));
    return labels;
  }
  if (labels.size() != p)
    throw DomainError("label table size " + std::to_string(labels.size()) +
                      " does not match vertex count " + std::to_string(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (labels[i] == labels[j])
        throw DomainError("duplicate vertex label '" + labels[i] + "'");
  return labels;
}

}  // namespace

Digraph::Digraph(std::size_t p,
                 const std::vector<std::pair<VertexId, VertexId>>& arcs,
                 std::vector<std::string> labels)
    : p_(p),
      in_(p, VertexSet(p)),
      out_(p, VertexSet(p)),
      labels_(make_labels(p, std::move(labels))) {
  for (auto [u, v] : arcs) {
    check_vertex(u);
    check_vertex(v);
    out_[u].set(v);
    in_[v].set(u);
  }
  for (const auto& row : out_) q_ += row.count();
}

std::optional<VertexId> Digraph::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < p_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> Digraph::arcs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(q_);
  for (VertexId u = 0; u < p_; ++u)
    for (VertexId v : out_[u]) out.emplace_back(u, v);
  return out;
}

UndirectedGraph::UndirectedGraph(
    std::size_t p, const std::vector<std::pair<VertexId, VertexId>>& edges,
    std::vector<std::string> labels)
    : p_(p), adj_(p, VertexSet(p)), labels_(make_labels(p, std::move(labels))) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw DomainError("loop at vertex '" + labels_[u] +
                        "' not allowed in an undirected graph");
    adj_[u].set(v);
    adj_[v].set(u);
  }
  std::size_t total = 0;
  for (const auto& row : adj_) total += row.count();
  q_ = total / 2;
}

std::optional<VertexId> UndirectedGraph::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < p_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> UndirectedGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(q_);
  for (VertexId u = 0; u < p_; ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool is_path(const UndirectedGraph& g, const Path& path) {
  VertexSet seen(g.vertex_count());
  for (std::size_t i = 0; i < path.size(); ++i) {
    g.check_vertex(path[i]);
    if (seen.test(path[i])) return false;
    seen.set(path[i]);
    if (i > 0 && !g.has_edge(path[i - 1], path[i])) return false;
  }
  return true;
}

VertexSet in_set(const Digraph& g, VertexId v) { return g.in_neighbors(v); }

VertexSet out_set(const Digraph& g, VertexId v) { return g.out_neighbors(v); }

namespace {

void check_subset(std::size_t p, const VertexSet& u) {
  if (u.universe() != p)
    throw DomainError("vertex set over universe " +
                      std::to_string(u.universe()) +
                      " does not match a graph with " + std::to_string(p) +
                      " vertices");
}

// Dense reindexing of u; old_of[new] = old index.
std::vector<VertexId> reindex(const VertexSet& u) {
  return u.to_vector();
}

}  // namespace

Digraph induced_subgraph(const Digraph& g, const VertexSet& u) {
  check_subset(g.vertex_count(), u);
  std::vector<VertexId> old_of = reindex(u);
  std::vector<VertexId> new_of(g.vertex_count(), 0);
  for (std::size_t i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = i;

  std::vector<std::pair<VertexId, VertexId>> arcs;
  std::vector<std::string> labels;
  labels.reserve(old_of.size());
  for (VertexId v : old_of) {
    labels.push_back(g.label(v));
    VertexSet targets = g.out_neighbors(v) & u;
    for (VertexId w : targets) arcs.emplace_back(new_of[v], new_of[w]);
  }
  return Digraph(old_of.size(), arcs, std::move(labels));
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, const VertexSet& u) {
  check_subset(g.vertex_count(), u);
  std::vector<VertexId> old_of = reindex(u);
  std::vector<VertexId> new_of(g.vertex_count(), 0);
  for (std::size_t i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = i;

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::string> labels;
  labels.reserve(old_of.size());
  for (VertexId v : old_of) {
    labels.push_back(g.label(v));
    VertexSet targets = g.neighbors(v) & u;
    for (VertexId w : targets)
      if (v < w) edges.emplace_back(new_of[v], new_of[w]);
  }
  return UndirectedGraph(old_of.size(), edges, std::move(labels));
}

namespace {

// All vertices of u reachable from s by arcs staying inside u.
VertexSet reach_within(const std::vector<const VertexSet*>& step, std::size_t p,
                       const VertexSet& u, VertexId s) {
  VertexSet seen(p);
  seen.set(s);
  std::vector<VertexId> stack{s};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    VertexSet fresh = *step[v] & u;
    fresh -= seen;
    for (VertexId w : fresh) {
      seen.set(w);
      stack.push_back(w);
    }
  }
  return seen & u;
}

}  // namespace

bool is_connected_subset(const Digraph& g, const VertexSet& u) {
  check_subset(g.vertex_count(), u);
  std::size_t n = u.count();
  if (n <= 1) return true;
  VertexId s = u.first();
  std::vector<const VertexSet*> fwd(g.vertex_count());
  std::vector<const VertexSet*> bwd(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    fwd[v] = &g.out_neighbors(v);
    bwd[v] = &g.in_neighbors(v);
  }
  return reach_within(fwd, g.vertex_count(), u, s).count() == n &&
         reach_within(bwd, g.vertex_count(), u, s).count() == n;
}

bool is_connected_subset(const UndirectedGraph& g, const VertexSet& u) {
  check_subset(g.vertex_count(), u);
  std::size_t n = u.count();
  if (n <= 1) return true;
  std::vector<const VertexSet*> adj(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) adj[v] = &g.neighbors(v);
  return reach_within(adj, g.vertex_count(), u, u.first()).count() == n;
}

bool is_connected(const UndirectedGraph& g) {
  return is_connected_subset(g, VertexSet::all(g.vertex_count()));
}

std::size_t degree_between(const UndirectedGraph& g, const VertexSet& a,
                           const VertexSet& b) {
  check_subset(g.vertex_count(), a);
  check_subset(g.vertex_count(), b);
  if (a.intersects(b))
    throw DomainError("degree_between requires disjoint vertex sets");
  std::size_t total = 0;
  for (VertexId v : a) total += (g.neighbors(v) & b).count();
  return total;
}

namespace {

struct PathSearch {
  const UndirectedGraph& g;
  const LongestPathOptions& opts;
  LongestPathsResult result;
  Path current;
  VertexSet visited;

  explicit PathSearch(const UndirectedGraph& graph,
                      const LongestPathOptions& options)
      : g(graph), opts(options), visited(graph.vertex_count()) {}

  void record() {
    if (current.size() > result.max_length) {
      result.max_length = current.size();
      result.maximal.clear();
      result.truncated = false;
    }
    if (current.size() == result.max_length) {
      if (opts.max_paths != 0 && result.maximal.size() >= opts.max_paths)
        result.truncated = true;
      else
        result.maximal.push_back(current);
    }
  }

  void extend(VertexId v) {
    current.push_back(v);
    visited.set(v);
    VertexSet fresh = g.neighbors(v) - visited;
    if (fresh.empty()) {
      record();
    } else {
      // A longest path cannot stop while extensions exist, so only
      // recording at dead ends still finds every maximum-length path.
      for (VertexId w : fresh) extend(w);
    }
    visited.reset(v);
    current.pop_back();
  }
};

}  // namespace

LongestPathsResult longest_paths(const UndirectedGraph& g,
                                 const LongestPathOptions& opts) {
  if (g.vertex_count() > opts.vertex_budget)
    throw ResourceLimitError(
        "longest_paths: graph has " + std::to_string(g.vertex_count()) +
        " vertices, exceeding the exhaustive-search budget of " +
        std::to_string(opts.vertex_budget));
  PathSearch search(g, opts);
  for (VertexId s = 0; s < g.vertex_count(); ++s) search.extend(s);
  return search.result;
}

std::vector<Path> LongestPathsResult::premaximal() const {
  std::vector<Path> out;
  out.reserve(maximal.size());
  for (const Path& p : maximal) {
    if (p.size() < 2) continue;
    out.emplace_back(p.begin(), p.end() - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace graphdecomp
