#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphdecomp/bitset.hpp"
#include "graphdecomp/errors.hpp"

namespace graphdecomp {

using VertexId = std::size_t;

// Vertex count / arc count of a graph.
struct Volume {
  std::size_t p = 0;
  std::size_t q = 0;
  bool operator==(const Volume&) const = default;
};

// Finite directed graph over dense indices [0, p). Loops are allowed and a
// loop at v shows up in both the in- and out-neighborhood of v. Immutable
// after construction; duplicate arcs collapse.
class Digraph {
public:
  Digraph() = default;
  Digraph(std::size_t p, const std::vector<std::pair<VertexId, VertexId>>& arcs,
          std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return p_; }
  std::size_t arc_count() const { return q_; }
  Volume volume() const { return {p_, q_}; }

  bool has_arc(VertexId u, VertexId v) const {
    check_vertex(u);
    return out_[u].test(v);
  }

  // D-(v): inputs of v.
  const VertexSet& in_neighbors(VertexId v) const {
    check_vertex(v);
    return in_[v];
  }

  // D+(v): outputs of v.
  const VertexSet& out_neighbors(VertexId v) const {
    check_vertex(v);
    return out_[v];
  }

  std::size_t in_degree(VertexId v) const { return in_neighbors(v).count(); }
  std::size_t out_degree(VertexId v) const { return out_neighbors(v).count(); }

  const std::string& label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find_label(std::string_view label) const;

  // Arcs in (from, to) lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> arcs() const;

  void check_vertex(VertexId v) const {
    if (v >= p_)
      throw DomainError("unknown vertex index " + std::to_string(v) +
                        " in a graph with " + std::to_string(p_) + " vertices");
  }

private:
  std::size_t p_ = 0;
  std::size_t q_ = 0;
  std::vector<VertexSet> in_;
  std::vector<VertexSet> out_;
  std::vector<std::string> labels_;
};

// Finite undirected graph without loops over dense indices [0, p).
// Immutable after construction; duplicate edges collapse.
class UndirectedGraph {
public:
  UndirectedGraph() = default;
  UndirectedGraph(std::size_t p,
                  const std::vector<std::pair<VertexId, VertexId>>& edges,
                  std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return p_; }
  std::size_t edge_count() const { return q_; }
  Volume volume() const { return {p_, q_}; }

  bool has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    return adj_[u].test(v);
  }

  // D(v): the neighborhood of v.
  const VertexSet& neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::size_t degree(VertexId v) const { return neighbors(v).count(); }

  const std::string& label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find_label(std::string_view label) const;

  // Edges as (min, max) pairs in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  void check_vertex(VertexId v) const {
    if (v >= p_)
      throw DomainError("unknown vertex index " + std::to_string(v) +
                        " in a graph with " + std::to_string(p_) + " vertices");
  }

private:
  std::size_t p_ = 0;
  std::size_t q_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// A path is a sequence of pairwise-distinct vertices where consecutive
// vertices are adjacent in the carrier graph.
using Path = std::vector<VertexId>;

bool is_path(const UndirectedGraph& g, const Path& path);

// D-(v) as a fresh set (includes v itself iff the loop (v,v) is present).
VertexSet in_set(const Digraph& g, VertexId v);
// D+(v) as a fresh set.
VertexSet out_set(const Digraph& g, VertexId v);

// Subgraph generated by u, reindexed densely; labels carry over so results
// map back to the original vertices.
Digraph induced_subgraph(const Digraph& g, const VertexSet& u);
UndirectedGraph induced_subgraph(const UndirectedGraph& g, const VertexSet& u);

// Directed "connected" in the strong sense: every ordered pair of vertices
// of u is joined by a directed path inside the induced subgraph. Note this
// is strong connectivity, not weak. Empty sets and singletons count as
// connected.
bool is_connected_subset(const Digraph& g, const VertexSet& u);

// Undirected counterpart: the induced subgraph on u is connected.
bool is_connected_subset(const UndirectedGraph& g, const VertexSet& u);

// Whole-graph undirected connectivity; the empty graph counts as connected.
bool is_connected(const UndirectedGraph& g);

// Number of edges with one endpoint in a and the other in b; the sets must
// be disjoint.
std::size_t degree_between(const UndirectedGraph& g, const VertexSet& a,
                           const VertexSet& b);

struct LongestPathOptions {
  // Exhaustive DFS over all simple paths is exponential; refuse larger graphs.
  std::size_t vertex_budget = 15;
  // 0 = collect every maximal path; otherwise stop after this many.
  std::size_t max_paths = 0;
};

struct LongestPathsResult {
  // Number of vertices on a longest simple path (0 only for the empty graph).
  std::size_t max_length = 0;
  // Every longest path, as a directed vertex sequence; a path and its
  // reversal are listed separately.
  std::vector<Path> maximal;
  bool truncated = false;

  // Maximal paths with the last vertex removed, deduplicated.
  std::vector<Path> premaximal() const;
};

LongestPathsResult longest_paths(const UndirectedGraph& g,
                                 const LongestPathOptions& opts = {});

}  // namespace graphdecomp
