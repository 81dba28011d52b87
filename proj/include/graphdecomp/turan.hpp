#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphdecomp/graph.hpp"

namespace graphdecomp {

// Two triangles sharing exactly the center vertex; all five vertices are
// distinct and all six edges are present in the host graph.
struct BowtieWitness {
  VertexId center;
  std::pair<VertexId, VertexId> triangle1;
  std::pair<VertexId, VertexId> triangle2;
};

// Finds a bowtie as a (not necessarily induced) subgraph, or nullopt when
// the graph is bowtie-free.
std::optional<BowtieWitness> find_bowtie(const UndirectedGraph& g);

// floor(p^2/4) + 1: the most edges a bowtie-free graph on p > 4 vertices
// can have.
std::size_t bowtie_bound(std::size_t p);

// floor(p^2/4): the triangle-free bound.
std::size_t turan_k3_bound(std::size_t p);

// The complete bipartite graph on floor(p/2) + ceil(p/2) vertices plus one
// extra edge inside the larger side: bowtie-free with bowtie_bound(p) edges
// for p >= 3 (p = 2 gives a single edge and falls one short of the formula).
UndirectedGraph extremal_construction(std::size_t p);

enum class ExtremalMethod { construction, exhaustive };

struct ExtremalReport {
  std::size_t p = 0;
  std::size_t formula_bound = 0;  // floor(p^2/4) + 1
  std::size_t oracle_bound = 0;   // verified largest bowtie-free edge count
  UndirectedGraph witness;        // bowtie-free graph with oracle_bound edges
  ExtremalMethod method = ExtremalMethod::exhaustive;
  // Number of graphs refuted while certifying the upper bound.
  std::size_t refuted = 0;

  bool formula_matches() const { return oracle_bound == formula_bound; }
};

struct ExOracleOptions {
  std::size_t vertex_budget = 7;
  // 0 = one worker per hardware thread (capped by the chunk count).
  unsigned threads = 0;
  // Optional wall-clock budget for the enumeration.
  std::optional<std::chrono::milliseconds> time_budget;
};

// Certifies ex(p, bowtie) exactly. Upper bound by refutation: every graph
// with one more edge than the claimed bound contains a bowtie (enumerated
// exhaustively over labeled graphs with exactly that many edges, which
// suffices because bowtie-freeness survives edge deletion). Lower bound by
// a verified bowtie-free witness with exactly the claimed edge count. The
// candidate count is walked upward when a bowtie-free graph refutes a
// candidate, so graphs below five vertices report the true maximum
// (everything on at most four vertices is bowtie-free).
ExtremalReport ex_oracle(std::size_t p, const ExOracleOptions& opts = {});

// Companion check for the triangle bound: every graph on p vertices with
// turan_k3_bound(p) + 1 edges contains a triangle, and the balanced
// complete bipartite graph shows the bound is attained triangle-free.
bool verify_k3_bound(std::size_t p, const ExOracleOptions& opts = {});

struct PathDegreeReport {
  std::size_t path_length = 0;  // l, in vertices
  std::size_t degree = 0;       // d(x, U)
  std::size_t bound = 0;        // ceil(l/2) + 1
  bool holds = false;
  bool equality = false;
  // Only meaningful when equality holds:
  bool consecutive_pair = false;   // some v_j, v_{j+1} both adjacent to x
  bool endpoint_condition = false; // an end (l even) / both ends (l odd)
};

// Degree bound of an outside vertex against a path in a bowtie-free graph,
// with the equality-case structure checks.
PathDegreeReport check_path_degree_lemma(const UndirectedGraph& g,
                                         const Path& u, VertexId x);

struct PremaximalReport {
  std::size_t max_path_length = 0;   // vertices on a maximal path
  std::size_t paths_checked = 0;     // premaximal paths examined
  bool inflation_grows = true;       // Inf U != U for every premaximal U
  bool degree_gap_holds = true;      // second outside vertex drops two below
  bool corollary_holds = true;       // aggregate degree bound on Inf U \ U
  std::optional<std::string> violation;

  bool all_hold() const {
    return inflation_grows && degree_gap_holds && corollary_holds;
  }
};

struct PremaximalOptions {
  std::size_t vertex_budget = 12;
};

// Premaximal paths (maximal paths with the last vertex removed) of a
// connected bowtie-free graph with at least one edge: each one inflates
// properly; when an outside vertex attains the degree bound with equality
// every other outside vertex stays two below it; and the fringe of the
// inflation satisfies the aggregate degree bound.
PremaximalReport check_premaximal_lemmas(const UndirectedGraph& g,
                                         const PremaximalOptions& opts = {});

struct ShortPathReport {
  bool applicable = false;  // longest path has at most 3 vertices
  std::size_t max_path_vertices = 0;
  bool volume_bound_holds = false;
  // Complete graph on at most 3 vertices, or a star.
  bool recognized_shape = false;
};

// Connected graphs whose longest path has at most two edges are complete
// (p <= 3) or stars, and satisfy q <= p^2/4 + 1. Path "length" here counts
// edges; the vertex-count reading would exclude the very graphs the
// statement describes, so the edge-count reading is used.
ShortPathReport check_short_path_prop(const UndirectedGraph& g,
                                      const LongestPathOptions& opts = {});

struct VolumeBoundReport {
  Volume vol;
  std::optional<BowtieWitness> bowtie;  // present = not bowtie-free
  bool k4 = false;                      // isomorphic to K4, the lone exception
  bool applicable = false;              // bowtie-free and not K4
  bool holds = false;                   // q <= p^2/4 + 1 (when applicable)
};

// The volume bound q <= p^2/4 + 1 for bowtie-free graphs other than K4.
VolumeBoundReport volume_bound_check(const UndirectedGraph& g);

}  // namespace graphdecomp
