#include "doctest.h"

#include <algorithm>
#include <random>

#include "graphdecomp/graph.hpp"
#include "oracles.hpp"

using namespace graphdecomp;
using namespace testutil;

namespace {

Digraph chain_abc() {
  return Digraph(3, {{0, 1}, {1, 2}}, {"a", "b", "c"});
}

}  // namespace

TEST_SUITE("graph-core") {

TEST_CASE("in_set and out_set on a chain") {
  Digraph g = chain_abc();
  CHECK(to_id_set(in_set(g, 1)) == IdSet{0});
  CHECK(to_id_set(out_set(g, 1)) == IdSet{2});
  CHECK(to_id_set(out_set(g, 2)).empty());  // sink
  CHECK(to_id_set(in_set(g, 0)).empty());   // source
}

TEST_CASE("a loop shows up in both neighborhoods") {
  Digraph g(2, {{0, 0}});
  CHECK(in_set(g, 0).test(0));
  CHECK(out_set(g, 0).test(0));
  CHECK(to_id_set(in_set(g, 1)).empty());  // isolated vertex
}

TEST_CASE("unknown vertices are rejected") {
  Digraph g = chain_abc();
  CHECK_THROWS_AS(in_set(g, 7), DomainError);
  CHECK_THROWS_AS(g.label(3), DomainError);
  CHECK(g.find_label("b") == VertexId{1});
  CHECK(!g.find_label("z"));
}

TEST_CASE("degree sums equal the arc count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph g = random_digraph(rng, 1 + trial % 9, 0.4);
    std::size_t in_total = 0, out_total = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      in_total += g.in_degree(v);
      out_total += g.out_degree(v);
    }
    CHECK(in_total == g.arc_count());
    CHECK(out_total == g.arc_count());
  }
}

TEST_CASE("induced subgraph of a triangle") {
  UndirectedGraph g(3, {{0, 1}, {1, 2}, {0, 2}}, {"a", "b", "c"});
  UndirectedGraph h = induced_subgraph(g, VertexSet::of(3, {0, 1}));
  CHECK(h.vertex_count() == 2);
  CHECK(h.edge_count() == 1);
  CHECK(h.label(0) == "a");
  CHECK(h.label(1) == "b");

  UndirectedGraph whole = induced_subgraph(g, VertexSet::all(3));
  CHECK(whole.edges() == g.edges());

  UndirectedGraph empty = induced_subgraph(g, VertexSet(3));
  CHECK(empty.volume() == Volume{0, 0});

  CHECK_THROWS_AS(induced_subgraph(g, VertexSet::of(5, {0})), DomainError);
}

TEST_CASE("induced subgraph is monotone in the vertex set") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph g = random_digraph(rng, 6, 0.4);
    VertexSet w = random_subset(rng, 6);
    VertexSet u = w & random_subset(rng, 6);
    std::size_t arcs_u = induced_subgraph(g, u).arc_count();
    std::size_t arcs_w = induced_subgraph(g, w).arc_count();
    CHECK(arcs_u <= arcs_w);
  }
}

TEST_CASE("directed connectivity means strong connectivity") {
  Digraph two_cycle(2, {{0, 1}, {1, 0}});
  CHECK(is_connected_subset(two_cycle, VertexSet::all(2)));

  Digraph one_way(2, {{0, 1}});
  CHECK_FALSE(is_connected_subset(one_way, VertexSet::all(2)));
  CHECK(is_connected_subset(one_way, VertexSet::of(2, {0})));
  CHECK(is_connected_subset(one_way, VertexSet(2)));  // empty set convention
}

TEST_CASE("directed connectivity agrees with the transitive-closure oracle") {
  // Exhaustive over every digraph (loops included) on up to 4 vertices and
  // every vertex subset.
  std::size_t mismatches = 0;
  for (std::size_t p = 1; p <= 4; ++p) {
    unsigned long long arc_bits = 1ull << (p * p);
    for (unsigned long long mask = 0; mask < arc_bits; ++mask) {
      Digraph g = digraph_from_mask(p, mask, true);
      for (unsigned sub = 0; sub < (1u << p); ++sub) {
        VertexSet u = mask_to_set(p, sub);
        if (is_connected_subset(g, u) !=
            strongly_connected_subset_oracle(g, to_id_set(u)))
          ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("undirected connectivity") {
  UndirectedGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(is_connected(p4));
  UndirectedGraph two_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_edges));
  UndirectedGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(is_connected(k4));
  CHECK(is_connected(UndirectedGraph(0, {})));
}

TEST_CASE("loops are rejected by undirected graphs") {
  CHECK_THROWS_AS(UndirectedGraph(2, {{0, 0}}), DomainError);
}

TEST_CASE("longest paths on the named small graphs") {
  UndirectedGraph p4(4, {{0, 1}, {1, 2}, {2, 3}}, {"a", "b", "c", "d"});
  LongestPathsResult r = longest_paths(p4);
  CHECK(r.max_length == 4);
  CHECK(std::count(r.maximal.begin(), r.maximal.end(), Path{0, 1, 2, 3}) == 1);

  UndirectedGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(longest_paths(k3).max_length == 3);

  UndirectedGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  LongestPathsResult s = longest_paths(star);
  CHECK(s.max_length == 3);  // leaf - center - leaf
  for (const Path& path : s.maximal) CHECK(path[1] == 0);
}

TEST_CASE("longest paths match the independent oracle") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 70; ++trial) {
    UndirectedGraph g = random_undirected(rng, 2 + trial % 7, 0.5);
    LongestPathsResult r = longest_paths(g);
    auto oracle = longest_paths_oracle(g);
    CHECK(r.max_length == oracle.front().size());
    for (const Path& path : r.maximal) {
      CHECK(is_path(g, path));
      CHECK(path.size() == r.max_length);
    }
    // The oracle records dead-end paths; its longest ones must all be found.
    std::vector<Path> ours = r.maximal;
    std::vector<Path> longest;
    for (const auto& path : oracle)
      if (path.size() == oracle.front().size()) longest.push_back(path);
    std::sort(ours.begin(), ours.end());
    std::sort(longest.begin(), longest.end());
    longest.erase(std::unique(longest.begin(), longest.end()), longest.end());
    CHECK(ours == longest);
  }
}

TEST_CASE("longest paths refuse graphs beyond the budget") {
  UndirectedGraph big(16, {});
  CHECK_THROWS_AS(longest_paths(big), ResourceLimitError);
}

TEST_CASE("premaximal paths strip the final vertex") {
  UndirectedGraph p3(3, {{0, 1}, {1, 2}});
  LongestPathsResult r = longest_paths(p3);
  REQUIRE(r.max_length == 3);
  auto pre = r.premaximal();
  CHECK(std::count(pre.begin(), pre.end(), Path{0, 1}) == 1);
  CHECK(std::count(pre.begin(), pre.end(), Path{2, 1}) == 1);
}

TEST_CASE("degree between vertex sets") {
  UndirectedGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(degree_between(k4, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})) == 4);

  UndirectedGraph split(4, {{0, 1}, {2, 3}});
  CHECK(degree_between(split, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})) == 0);

  UndirectedGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(degree_between(star, VertexSet::of(4, {0}), VertexSet::of(4, {1, 2, 3})) == 3);

  CHECK_THROWS_AS(
      degree_between(k4, VertexSet::of(4, {0, 1}), VertexSet::of(4, {1, 2})),
      DomainError);
}

TEST_CASE("vertex set algebra basics") {
  VertexSet a = VertexSet::of(70, {0, 5, 64, 69});
  VertexSet b = VertexSet::of(70, {5, 69});
  CHECK(b.is_subset_of(a));
  CHECK((a - b) == VertexSet::of(70, {0, 64}));
  CHECK((a & b) == b);
  CHECK((a | b) == a);
  CHECK(a.count() == 4);
  CHECK(a.next(5) == 64);
  CHECK(a.next(69) == VertexSet::npos);
  CHECK(VertexSet::all(70).count() == 70);
  CHECK(VertexSet(70).complement() == VertexSet::all(70));
  CHECK_THROWS_AS(a.set(70), DomainError);
  CHECK_THROWS_AS((void)(a & VertexSet(3)), DomainError);
}

}  // TEST_SUITE
