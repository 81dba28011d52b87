#include "doctest.h"

#include <random>

#include "graphdecomp/turan.hpp"
#include "oracles.hpp"

using namespace graphdecomp;
using namespace testutil;

namespace {

UndirectedGraph complete(std::size_t p) {
  EdgeList edges;
  for (VertexId u = 0; u < p; ++u)
    for (VertexId v = u + 1; v < p; ++v) edges.emplace_back(u, v);
  return UndirectedGraph(p, edges);
}

UndirectedGraph glued_triangles() {
  // Two triangles sharing vertex 0.
  return UndirectedGraph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

bool witness_is_valid(const UndirectedGraph& g, const BowtieWitness& w) {
  std::set<VertexId> five{w.center, w.triangle1.first, w.triangle1.second,
                          w.triangle2.first, w.triangle2.second};
  if (five.size() != 5) return false;
  return g.has_edge(w.center, w.triangle1.first) &&
         g.has_edge(w.center, w.triangle1.second) &&
         g.has_edge(w.triangle1.first, w.triangle1.second) &&
         g.has_edge(w.center, w.triangle2.first) &&
         g.has_edge(w.center, w.triangle2.second) &&
         g.has_edge(w.triangle2.first, w.triangle2.second);
}

}  // namespace

TEST_SUITE("turan") {

TEST_CASE("four vertices cannot hold a bowtie") {
  CHECK_FALSE(find_bowtie(complete(4)).has_value());
}

TEST_CASE("two glued triangles are the bowtie itself") {
  auto w = find_bowtie(glued_triangles());
  REQUIRE(w.has_value());
  CHECK(w->center == 0);
  CHECK(witness_is_valid(glued_triangles(), *w));
}

TEST_CASE("the complete graph on five vertices has a bowtie") {
  auto w = find_bowtie(complete(5));
  REQUIRE(w.has_value());
  CHECK(witness_is_valid(complete(5), *w));
}

TEST_CASE("bowtie detection agrees with the 5-subset oracle, exhaustively") {
  for (std::size_t p = 0; p <= 6; ++p) {
    unsigned long long edge_bits = 1ull << (p * (p - 1) / 2);
    for (unsigned long long mask = 0; mask < edge_bits; ++mask) {
      UndirectedGraph g = undirected_from_mask(p, mask);
      auto found = find_bowtie(g);
      CHECK(found.has_value() == has_bowtie_oracle(g));
      if (found) CHECK(witness_is_valid(g, *found));
    }
  }
}

TEST_CASE("bowtie detection agrees with the oracle on random graphs") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t p = 5 + trial % 5;
    UndirectedGraph g = random_undirected(rng, p, 0.4);
    auto found = find_bowtie(g);
    CHECK(found.has_value() == has_bowtie_oracle(g));
    if (found) CHECK(witness_is_valid(g, *found));
  }
}

TEST_CASE("disjoint unions of bound-respecting graphs respect the bound") {
  std::mt19937 rng(65);
  int checked = 0;
  while (checked < 100) {
    UndirectedGraph a = random_undirected(rng, 2 + rng() % 6, 0.4);
    UndirectedGraph b = random_undirected(rng, 2 + rng() % 6, 0.4);
    if (find_bowtie(a) || find_bowtie(b)) continue;
    if (4 * a.edge_count() > a.vertex_count() * a.vertex_count() + 4) continue;
    if (4 * b.edge_count() > b.vertex_count() * b.vertex_count() + 4) continue;
    ++checked;
    EdgeList merged = a.edges();
    std::size_t offset = a.vertex_count();
    for (auto [u, v] : b.edges()) merged.emplace_back(u + offset, v + offset);
    UndirectedGraph whole(a.vertex_count() + b.vertex_count(), merged);
    std::size_t p = whole.vertex_count();
    CHECK(4 * whole.edge_count() <= p * p + 4);
  }
}

TEST_CASE("bowtie-freeness survives edge deletion") {
  std::mt19937 rng(62);
  int checked = 0;
  while (checked < 100) {
    UndirectedGraph g = random_undirected(rng, 8, 0.3);
    if (find_bowtie(g) || g.edge_count() == 0) continue;
    ++checked;
    EdgeList edges = g.edges();
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    edges.erase(edges.begin() + pick(rng));
    CHECK_FALSE(find_bowtie(UndirectedGraph(8, edges)).has_value());
  }
}

TEST_CASE("the construction hits the bound") {
  UndirectedGraph g5 = extremal_construction(5);
  CHECK(g5.edge_count() == 7);
  UndirectedGraph g6 = extremal_construction(6);
  CHECK(g6.edge_count() == 10);
  for (std::size_t p = 3; p <= 64; ++p) {
    UndirectedGraph g = extremal_construction(p);
    CHECK(g.edge_count() == p * p / 4 + 1);
    CHECK_FALSE(find_bowtie(g).has_value());
  }
  UndirectedGraph g2 = extremal_construction(2);
  CHECK(g2.edge_count() == 1);  // one short of the formula, as documented
  CHECK_THROWS_AS(extremal_construction(1), DomainError);
}

TEST_CASE("the oracle certifies the known small values") {
  ExtremalReport r5 = ex_oracle(5);
  CHECK(r5.oracle_bound == 7);
  CHECK(r5.formula_matches());
  CHECK(r5.witness.edge_count() == 7);
  CHECK_FALSE(find_bowtie(r5.witness).has_value());

  ExtremalReport r4 = ex_oracle(4);
  CHECK(r4.oracle_bound == 6);
  CHECK(r4.formula_bound == 5);
  CHECK_FALSE(r4.formula_matches());
  CHECK(r4.witness.edge_count() == 6);  // the complete graph on 4 vertices

  ExtremalReport r2 = ex_oracle(2);
  CHECK(r2.oracle_bound == 1);
  ExtremalReport r3 = ex_oracle(3);
  CHECK(r3.oracle_bound == 3);
  CHECK(r3.formula_matches());
}

TEST_CASE("the certified bounds match a full enumeration") {
  // Second route: scan every labeled graph outright (no refutation shortcut)
  // with the brute-force bowtie oracle and take the densest bowtie-free one.
  for (std::size_t p = 2; p <= 6; ++p) {
    std::size_t best = 0;
    unsigned long long edge_bits = 1ull << (p * (p - 1) / 2);
    for (unsigned long long mask = 0; mask < edge_bits; ++mask) {
      UndirectedGraph g = undirected_from_mask(p, mask);
      if (!has_bowtie_oracle(g)) best = std::max(best, g.edge_count());
    }
    CHECK(ex_oracle(p).oracle_bound == best);
  }
}

TEST_CASE("the oracle respects its budgets") {
  CHECK_THROWS_AS(ex_oracle(8), ResourceLimitError);  // default budget is 7
  ExOracleOptions tight;
  tight.time_budget = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(ex_oracle(6, tight), ResourceLimitError);
  CHECK_THROWS_AS(ex_oracle(1), DomainError);
}

TEST_CASE("triangle bound values and verification") {
  CHECK(turan_k3_bound(4) == 4);
  CHECK(turan_k3_bound(5) == 6);
  CHECK(turan_k3_bound(6) == 9);
  CHECK(verify_k3_bound(4));
  CHECK(verify_k3_bound(5));
}

TEST_CASE("path degree bound on a single edge") {
  // Any outside vertex sees at most 2 vertices of a 2-vertex path.
  UndirectedGraph g(3, {{0, 1}, {0, 2}, {1, 2}});
  PathDegreeReport r = check_path_degree_lemma(g, Path{0, 1}, 2);
  CHECK(r.holds);
  CHECK(r.degree == 2);
  CHECK(r.bound == 2);
  CHECK(r.equality);
  CHECK(r.consecutive_pair);
  CHECK(r.endpoint_condition);
}

TEST_CASE("path degree bound across the extremal construction") {
  UndirectedGraph g = extremal_construction(6);
  LongestPathsResult lp = longest_paths(g);
  for (const Path& path : lp.maximal) {
    VertexSet on(g.vertex_count());
    for (VertexId v : path) on.set(v);
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      if (on.test(x)) continue;
      CHECK(check_path_degree_lemma(g, path, x).holds);
    }
  }
}

TEST_CASE("equality cases carry the asserted structure") {
  std::mt19937 rng(63);
  int equalities = 0;
  for (int trial = 0; trial < 3000 && equalities < 30; ++trial) {
    std::size_t p = 4 + trial % 5;
    UndirectedGraph g = random_undirected(rng, p, 0.4);
    if (find_bowtie(g)) continue;
    LongestPathsResult lp = longest_paths(g);
    for (const Path& path : lp.premaximal()) {
      VertexSet on(g.vertex_count());
      for (VertexId v : path) on.set(v);
      for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (on.test(x)) continue;
        PathDegreeReport r = check_path_degree_lemma(g, path, x);
        CHECK(r.holds);
        if (r.equality) {
          ++equalities;
          CHECK(r.consecutive_pair);
          CHECK(r.endpoint_condition);
        }
      }
    }
  }
  CHECK(equalities > 0);
}

TEST_CASE("path lemma preconditions") {
  UndirectedGraph bowtied = glued_triangles();
  CHECK_THROWS_AS(check_path_degree_lemma(bowtied, Path{1, 2}, 3), DomainError);
  UndirectedGraph g(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(check_path_degree_lemma(g, Path{0, 1}, 1), DomainError);
  CHECK_THROWS_AS(check_path_degree_lemma(g, Path{0, 2}, 1), DomainError);
}

TEST_CASE("premaximal paths of the path graph inflate") {
  UndirectedGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  PremaximalReport r = check_premaximal_lemmas(g);
  CHECK(r.max_path_length == 4);
  CHECK(r.paths_checked > 0);
  CHECK(r.all_hold());
}

TEST_CASE("premaximal lemmas hold on random bowtie-free graphs") {
  std::mt19937 rng(64);
  int checked = 0;
  while (checked < 120) {
    std::size_t p = 2 + rng() % 7;
    UndirectedGraph g = random_undirected(rng, p, 0.45);
    if (!is_connected(g) || g.edge_count() == 0 || find_bowtie(g)) continue;
    ++checked;
    PremaximalReport r = check_premaximal_lemmas(g);
    CHECK(r.all_hold());
    if (!r.all_hold()) MESSAGE(*r.violation);
  }
}

TEST_CASE("premaximal preconditions") {
  CHECK_THROWS_AS(check_premaximal_lemmas(UndirectedGraph(3, {})), DomainError);
  CHECK_THROWS_AS(check_premaximal_lemmas(UndirectedGraph(4, {{0, 1}, {2, 3}})),
                  DomainError);
  CHECK_THROWS_AS(check_premaximal_lemmas(glued_triangles()), DomainError);
}

TEST_CASE("every short-path graph is complete or a star, exhaustively") {
  for (std::size_t p = 1; p <= 6; ++p) {
    unsigned long long edge_bits = 1ull << (p * (p - 1) / 2);
    for (unsigned long long mask = 0; mask < edge_bits; ++mask) {
      UndirectedGraph g = undirected_from_mask(p, mask);
      if (!is_connected(g)) continue;
      ShortPathReport r = check_short_path_prop(g);
      if (!r.applicable) continue;
      CHECK(r.volume_bound_holds);
      CHECK(r.recognized_shape);
    }
  }
}

TEST_CASE("short-path graphs are complete or stars") {
  UndirectedGraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  ShortPathReport r = check_short_path_prop(star);
  CHECK(r.applicable);
  CHECK(r.max_path_vertices == 3);
  CHECK(r.volume_bound_holds);
  CHECK(r.recognized_shape);

  ShortPathReport k3 = check_short_path_prop(complete(3));
  CHECK(k3.applicable);
  CHECK(k3.volume_bound_holds);
  CHECK(k3.recognized_shape);

  UndirectedGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(check_short_path_prop(p4).applicable);
}

TEST_CASE("volume bound across the constructions") {
  for (std::size_t p = 5; p <= 9; ++p) {
    VolumeBoundReport r = volume_bound_check(extremal_construction(p));
    CHECK(r.applicable);
    CHECK(r.holds);
    CHECK(r.vol.q == bowtie_bound(p));  // attained with equality
  }
}

TEST_CASE("the complete graph on four vertices is exempt") {
  VolumeBoundReport r = volume_bound_check(complete(4));
  CHECK(r.k4);
  CHECK_FALSE(r.applicable);
  CHECK(r.vol.q == 6);
}

TEST_CASE("graphs with a bowtie are out of scope for the bound") {
  VolumeBoundReport r = volume_bound_check(glued_triangles());
  CHECK(r.bowtie.has_value());
  CHECK_FALSE(r.applicable);
}

}  // TEST_SUITE
