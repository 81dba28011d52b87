#include "graphdecomp/turan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <future>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "graphdecomp/inflation.hpp"

namespace graphdecomp {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Lexicographic rank -> combination of {0..universe-1} of the given size.
std::vector<int> unrank_combination(int universe, int size, std::uint64_t rank) {
  std::vector<int> comb;
  comb.reserve(size);
  int c = 0;
  for (int slot = 0; slot < size; ++slot) {
    int remaining = size - slot;
    while (true) {
      std::uint64_t with_c = binomial(universe - c - 1, remaining - 1);
      if (rank < with_c) {
        comb.push_back(c++);
        break;
      }
      rank -= with_c;
      ++c;
    }
  }
  return comb;
}

bool next_combination(std::vector<int>& comb, int universe) {
  int size = static_cast<int>(comb.size());
  for (int i = size - 1; i >= 0; --i) {
    if (comb[i] < universe - (size - i)) {
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::pair<VertexId, VertexId>> all_pairs(std::size_t p) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(p * (p - 1) / 2);
  for (VertexId u = 0; u < p; ++u)
    for (VertexId v = u + 1; v < p; ++v) pairs.emplace_back(u, v);
  return pairs;
}

// Exact test for two vertex-disjoint edges among the edges inside the
// neighborhood of a center. Scans linearly: if nothing is disjoint from the
// first edge {a,b}, every edge meets it, and a disjoint pair must then pick
// one edge through a and one through b with distinct far endpoints.
std::optional<BowtieWitness> bowtie_at_center(
    const std::vector<VertexSet>& adj, VertexId c) {
  const VertexSet& nc = adj[c];
  if (nc.count() < 4) return std::nullopt;

  std::vector<std::pair<VertexId, VertexId>> inner;
  for (VertexId u : nc) {
    VertexSet shared = adj[u] & nc;
    for (VertexId v : shared)
      if (v > u) inner.emplace_back(u, v);
  }
  if (inner.size() < 2) return std::nullopt;

  auto [a, b] = inner.front();
  for (std::size_t i = 1; i < inner.size(); ++i) {
    auto [u, v] = inner[i];
    if (u != a && u != b && v != a && v != b)
      return BowtieWitness{c, inner.front(), inner[i]};
  }

  std::vector<VertexId> via_a, via_b;
  for (auto [u, v] : inner) {
    if (u == a && v != b) via_a.push_back(v);
    if (v == a && u != b) via_a.push_back(u);
    if (u == b && v != a) via_b.push_back(v);
    if (v == b && u != a) via_b.push_back(u);
  }
  auto witness = [&](VertexId x, VertexId y) {
    return BowtieWitness{c,
                         {std::min(a, x), std::max(a, x)},
                         {std::min(b, y), std::max(b, y)}};
  };
  if (!via_a.empty() && !via_b.empty()) {
    if (via_a[0] != via_b[0]) return witness(via_a[0], via_b[0]);
    if (via_a.size() >= 2) return witness(via_a[1], via_b[0]);
    if (via_b.size() >= 2) return witness(via_a[0], via_b[1]);
  }
  return std::nullopt;
}

std::optional<BowtieWitness> find_bowtie_adj(const std::vector<VertexSet>& adj) {
  for (VertexId c = 0; c < adj.size(); ++c)
    if (auto w = bowtie_at_center(adj, c)) return w;
  return std::nullopt;
}

bool contains_bowtie(const std::vector<VertexSet>& adj) {
  return find_bowtie_adj(adj).has_value();
}

bool contains_triangle(const std::vector<VertexSet>& adj) {
  for (VertexId u = 0; u < adj.size(); ++u)
    for (VertexId v : adj[u]) {
      if (v <= u) continue;
      if (adj[u].intersects(adj[v])) return true;
    }
  return false;
}

struct RefutationResult {
  bool all_refuted = true;
  std::size_t refuted = 0;
  std::optional<std::vector<std::pair<VertexId, VertexId>>> counterexample;
};

// Runs the forbidden-subgraph predicate over every labeled graph on p
// vertices with exactly m edges. The combination sequence is split into
// blocks handed to a worker pool; the lexicographically first graph
// without the forbidden subgraph (if any) is reported. A deadline aborts
// cleanly with ResourceLimitError.
template <class Pred>
RefutationResult refute_all(std::size_t p, std::size_t m, unsigned threads,
                            const std::optional<std::chrono::milliseconds>&
                                time_budget,
                            Pred&& contains_forbidden) {
  const auto pairs = all_pairs(p);
  const int universe = static_cast<int>(pairs.size());
  const std::uint64_t total = binomial(universe, m);

  RefutationResult result;
  if (total == 0) return result;  // no graphs with m edges: vacuously refuted

  const std::uint64_t block = 4096;
  const std::uint64_t blocks = (total + block - 1) / block;
  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, blocks));

  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> best_rank{UINT64_MAX};
  std::atomic<std::uint64_t> refuted{0};
  std::atomic<bool> timed_out{false};
  std::mutex best_mutex;
  std::vector<std::pair<VertexId, VertexId>> best_edges;
  const auto deadline = time_budget
                            ? std::optional(std::chrono::steady_clock::now() +
                                            *time_budget)
                            : std::nullopt;

  auto work = [&]() {
    std::vector<VertexSet> adj(p, VertexSet(p));
    std::uint64_t local_refuted = 0;
    while (true) {
      std::uint64_t b = next_block.fetch_add(1);
      std::uint64_t lo = b * block;
      if (lo >= total || timed_out.load()) break;
      if (best_rank.load() < lo) break;  // cannot beat an earlier witness
      std::uint64_t hi = std::min(lo + block, total);
      std::vector<int> comb = unrank_combination(universe, static_cast<int>(m), lo);
      for (std::uint64_t r = lo; r < hi; ++r) {
        if (deadline && (r & 63) == 0 &&
            std::chrono::steady_clock::now() > *deadline) {
          timed_out.store(true);
          break;
        }
        for (auto& row : adj)
          row = VertexSet(p);
        for (int idx : comb) {
          auto [u, v] = pairs[idx];
          adj[u].set(v);
          adj[v].set(u);
        }
        if (contains_forbidden(adj)) {
          ++local_refuted;
        } else {
          // Counterexamples are rare; a mutex keeps rank and edges in step.
          std::lock_guard<std::mutex> lock(best_mutex);
          if (r < best_rank.load()) {
            best_rank.store(r);
            best_edges.clear();
            for (int idx : comb) best_edges.push_back(pairs[idx]);
          }
        }
        next_combination(comb, universe);
      }
    }
    refuted.fetch_add(local_refuted);
  };

  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (unsigned t = 0; t < workers; ++t)
    futures.push_back(std::async(std::launch::async, work));
  for (auto& f : futures) f.get();

  if (timed_out.load())
    throw ResourceLimitError(
        "enumeration of " + std::to_string(total) +
        " graphs exceeded the configured time budget");

  result.refuted = static_cast<std::size_t>(refuted.load());
  if (best_rank.load() != UINT64_MAX) {
    result.all_refuted = false;
    std::lock_guard<std::mutex> lock(best_mutex);
    result.counterexample = best_edges;
  }
  return result;
}

std::string estimate_work(std::size_t p, std::size_t m) {
  double e = static_cast<double>(p) * (p - 1) / 2;
  double mm = std::min<double>(m, e);
  double log10_count =
      (std::lgamma(e + 1) - std::lgamma(mm + 1) - std::lgamma(e - mm + 1)) /
      std::log(10.0);
  return "about 10^" + std::to_string(static_cast<long long>(log10_count)) +
         " graphs";
}

}  // namespace

std::optional<BowtieWitness> find_bowtie(const UndirectedGraph& g) {
  std::vector<VertexSet> adj;
  adj.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbors(v));
  return find_bowtie_adj(adj);
}

std::size_t bowtie_bound(std::size_t p) { return p * p / 4 + 1; }

std::size_t turan_k3_bound(std::size_t p) { return p * p / 4; }

UndirectedGraph extremal_construction(std::size_t p) {
  if (p < 2) throw DomainError("extremal construction needs at least 2 vertices");
  std::size_t larger = (p + 1) / 2;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 0; a < larger; ++a)
    for (VertexId b = larger; b < p; ++b) edges.emplace_back(a, b);
  if (larger >= 2) edges.emplace_back(0, 1);

  UndirectedGraph g(p, edges);
  if (find_bowtie(g))
    throw ContractViolation("extremal construction must be bowtie-free");
  if (p >= 3 && g.edge_count() != bowtie_bound(p))
    throw ContractViolation("extremal construction has the wrong edge count");
  return g;
}

ExtremalReport ex_oracle(std::size_t p, const ExOracleOptions& opts) {
  if (p < 2) throw DomainError("ex_oracle needs at least 2 vertices");
  if (p > opts.vertex_budget)
    throw ResourceLimitError(
        "ex_oracle: p = " + std::to_string(p) + " exceeds the budget of " +
        std::to_string(opts.vertex_budget) + "; refuting would scan " +
        estimate_work(p, bowtie_bound(p) + 1));

  const std::size_t max_q = p * (p - 1) / 2;
  ExtremalReport report;
  report.p = p;
  report.formula_bound = bowtie_bound(p);
  report.method = ExtremalMethod::exhaustive;

  auto finish = [&](std::size_t bound, UndirectedGraph witness,
                    std::size_t refuted) {
    if (witness.edge_count() != bound || find_bowtie(witness))
      throw ContractViolation("oracle witness must be bowtie-free with exactly "
                              "the certified number of edges");
    report.oracle_bound = bound;
    report.witness = std::move(witness);
    report.refuted = refuted;
    return report;
  };

  std::optional<UndirectedGraph> lower_witness;
  std::size_t m = report.formula_bound + 1;
  while (true) {
    if (m > max_q) {
      // No graph carries m edges. Either the escalation already produced a
      // bowtie-free graph with m-1 edges, or (tiny p) search downward for
      // the densest bowtie-free graph.
      if (lower_witness) return finish(m - 1, std::move(*lower_witness), 0);
      for (std::size_t q = max_q;; --q) {
        RefutationResult r =
            refute_all(p, q, opts.threads, opts.time_budget, contains_bowtie);
        if (r.counterexample)
          return finish(q, UndirectedGraph(p, *r.counterexample), 0);
        if (q == 0) break;  // unreachable: the empty graph is bowtie-free
      }
      throw ContractViolation("no bowtie-free graph found at any edge count");
    }

    RefutationResult r =
        refute_all(p, m, opts.threads, opts.time_budget, contains_bowtie);
    if (r.all_refuted) {
      UndirectedGraph witness =
          lower_witness ? std::move(*lower_witness) : extremal_construction(p);
      return finish(m - 1, std::move(witness), r.refuted);
    }
    lower_witness = UndirectedGraph(p, *r.counterexample);
    ++m;
  }
}

bool verify_k3_bound(std::size_t p, const ExOracleOptions& opts) {
  if (p < 2) throw DomainError("verify_k3_bound needs at least 2 vertices");
  if (p > opts.vertex_budget)
    throw ResourceLimitError(
        "verify_k3_bound: p = " + std::to_string(p) +
        " exceeds the budget of " + std::to_string(opts.vertex_budget) +
        "; refuting would scan " + estimate_work(p, turan_k3_bound(p) + 1));

  RefutationResult r = refute_all(p, turan_k3_bound(p) + 1, opts.threads,
                                  opts.time_budget, contains_triangle);
  if (!r.all_refuted) return false;

  // The balanced complete bipartite graph attains the bound triangle-free.
  std::size_t larger = (p + 1) / 2;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId a = 0; a < larger; ++a)
    for (VertexId b = larger; b < p; ++b) edges.emplace_back(a, b);
  UndirectedGraph bipartite(p, edges);
  if (bipartite.edge_count() != turan_k3_bound(p)) return false;
  std::vector<VertexSet> adj;
  for (VertexId v = 0; v < p; ++v) adj.push_back(bipartite.neighbors(v));
  return !contains_triangle(adj);
}

namespace {

std::string describe_bowtie(const UndirectedGraph& g, const BowtieWitness& w) {
  return "center '" + g.label(w.center) + "', triangles {" +
         g.label(w.triangle1.first) + "," + g.label(w.triangle1.second) +
         "} and {" + g.label(w.triangle2.first) + "," +
         g.label(w.triangle2.second) + "}";
}

std::size_t ceil_half(std::size_t l) { return (l + 1) / 2; }

}  // namespace

PathDegreeReport check_path_degree_lemma(const UndirectedGraph& g,
                                         const Path& u, VertexId x) {
  if (auto w = find_bowtie(g))
    throw DomainError("graph is not bowtie-free: " + describe_bowtie(g, *w));
  if (u.empty() || !is_path(g, u))
    throw DomainError("the vertex sequence is not a path of the graph");
  g.check_vertex(x);
  if (std::find(u.begin(), u.end(), x) != u.end())
    throw DomainError("vertex '" + g.label(x) + "' lies on the path");

  PathDegreeReport report;
  report.path_length = u.size();
  report.bound = ceil_half(u.size()) + 1;
  for (VertexId v : u)
    if (g.has_edge(x, v)) ++report.degree;
  report.holds = report.degree <= report.bound;
  report.equality = report.degree == report.bound;

  if (report.equality) {
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
      if (g.has_edge(x, u[i]) && g.has_edge(x, u[i + 1])) {
        report.consecutive_pair = true;
        break;
      }
    bool first = g.has_edge(x, u.front());
    bool last = g.has_edge(x, u.back());
    report.endpoint_condition =
        (u.size() % 2 == 0) ? (first || last) : (first && last);
  }
  return report;
}

PremaximalReport check_premaximal_lemmas(const UndirectedGraph& g,
                                         const PremaximalOptions& opts) {
  if (g.vertex_count() > opts.vertex_budget)
    throw ResourceLimitError(
        "check_premaximal_lemmas: graph has " +
        std::to_string(g.vertex_count()) +
        " vertices, exceeding the budget of " +
        std::to_string(opts.vertex_budget));
  if (!is_connected(g)) throw DomainError("the graph must be connected");
  if (g.edge_count() == 0)
    throw DomainError("the graph must span at least one edge");
  if (auto w = find_bowtie(g))
    throw DomainError("graph is not bowtie-free: " + describe_bowtie(g, *w));

  LongestPathsResult lp = longest_paths(g, {opts.vertex_budget, 0});
  PremaximalReport report;
  report.max_path_length = lp.max_length;

  auto note = [&](bool& flag, const std::string& message) {
    flag = false;
    if (!report.violation) report.violation = message;
  };

  for (const Path& path : lp.premaximal()) {
    ++report.paths_checked;
    const std::size_t l = path.size();
    VertexSet on_path(g.vertex_count());
    for (VertexId v : path) on_path.set(v);

    VertexSet inflated = inflate(g, on_path);
    if (inflated == on_path)
      note(report.inflation_grows,
           "a premaximal path failed to inflate properly");

    // Degrees of the outside vertices against the path.
    const std::size_t cap = ceil_half(l) + 1;
    std::optional<VertexId> attainer;
    for (VertexId y = 0; y < g.vertex_count(); ++y) {
      if (on_path.test(y)) continue;
      std::size_t d = (g.neighbors(y) & on_path).count();
      if (d != cap) continue;
      if (attainer)
        note(report.degree_gap_holds,
             "two outside vertices both attain the degree bound");
      attainer = y;
    }
    if (attainer) {
      for (VertexId y = 0; y < g.vertex_count(); ++y) {
        if (on_path.test(y) || y == *attainer) continue;
        std::size_t d = (g.neighbors(y) & on_path).count();
        if (d + 2 > cap)
          note(report.degree_gap_holds,
               "an outside vertex exceeds the reduced degree bound while "
               "another attains the full one");
      }
    }

    const std::size_t grown = inflated.count();
    if (grown >= l + 2) {
      std::size_t crossing = degree_between(g, inflated - on_path, on_path);
      if (crossing > (grown - l) * ceil_half(l))
        note(report.corollary_holds,
             "the inflation fringe exceeds the aggregate degree bound");
    }
  }
  return report;
}

ShortPathReport check_short_path_prop(const UndirectedGraph& g,
                                      const LongestPathOptions& opts) {
  if (!is_connected(g)) throw DomainError("the graph must be connected");
  LongestPathsResult lp = longest_paths(g, opts);

  ShortPathReport report;
  report.max_path_vertices = lp.max_length;
  report.applicable = lp.max_length <= 3;
  if (!report.applicable) return report;

  const std::size_t p = g.vertex_count();
  const std::size_t q = g.edge_count();
  report.volume_bound_holds = 4 * q <= p * p + 4;

  bool complete_small = p <= 3 && q == p * (p - 1) / 2;
  bool star = false;
  if (q == p - 1)
    for (VertexId v = 0; v < p && !star; ++v)
      if (g.degree(v) == p - 1) star = true;
  report.recognized_shape = complete_small || star;
  return report;
}

VolumeBoundReport volume_bound_check(const UndirectedGraph& g) {
  VolumeBoundReport report;
  report.vol = g.volume();
  report.bowtie = find_bowtie(g);
  report.k4 = report.vol.p == 4 && report.vol.q == 6;
  report.applicable = !report.bowtie && !report.k4;
  report.holds = 4 * report.vol.q <= report.vol.p * report.vol.p + 4;
  return report;
}

}  // namespace graphdecomp
