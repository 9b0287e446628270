#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planar_turan/graph.hpp"
#include "planar_turan/patterns.hpp"
#include "planar_turan/rational.hpp"

namespace planar_turan {

enum class Verdict { skipped, held, violated };

std::string to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::skipped;
  std::string detail;

  static CheckResult skip(std::string why) { return {Verdict::skipped, std::move(why)}; }
  static CheckResult held() { return {Verdict::held, {}}; }
  static CheckResult violated(std::string what) { return {Verdict::violated, std::move(what)}; }

  bool hit() const noexcept { return verdict != Verdict::skipped; }
};

// Closed-neighbourhood decomposition around an edge xy.
struct EdgeNeighborhoodPartition {
  Vertex x = 0;
  Vertex y = 0;
  VertexSet common;   // S_xy
  VertexSet only_x;   // S_x
  VertexSet only_y;   // S_y
  VertexSet closed;   // S[xy]
  VertexSet outer;    // S': second neighbours of x or y outside S[xy]
  VertexSet outer4;   // S'_4

  // Throws UsageError unless xy is an edge.
  static EdgeNeighborhoodPartition of(const Graph& g, Vertex x, Vertex y);

  bool well_formed(const Graph& g) const;
};

// Per-graph facts shared by every check on that graph.
struct GraphFacts {
  const Graph* graph = nullptr;
  PatternSpec pattern;
  bool planar = false;
  bool pattern_free = false;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;

  static GraphFacts of(const Graph& g, PatternSpec p);
  const Graph& g() const { return *graph; }
};

CheckResult check_component_lemma(const GraphFacts& f, Vertex x);
CheckResult check_second_neighborhood_lemma(const GraphFacts& f, Vertex x);
CheckResult check_star_lemma(const GraphFacts& f, Vertex x);
CheckResult check_common_neighbor_lemma(const GraphFacts& f, Vertex x, Vertex y);
CheckResult check_claim_66_edge(const GraphFacts& f, Vertex x, Vertex y);
CheckResult check_claim_path(const GraphFacts& f, Vertex x, Vertex y, Vertex z);

struct W25Verdicts {
  CheckResult private_neighbors;  // S_x / S_y vertices see at most one vertex outside
  CheckResult outer;              // structure of S'; needs 2 <= |S_xy| <= 5

  Verdict overall() const;
};

// Pattern in f must be (2,5).
W25Verdicts check_w25_claims(const GraphFacts& f, Vertex x, Vertex y);

// With h+k = s in {5,6}, δ >= 3, Δ <= s, V_s independent, no two V_s
// vertices sharing a neighbour and no s-(s-1) star: n_s <= n_3 + ... + n_{s-2}.
CheckResult check_degree_census(const GraphFacts& f);

// Graph overloads recompute the facts.
CheckResult check_component_lemma(const Graph& g, PatternSpec p, Vertex x);
CheckResult check_second_neighborhood_lemma(const Graph& g, PatternSpec p, Vertex x);
CheckResult check_star_lemma(const Graph& g, PatternSpec p, Vertex x);
CheckResult check_common_neighbor_lemma(const Graph& g, PatternSpec p, Vertex x, Vertex y);
CheckResult check_claim_66_edge(const Graph& g, PatternSpec p, Vertex x, Vertex y);
CheckResult check_claim_path(const Graph& g, PatternSpec p, Vertex x, Vertex y, Vertex z);
W25Verdicts check_w25_claims(const Graph& g, Vertex x, Vertex y);

// Inequality evaluators: skipped when a hypothesis fails, otherwise the
// conclusion is asserted.

// Planar g on n >= 3 vertices: m <= 3n-6, and m <= 2n-4 when bipartite.
CheckResult check_euler_lemma(const Graph& g);

// Component C of a planar graph: e(G-C) <= τ(n-|C|), |C| <= 6/(3-τ),
// e(C) <= 3|C|-6, 0 <= τ < 3  =>  e(G) <= τn.
CheckResult check_absorption_bound(std::int64_t n, std::int64_t component_order,
                                   std::int64_t rest_edges, std::int64_t component_edges,
                                   Rational tau);

// d(x) >= h+k+1, e(G-N[x]) <= τ(n-d-1), e(N[x]) within its local bound
//  =>  e(G) <= τn, τ = 3(h+k)/(h+k+2).
CheckResult check_neighborhood_bound(PatternSpec p, std::int64_t n, std::int64_t degree,
                                     std::int64_t rest_edges, std::int64_t closed_edges);

// d(x) <= σ, e(G-x) <= σ(n-1)  =>  e(G) <= σn.
CheckResult check_single_vertex_bound(std::int64_t n, std::int64_t degree,
                                      std::int64_t rest_edges, Rational sigma);

// Random planar W-free instance. Components are random stacked
// triangulations mixed by diagonal flips, thinned by random deletions and
// repaired by deleting tree edges of detected copies. Deterministic per seed.
// Throws UsageError unless min_degree <= max_degree <= n-1, and
// GenerationFailed when the result drops below min_degree.
Graph generate_instance(PatternSpec p, std::size_t n, std::size_t min_degree,
                        std::size_t max_degree, std::uint64_t seed);

struct LemmaExample {
  Graph graph;
  std::string anchor;
  std::string detail;
};

struct LemmaReport {
  std::string lemma;
  bool applicable = true;
  std::size_t instances = 0;
  std::size_t anchors = 0;
  std::size_t hits = 0;            // anchors meeting the precondition
  std::size_t hit_instances = 0;   // instances with at least one hit
  std::size_t violations = 0;
  std::optional<LemmaExample> held_example;
  std::optional<LemmaExample> violated_example;
  std::optional<LemmaExample> skipped_example;

  bool healthy() const noexcept { return !applicable || hit_instances > 0; }
  bool passed() const noexcept { return violations == 0 && healthy(); }
};

// Identifiers accepted by run_lemma_suite.
const std::vector<std::string>& lemma_ids();

struct LemmaSuiteOptions {
  PatternSpec pattern{1, 2};
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::optional<std::string> lemma;  // all when empty
};

struct LemmaSuiteResult {
  std::vector<LemmaReport> reports;
  std::size_t generated = 0;
  std::size_t generation_failures = 0;

  bool passed() const;
};

// Throws UsageError on an unknown lemma id; UnsupportedRange outside
// 1 <= h <= 2 <= k <= 5. Reports are identical for any thread count.
LemmaSuiteResult run_lemma_suite(const LemmaSuiteOptions& options);

}  // namespace planar_turan
