#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planar_turan/canonical.hpp"
#include "planar_turan/graph.hpp"
#include "planar_turan/patterns.hpp"

namespace planar_turan {

inline constexpr std::size_t kSearchMaxOrder = 10;

// Must be hereditary (closed under deleting vertices and edges); the
// enumerators prune whole subtrees on a false result.
using GraphFilter = std::function<bool(const Graph&)>;

GraphFilter accept_all();
GraphFilter planar_filter();
GraphFilter planar_free_filter(PatternSpec p);

// One representative per isomorphism class on n vertices passing the
// filter. Vertex augmentation with canonical-deletion acceptance.
void enumerate_graphs(std::size_t n, const GraphFilter& filter,
                      const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_graph_list(std::size_t n, const GraphFilter& filter = accept_all());

enum class SearchEngine { augment, descend };

std::string to_string(SearchEngine e);
SearchEngine parse_engine(const std::string& name);

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0: unlimited
  std::chrono::milliseconds max_time{0};
};

struct SearchOptions {
  SearchEngine engine = SearchEngine::augment;
  std::size_t threads = 1;  // augment only; descend is sequential
  SearchBudget budget;
};

struct PruningStats {
  std::uint64_t filtered = 0;  // caller-supplied filter rejections
  std::uint64_t nonplanar = 0;
  std::uint64_t contains_pattern = 0;
  std::uint64_t noncanonical = 0;  // augment: rejected by the deletion rule
  std::uint64_t duplicate = 0;     // augment: isomorphic sibling
  std::uint64_t edge_count = 0;    // descend: too few edges left to reach target
};

struct SearchResult {
  std::size_t n = 0;
  PatternSpec pattern;
  std::size_t value = 0;
  Graph witness;  // canonical form of the deterministic representative
  bool exact = true;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> wall_time{0};
  PruningStats pruning;
  SearchEngine engine = SearchEngine::augment;
  std::size_t threads = 1;
  // Post-hoc comparison with the extremal upper bound, when (h,k) is in range.
  std::optional<std::int64_t> upper_floor;
  bool within_bound() const { return !upper_floor || static_cast<std::int64_t>(value) <= *upper_floor; }
};

// Exact maximum edge count over planar W_{h,k}-free graphs on n <= 10
// vertices. The extremal upper bound is never used for pruning.
SearchResult exact_ex(std::size_t n, PatternSpec p, const SearchOptions& options = {});

}  // namespace planar_turan
