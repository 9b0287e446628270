#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planar_turan/extremal_search.hpp"
#include "planar_turan/graph.hpp"
#include "planar_turan/patterns.hpp"

namespace planar_turan {

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

enum class Provenance { witness_family, search_result, user_input };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& s);

struct SearchSummary {
  std::size_t value = 0;
  bool exact = true;
  std::string engine;
  std::uint64_t nodes_explored = 0;
  double wall_time_seconds = 0.0;
  std::size_t threads = 1;
};

// Self-contained record of a claimed witness. The bound row is recomputed
// from (h,k,n) on verification rather than trusted.
struct Certificate {
  int schema_version = kCertificateSchemaVersion;
  Graph graph;
  std::size_t n = 0;
  std::size_t m = 0;
  PatternSpec pattern;
  bool planar = false;
  bool pattern_free = false;
  Provenance provenance = Provenance::user_input;
  // "theorem lower bound", "heuristic lower bound", "exact search value", ...
  std::string label;
  std::optional<SearchSummary> search;
  std::string tool_version = kToolVersion;
  std::string timestamp;
};

// Fills n, m, planar and pattern_free by direct computation.
Certificate make_certificate(const Graph& g, PatternSpec p, Provenance provenance,
                             std::string label);

// Witness of an exact_ex run, labelled "exact search value" or
// "search lower bound" when the budget cut the search short.
Certificate make_search_certificate(const SearchResult& r);

struct Verification {
  bool ok = true;
  std::vector<std::string> failures;
};

// Recomputes every derived field and checks the edge count against the
// upper bound when (h,k) is in range.
Verification verify_certificate(const Certificate& c);

}  // namespace planar_turan
