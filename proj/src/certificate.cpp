#include "planar_turan/certificate.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>

#include "planar_turan/constructions.hpp"
#include "planar_turan/error.hpp"
#include "planar_turan/planarity.hpp"

namespace planar_turan {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::witness_family: return "witness family";
    case Provenance::search_result: return "search result";
    case Provenance::user_input: return "user input";
  }
  return "?";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "witness family") return Provenance::witness_family;
  if (s == "search result") return Provenance::search_result;
  if (s == "user input") return Provenance::user_input;
  throw UsageError("unknown provenance '" + s + "'");
}

namespace {

// UTC ISO-8601; SOURCE_DATE_EPOCH pins it for reproducible output.
std::string now_utc() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Certificate make_certificate(const Graph& g, PatternSpec p, Provenance provenance,
                             std::string label) {
  Certificate c;
  c.graph = g;
  c.n = g.order();
  c.m = g.size();
  c.pattern = p;
  c.planar = is_planar(g);
  c.pattern_free = is_free(g, p);
  c.provenance = provenance;
  c.label = std::move(label);
  c.timestamp = now_utc();
  return c;
}

Certificate make_search_certificate(const SearchResult& r) {
  Certificate c = make_certificate(r.witness, r.pattern, Provenance::search_result,
                                   r.exact ? "exact search value" : "search lower bound");
  SearchSummary s;
  s.value = r.value;
  s.exact = r.exact;
  s.engine = to_string(r.engine);
  s.nodes_explored = r.nodes_explored;
  s.wall_time_seconds = r.wall_time.count();
  s.threads = r.threads;
  c.search = s;
  return c;
}

Verification verify_certificate(const Certificate& c) {
  Verification v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.failures.push_back(std::move(msg));
  };
  if (c.schema_version != kCertificateSchemaVersion) fail("unsupported schema version");
  if (c.graph.order() != c.n) fail("recorded n does not match graph");
  if (c.graph.size() != c.m) fail("recorded m does not match graph");
  if (is_planar(c.graph) != c.planar) fail("planarity verdict does not re-verify");
  if (is_free(c.graph, c.pattern) != c.pattern_free) fail("pattern-freeness verdict does not re-verify");
  if (is_supported_pattern(c.pattern) && c.planar && c.pattern_free) {
    const BoundSpec b = bounds_for(c.pattern.h, c.pattern.k, c.n);
    if (static_cast<std::int64_t>(c.m) > b.floor_upper()) fail("edge count exceeds the upper bound");
  }
  if (c.search && c.search->value != c.m) fail("search value does not match witness edge count");
  return v;
}

}  // namespace planar_turan
