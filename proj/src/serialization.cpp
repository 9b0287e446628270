#include "planar_turan/serialization.hpp"

#include "planar_turan/error.hpp"
#include "planar_turan/graph6.hpp"

namespace planar_turan {

namespace {

json pattern_json(PatternSpec p) { return {{"h", p.h}, {"k", p.k}}; }

template <typename T>
T field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("certificate field '") + key + "' missing", 0);
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("certificate field '") + key + "' has the wrong type", 0);
  }
}

json example_json(const std::optional<LemmaExample>& e) {
  if (!e) return nullptr;
  return {{"graph6", graph6_encode(e->graph)}, {"anchor", e->anchor}, {"detail", e->detail}};
}

}  // namespace

json rational_to_json(Rational r) { return {{"num", r.num()}, {"den", r.den()}}; }

json bounds_to_json(const BoundSpec& b) {
  json j = {{"row", to_string(b.row)},
            {"n", b.n},
            {"upper", rational_to_json(b.upper)},
            {"upper_floor", b.floor_upper()},
            {"equality", b.equality},
            {"equality_modulus", b.equality_modulus}};
  if (b.lower) {
    j["lower"] = rational_to_json(*b.lower);
  } else {
    j["lower"] = nullptr;
  }
  return j;
}

json certificate_to_json(const Certificate& c) {
  json j = {{"schema_version", c.schema_version},
            {"tool_version", c.tool_version},
            {"timestamp", c.timestamp},
            {"graph6", graph6_encode(c.graph)},
            {"n", c.n},
            {"m", c.m},
            {"pattern", pattern_json(c.pattern)},
            {"planar", c.planar},
            {"pattern_free", c.pattern_free},
            {"provenance", to_string(c.provenance)},
            {"label", c.label}};
  if (is_supported_pattern(c.pattern)) {
    j["bounds"] = bounds_to_json(bounds_for(c.pattern.h, c.pattern.k, c.n));
  }
  if (c.search) {
    const SearchSummary& s = *c.search;
    j["search"] = {{"value", s.value},
                   {"exact", s.exact},
                   {"engine", s.engine},
                   {"nodes_explored", s.nodes_explored},
                   {"wall_time_seconds", s.wall_time_seconds},
                   {"threads", s.threads}};
  }
  return j;
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("certificate must be a JSON object", 0);
  Certificate c;
  c.schema_version = field<int>(j, "schema_version");
  c.tool_version = field<std::string>(j, "tool_version");
  c.timestamp = field<std::string>(j, "timestamp");
  c.graph = graph6_decode(field<std::string>(j, "graph6"));
  c.n = field<std::size_t>(j, "n");
  c.m = field<std::size_t>(j, "m");
  const json pattern = field<json>(j, "pattern");
  c.pattern = {field<std::size_t>(pattern, "h"), field<std::size_t>(pattern, "k")};
  c.planar = field<bool>(j, "planar");
  c.pattern_free = field<bool>(j, "pattern_free");
  try {
    c.provenance = parse_provenance(field<std::string>(j, "provenance"));
  } catch (const UsageError& e) {
    throw ParseError(e.what(), 0);
  }
  c.label = field<std::string>(j, "label");
  if (j.contains("search")) {
    const json s = field<json>(j, "search");
    SearchSummary summary;
    summary.value = field<std::size_t>(s, "value");
    summary.exact = field<bool>(s, "exact");
    summary.engine = field<std::string>(s, "engine");
    summary.nodes_explored = field<std::uint64_t>(s, "nodes_explored");
    summary.wall_time_seconds = field<double>(s, "wall_time_seconds");
    summary.threads = field<std::size_t>(s, "threads");
    c.search = summary;
  }
  return c;
}

Certificate certificate_from_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  return certificate_from_json(j);
}

Verification verify_certificate_json(const json& j) {
  Verification v;
  Certificate c;
  try {
    c = certificate_from_json(j);
  } catch (const ParseError& e) {
    v.ok = false;
    v.failures.emplace_back(e.what());
    return v;
  }
  v = verify_certificate(c);
  if (j.contains("bounds")) {
    if (!is_supported_pattern(c.pattern) ||
        j["bounds"] != bounds_to_json(bounds_for(c.pattern.h, c.pattern.k, c.n))) {
      v.ok = false;
      v.failures.emplace_back("stored bounds block does not match a fresh evaluation");
    }
  }
  return v;
}

json lemma_suite_to_json(const LemmaSuiteResult& r, const LemmaSuiteOptions& options) {
  json reports = json::array();
  for (const LemmaReport& rep : r.reports) {
    reports.push_back({{"lemma", rep.lemma},
                       {"applicable", rep.applicable},
                       {"instances", rep.instances},
                       {"anchors", rep.anchors},
                       {"hits", rep.hits},
                       {"hit_instances", rep.hit_instances},
                       {"violations", rep.violations},
                       {"healthy", rep.healthy()},
                       {"examples",
                        {{"held", example_json(rep.held_example)},
                         {"violated", example_json(rep.violated_example)},
                         {"skipped", example_json(rep.skipped_example)}}}});
  }
  return {{"schema_version", kCertificateSchemaVersion},
          {"tool_version", kToolVersion},
          {"pattern", pattern_json(options.pattern)},
          {"samples", options.samples},
          {"seed", options.seed},
          {"generated", r.generated},
          {"generation_failures", r.generation_failures},
          {"passed", r.passed()},
          {"reports", reports}};
}

}  // namespace planar_turan
