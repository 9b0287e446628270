#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "planar_turan/certificate.hpp"
#include "planar_turan/cli.hpp"
#include "planar_turan/constructions.hpp"
#include "planar_turan/extremal_search.hpp"
#include "planar_turan/graph6.hpp"
#include "planar_turan/lemma_props.hpp"
#include "planar_turan/patterns.hpp"
#include "planar_turan/planarity.hpp"
#include "planar_turan/serialization.hpp"

using namespace planar_turan;

namespace {

// Pinned thresholds.
constexpr double kWitnessSeconds = 1.0;
constexpr double kExactSeconds = 600.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kLemmaSeconds = 600.0;
constexpr std::size_t kLemmaSamples = 10000;
constexpr std::size_t kLemmaMinHits = 100;
constexpr std::size_t kW25MinHits = 1000;
constexpr std::size_t kRoundTrips = 10000;
constexpr std::size_t kRoundTripMaxOrder = 16;

const std::vector<PatternSpec> kPatterns{{1, 2}, {1, 3}, {2, 2}, {1, 4},
                                         {2, 3}, {1, 5}, {2, 4}, {2, 5}};

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string pname(PatternSpec p) {
  return "W" + std::to_string(p.h) + "," + std::to_string(p.k);
}

json run_json(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  if (code != kExitOk) throw std::runtime_error("cli exit " + std::to_string(code) + ": " + err.str());
  return json::parse(out.str());
}

Outcome criterion1() {
  Outcome o;
  const std::vector<PatternSpec> ps{{1, 2}, {1, 3}, {2, 2}, {1, 4}, {2, 3}};
  std::ostringstream note;
  for (PatternSpec p : ps) {
    const std::size_t s = p.h + p.k;
    const std::size_t n = 3 * (s + 2);
    const auto t = Clock::now();
    const json j = run_json({"witness", "--h", std::to_string(p.h), "--k", std::to_string(p.k),
                             "--n", std::to_string(n)});
    const Graph g = graph6_decode(j["graph6"].get<std::string>());
    const double dt = seconds_since(t);
    const std::size_t want = 3 * s * n / (s + 2);
    note << pname(p) << " n=" << n << " m=" << g.size() << "/" << want << "; ";
    if (g.order() != n || g.size() != want) o.fail(pname(p) + " wrong edge count");
    if (!is_planar(g) || !is_free(g, p)) o.fail(pname(p) + " witness invalid");
    if (dt >= kWitnessSeconds) o.fail(pname(p) + " too slow");
  }
  if (o.pass) o.note = note.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t = Clock::now();
  const json j = run_json({"witness", "--h", "1", "--k", "5", "--n", "24"});
  const Graph g = graph6_decode(j["graph6"].get<std::string>());
  const double dt = seconds_since(t);
  if (g.order() != 24 || g.size() != 60) o.fail("edge count " + std::to_string(g.size()));
  if (g.min_degree() != 5 || g.max_degree() != 5) o.fail("not 5-regular");
  if (!is_planar(g)) o.fail("not planar");
  if (!is_free(g, {1, 5}) || !is_free(g, {2, 5})) o.fail("contains W1,5 or W2,5");
  const BoundSpec w25 = bounds_for(2, 5, 24);
  if (!w25.lower || Rational(60) != *w25.lower) o.fail("W2,5 lower bound is not 60");
  if (dt >= kWitnessSeconds) o.fail("too slow");
  if (o.pass) o.note = "24 vertices, 60 edges, 5-regular, planar, W1,5- and W2,5-free";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t = Clock::now();
  SearchOptions opt;
  opt.threads = 4;
  if (exact_ex(5, {1, 2}, opt).value != 9) o.fail("exact_ex(5,1,2) != 9");
  if (exact_ex(7, {1, 4}, opt).value != 15) o.fail("exact_ex(7,1,4) != 15");
  std::ostringstream n8;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (PatternSpec p : kPatterns) {
      const SearchResult r = exact_ex(n, p, opt);
      const std::int64_t cap = bounds_for(p.h, p.k, n).floor_upper();
      if (!r.exact || static_cast<std::int64_t>(r.value) > cap) {
        o.fail(pname(p) + " n=" + std::to_string(n) + " value " + std::to_string(r.value) +
               " above " + std::to_string(cap));
      }
      if (n == 8) n8 << pname(p) << ":" << r.value << "<=" << cap << " ";
    }
  }
  const double dt = seconds_since(t);
  if (dt >= kExactSeconds) o.fail("too slow");
  if (o.pass) o.note = "n=8 " + n8.str();
  return o;
}

// Number of permutations fixing g.
std::uint64_t automorphisms(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t count = 0;
  do {
    if (g.relabeled(perm) == g) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Outcome criterion4() {
  Outcome o;
  const auto t = Clock::now();
  std::size_t checks = 0;
  std::size_t classes = 0;
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto list = enumerate_graph_list(n);
    classes += list.size();
    // Orbit counting: every labelled graph lies in exactly one class.
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    std::uint64_t labelled = 0;
    for (const Graph& g : list) labelled += fact / automorphisms(g);
    const std::uint64_t expected = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
    if (labelled != expected) o.fail("class list incomplete at n=" + std::to_string(n));
    if (n == 7 && list.size() != 1044) o.fail(std::to_string(list.size()) + " classes on 7");
    for (const Graph& g : list) {
      for (PatternSpec p : kPatterns) {
        ++checks;
        if (contains_w(g, p) != contains_subgraph_oracle(g, quasi_double_star_graph(p))) {
          o.fail("mismatch on " + graph6_encode(g) + " for " + pname(p));
        }
      }
    }
  }
  if (seconds_since(t) >= kOracleSeconds) o.fail("too slow");
  if (o.pass) {
    o.note = std::to_string(classes) + " classes (1044 on 7, orbit count 2^21), " +
             std::to_string(checks) + " detector/oracle comparisons";
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t = Clock::now();
  struct Tally {
    std::size_t instances = 0;
    std::size_t hit_instances = 0;
    std::size_t violations = 0;
  };
  std::map<std::string, Tally> total;
  for (PatternSpec p : kPatterns) {
    LemmaSuiteOptions opt;
    opt.pattern = p;
    opt.samples = kLemmaSamples;
    opt.seed = 2026;
    opt.threads = 4;
    const LemmaSuiteResult r = run_lemma_suite(opt);
    for (const LemmaReport& rep : r.reports) {
      if (!rep.applicable) continue;
      Tally& tl = total[rep.lemma];
      tl.instances += rep.instances;
      tl.hit_instances += rep.hit_instances;
      tl.violations += rep.violations;
    }
  }
  std::ostringstream note;
  const std::vector<std::string> structural{"component",      "second-neighborhood", "star",
                                            "common-neighbor", "edge-component",      "path-component"};
  for (const auto& [id, tl] : total) {
    if (tl.violations != 0) o.fail(id + ": " + std::to_string(tl.violations) + " violations");
  }
  for (const auto& id : structural) {
    const Tally tl = total[id];
    note << id << " " << tl.hit_instances << "/" << tl.instances << "; ";
    if (tl.instances < kLemmaSamples) o.fail(id + ": too few instances");
    if (tl.hit_instances < kLemmaMinHits) o.fail(id + ": " + std::to_string(tl.hit_instances) + " hits");
  }
  const Tally w = total["w25"];
  note << "w25 " << w.hit_instances << "/" << w.instances;
  if (w.instances < kLemmaSamples || w.hit_instances < kW25MinHits) {
    o.fail("w25: " + std::to_string(w.hit_instances) + " instances with a 6-6 edge");
  }
  if (seconds_since(t) >= kLemmaSeconds) o.fail("too slow");
  if (o.pass) o.note = note.str();
  return o;
}

Outcome criterion6() {
  Outcome o;
  SearchOptions descend;
  descend.engine = SearchEngine::descend;
  std::size_t cases = 0;
  for (std::size_t n = 0; n <= 7; ++n) {
    for (PatternSpec p : kPatterns) {
      ++cases;
      const std::size_t a = exact_ex(n, p).value;
      const std::size_t d = exact_ex(n, p, descend).value;
      if (a != d) o.fail(pname(p) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.note = std::to_string(cases) + " (n, h, k) cases agree";
  return o;
}

Outcome criterion7() {
  Outcome o;
  if (is_planar(families::complete(5))) o.fail("K5 accepted");
  if (is_planar(families::complete_bipartite(3, 3))) o.fail("K3,3 accepted");
  if (!is_planar(icosahedron())) o.fail("icosahedron rejected");
  for (std::size_t m = 3; m <= 12; ++m) {
    const Graph g = maximal_planar(m);
    if (!is_planar(g) || g.size() != 3 * m - 6) o.fail("maximal_planar(" + std::to_string(m) + ")");
  }
  std::size_t graphs = 0;
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const Graph& g : enumerate_graph_list(n)) {
      ++graphs;
      if (is_planar(g) == oracles::has_kuratowski_subdivision(g)) {
        o.fail("disagreement on " + graph6_encode(g));
      }
    }
  }
  if (o.pass) o.note = std::to_string(graphs) + " classes agree with the subdivision search";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (std::size_t t = 0; t < kRoundTrips; ++t) {
    const std::size_t n = rng() % (kRoundTripMaxOrder + 1);
    const Graph g = oracles::random_graph(n, static_cast<double>(rng() % 101) / 100.0, rng);
    if (graph6_decode(graph6_encode(g)) != g) {
      o.fail("round trip failed on " + graph6_encode(g));
      break;
    }
  }
  std::size_t certs = 0;
  auto reload = [&](const Certificate& c) {
    ++certs;
    const std::string text = certificate_to_json(c).dump(2);
    const Certificate back = certificate_from_text(text);
    if (!verify_certificate(back).ok || !verify_certificate_json(json::parse(text)).ok ||
        back.graph != c.graph) {
      o.fail("certificate for " + pname(c.pattern) + " n=" + std::to_string(c.n));
    }
  };
  for (PatternSpec p : kPatterns) {
    for (std::size_t n : {5u, 12u, 13u, 24u, 35u}) reload(best_witness(p.h, p.k, n).certificate);
    reload(make_search_certificate(exact_ex(7, p)));
  }
  if (o.pass) {
    o.note = std::to_string(kRoundTrips) + " graph6 round trips, " + std::to_string(certs) +
             " certificates reverified";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  int failures = 0;
  for (const auto& [id, fn] : criteria) {
    const auto t = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", id, seconds_since(t),
                o.note.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
