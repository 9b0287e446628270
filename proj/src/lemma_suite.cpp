#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "planar_turan/constructions.hpp"
#include "planar_turan/error.hpp"
#include "planar_turan/lemma_props.hpp"

namespace planar_turan {

namespace {

constexpr std::size_t kAttemptsPerSample = 8;

const Rational kTaus[] = {Rational(9, 5), Rational(2), Rational(15, 7), Rational(5, 2),
                          Rational(17, 6)};

const Rational kSigmas[] = {Rational(9, 5), Rational(2),  Rational(15, 7), Rational(5, 2),
                            Rational(17, 6), Rational(3), Rational(4),     Rational(6)};

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool applicable(const std::string& id, PatternSpec p) {
  const std::size_t s = p.h + p.k;
  // With h = 2 and h+k >= 6 no planar W-free graph meets the star precondition.
  if (id == "star") return s == 5 || (s >= 6 && p.h == 1);
  if (id == "path-component") return s >= 4;
  if (id == "w25") return p == PatternSpec{2, 5};
  if (id == "degree-census") return s == 5 || s == 6;
  return true;
}

struct Tally {
  LemmaReport report;
  std::size_t example_sample[3] = {SIZE_MAX, SIZE_MAX, SIZE_MAX};
};

class Recorder {
 public:
  Recorder(Tally& t, const Graph& g, std::size_t sample) : t_(t), g_(g), sample_(sample) {}
  ~Recorder() {
    ++t_.report.instances;
    if (hit_) ++t_.report.hit_instances;
  }

  void record(const CheckResult& r, const std::string& anchor) {
    LemmaReport& rep = t_.report;
    ++rep.anchors;
    if (r.hit()) {
      ++rep.hits;
      hit_ = true;
    }
    if (r.verdict == Verdict::violated) ++rep.violations;
    auto& slot = r.verdict == Verdict::held       ? rep.held_example
                 : r.verdict == Verdict::violated ? rep.violated_example
                                                  : rep.skipped_example;
    std::size_t& from = t_.example_sample[static_cast<int>(r.verdict)];
    if (!slot) {
      slot = LemmaExample{g_, anchor, r.detail};
      from = sample_;
    }
  }

 private:
  Tally& t_;
  const Graph& g_;
  std::size_t sample_;
  bool hit_ = false;
};

std::string anchor(std::initializer_list<std::pair<const char*, Vertex>> named) {
  std::string s;
  for (auto [name, v] : named) {
    if (!s.empty()) s += ",";
    s += name;
    s += "=" + std::to_string(v);
  }
  return s;
}

void run_checks(const std::string& id, const Graph& g, const GraphFacts& f, Recorder& rec) {
  const auto n = static_cast<Vertex>(g.order());
  const auto edges = g.edges();
  if (id == "component") {
    for (Vertex x = 0; x < n; ++x) rec.record(check_component_lemma(f, x), anchor({{"x", x}}));
  } else if (id == "second-neighborhood") {
    for (Vertex x = 0; x < n; ++x) {
      rec.record(check_second_neighborhood_lemma(f, x), anchor({{"x", x}}));
    }
  } else if (id == "star") {
    for (Vertex x = 0; x < n; ++x) rec.record(check_star_lemma(f, x), anchor({{"x", x}}));
  } else if (id == "common-neighbor") {
    for (auto [u, v] : edges) {
      rec.record(check_common_neighbor_lemma(f, u, v), anchor({{"x", u}, {"y", v}}));
      rec.record(check_common_neighbor_lemma(f, v, u), anchor({{"x", v}, {"y", u}}));
    }
  } else if (id == "edge-component") {
    for (auto [u, v] : edges) rec.record(check_claim_66_edge(f, u, v), anchor({{"x", u}, {"y", v}}));
  } else if (id == "path-component") {
    for (Vertex y = 0; y < n; ++y) {
      const auto nb = neighbors(g, y).to_vector();
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (g.has_edge(nb[i], nb[j])) continue;
          rec.record(check_claim_path(f, nb[i], y, nb[j]),
                     anchor({{"x", nb[i]}, {"y", y}, {"z", nb[j]}}));
        }
      }
    }
  } else if (id == "w25") {
    for (auto [u, v] : edges) {
      for (auto [a, b] : {Edge{u, v}, Edge{v, u}}) {
        const W25Verdicts w = check_w25_claims(f, a, b);
        CheckResult combined{w.overall(), w.private_neighbors.detail};
        if (w.outer.verdict == Verdict::violated) combined.detail = w.outer.detail;
        rec.record(combined, anchor({{"x", a}, {"y", b}}));
      }
    }
  } else if (id == "degree-census") {
    rec.record(check_degree_census(f), "graph");
  } else if (id == "euler") {
    rec.record(check_euler_lemma(g), "graph");
  } else if (id == "absorption") {
    const auto total = static_cast<std::int64_t>(g.size());
    for (const VertexSet& c : components(g)) {
      const auto inside = static_cast<std::int64_t>(edges_within(g, c));
      for (Rational tau : kTaus) {
        rec.record(check_absorption_bound(n, static_cast<std::int64_t>(c.size()), total - inside,
                                          inside, tau),
                   "component of " + std::to_string(c.to_vector().front()) + ", τ=" +
                       tau.to_string());
      }
    }
  } else if (id == "neighborhood-bound") {
    const auto total = static_cast<std::int64_t>(g.size());
    for (Vertex x = 0; x < n; ++x) {
      const VertexSet closed = closed_neighborhood(g, x);
      const auto inside = static_cast<std::int64_t>(edges_within(g, closed));
      const auto touching = inside + static_cast<std::int64_t>(
                                         edges_between(g, closed, closed.complement()));
      rec.record(check_neighborhood_bound(f.pattern, n, static_cast<std::int64_t>(g.degree(x)),
                                          total - touching, inside),
                 anchor({{"x", x}}));
    }
  } else if (id == "single-vertex") {
    const auto total = static_cast<std::int64_t>(g.size());
    for (Vertex x = 0; x < n; ++x) {
      const auto d = static_cast<std::int64_t>(g.degree(x));
      for (Rational sigma : kSigmas) {
        rec.record(check_single_vertex_bound(n, d, total - d, sigma),
                   anchor({{"x", x}}) + ", σ=" + sigma.to_string());
      }
    }
  }
}

struct InstanceParams {
  std::size_t n;
  std::size_t min_degree;
  std::size_t max_degree;
};

InstanceParams draw_params(PatternSpec p, std::mt19937_64& rng) {
  const std::size_t s = p.h + p.k;
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  InstanceParams ip{};
  ip.n = pick(s + 2, 3 * (s + 2));
  ip.min_degree = pick(0, 1) == 0 ? p.h + 1 : std::max<std::size_t>(p.h + 1, 3);
  const std::size_t caps[] = {s - 1, s, s + 1, s + 2, ip.n - 1};
  ip.max_degree = caps[pick(0, 4)];
  if (s == 5 && pick(0, 3) == 0) {
    ip.min_degree = 4;
    ip.max_degree = 5;
  }
  if (p == PatternSpec{2, 5} && pick(0, 1) == 0) {
    ip.min_degree = 3;
    ip.max_degree = 6;
  }
  ip.max_degree = std::clamp(ip.max_degree, ip.min_degree, ip.n - 1);
  return ip;
}

// Hub of degree 6 over an independent rim whose vertices reach degree 5
// through two degree-2 vertices on each side. Random generation essentially
// never produces a 6-5 star without W_{1,5}, so W_{1,5} suites mix this in.
Graph planted_star(std::mt19937_64& rng) {
  constexpr std::size_t rim = 6;
  GraphBuilder b(1 + rim + 2 * rim);
  auto next = static_cast<Vertex>(1 + rim);
  for (Vertex i = 0; i < rim; ++i) {
    const Vertex a = 1 + i;
    const auto c = static_cast<Vertex>(1 + (i + 1) % rim);
    b.add_edge(0, a);
    for (int t = 0; t < 2; ++t, ++next) b.add_edge(next, a).add_edge(next, c);
  }
  Graph g = b.build();
  std::vector<Vertex> label(g.order());
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  return g.relabeled(label);
}

Graph draw_instance(PatternSpec p, std::mt19937_64& rng) {
  const InstanceParams ip = draw_params(p, rng);
  if (p == PatternSpec{1, 5} && std::uniform_int_distribution<int>(0, 7)(rng) == 0) {
    const std::vector<Graph> parts{planted_star(rng),
                                   generate_instance(p, ip.n, ip.min_degree, ip.max_degree, rng())};
    return disjoint_union(parts);
  }
  return generate_instance(p, ip.n, ip.min_degree, ip.max_degree, rng());
}

struct Chunk {
  std::vector<Tally> tallies;
  std::size_t generated = 0;
  std::size_t failures = 0;
};

void run_chunk(const LemmaSuiteOptions& opt, const std::vector<std::string>& ids,
               std::size_t begin, std::size_t end, Chunk& out) {
  out.tallies.resize(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out.tallies[i].report.lemma = ids[i];
    out.tallies[i].report.applicable = applicable(ids[i], opt.pattern);
  }
  for (std::size_t sample = begin; sample < end; ++sample) {
    std::optional<Graph> g;
    for (std::size_t attempt = 0; attempt < kAttemptsPerSample && !g; ++attempt) {
      const std::uint64_t seed = mix(mix(opt.seed) ^ mix(sample * kAttemptsPerSample + attempt));
      std::mt19937_64 rng(seed);
      try {
        g = draw_instance(opt.pattern, rng);
      } catch (const GenerationFailed&) {
        ++out.failures;
      }
    }
    if (!g) continue;
    ++out.generated;
    const GraphFacts facts = GraphFacts::of(*g, opt.pattern);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!out.tallies[i].report.applicable) continue;
      Recorder rec(out.tallies[i], *g, sample);
      run_checks(ids[i], *g, facts, rec);
    }
  }
}

void merge(Tally& into, const Tally& from) {
  LemmaReport& a = into.report;
  const LemmaReport& b = from.report;
  a.instances += b.instances;
  a.anchors += b.anchors;
  a.hits += b.hits;
  a.hit_instances += b.hit_instances;
  a.violations += b.violations;
  std::optional<LemmaExample>* mine[] = {&a.skipped_example, &a.held_example, &a.violated_example};
  const std::optional<LemmaExample>* theirs[] = {&b.skipped_example, &b.held_example,
                                                 &b.violated_example};
  for (int v = 0; v < 3; ++v) {
    if (*theirs[v] && from.example_sample[v] < into.example_sample[v]) {
      *mine[v] = *theirs[v];
      into.example_sample[v] = from.example_sample[v];
    }
  }
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {
      "component",  "second-neighborhood", "star",           "common-neighbor",
      "edge-component", "path-component", "w25",          "degree-census",
      "euler",      "absorption",          "neighborhood-bound", "single-vertex"};
  return ids;
}

bool LemmaSuiteResult::passed() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const LemmaReport& r) { return r.passed(); });
}

LemmaSuiteResult run_lemma_suite(const LemmaSuiteOptions& opt) {
  require_supported_pattern(opt.pattern);
  std::vector<std::string> ids;
  if (opt.lemma) {
    const auto& all = lemma_ids();
    if (std::find(all.begin(), all.end(), *opt.lemma) == all.end()) {
      throw UsageError("unknown lemma id '" + *opt.lemma + "'");
    }
    ids.push_back(*opt.lemma);
  } else {
    ids = lemma_ids();
  }
  const std::size_t threads = std::clamp<std::size_t>(opt.threads, 1, std::max<std::size_t>(1, opt.samples));
  std::vector<Chunk> chunks(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = opt.samples * t / threads;
    const std::size_t end = opt.samples * (t + 1) / threads;
    if (threads == 1) {
      run_chunk(opt, ids, begin, end, chunks[t]);
    } else {
      pool.emplace_back(run_chunk, std::cref(opt), std::cref(ids), begin, end, std::ref(chunks[t]));
    }
  }
  for (auto& th : pool) th.join();

  LemmaSuiteResult result;
  std::vector<Tally> total = chunks.front().tallies;
  for (std::size_t t = 0; t < threads; ++t) {
    result.generated += chunks[t].generated;
    result.generation_failures += chunks[t].failures;
    if (t == 0) continue;
    for (std::size_t i = 0; i < ids.size(); ++i) merge(total[i], chunks[t].tallies[i]);
  }
  for (auto& t : total) result.reports.push_back(std::move(t.report));
  return result;
}

}  // namespace planar_turan
