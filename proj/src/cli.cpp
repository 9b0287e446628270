#include "planar_turan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "planar_turan/constructions.hpp"
#include "planar_turan/error.hpp"
#include "planar_turan/extremal_search.hpp"
#include "planar_turan/graph6.hpp"
#include "planar_turan/lemma_props.hpp"
#include "planar_turan/planarity.hpp"
#include "planar_turan/serialization.hpp"

namespace planar_turan {

namespace {

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, int code) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

std::size_t default_threads() {
  const char* env = std::getenv("PLANAR_TURAN_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError("PLANAR_TURAN_THREADS must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path, kExitNoInput);
  return {std::istreambuf_iterator<char>(f), {}};
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write " + path, kExitCantCreate);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pattern_name(PatternSpec p) {
  return "W_{" + std::to_string(p.h) + "," + std::to_string(p.k) + "}";
}

PatternSpec parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  std::size_t h = 0;
  std::size_t k = 0;
  std::size_t used = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    h = std::stoul(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    k = std::stoul(text.substr(comma + 1), &used);
    if (used != text.size() - comma - 1) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw UsageError("--free expects H,K");
  }
  return {h, k};
}

struct PatternArgs {
  std::size_t h = 0;
  std::size_t k = 0;
  PatternSpec spec() const { return {h, k}; }
};

void add_pattern(CLI::App* cmd, PatternArgs& p) {
  cmd->add_option("--h", p.h, "leaves on the first end of the path")->required();
  cmd->add_option("--k", p.k, "leaves on the last end of the path")->required();
}

struct Context {
  std::istream& in;
  std::ostream& out;
};

int cmd_witness(const Context& ctx, const PatternArgs& pa, std::size_t n,
                const std::string& out_path) {
  const Witness w = best_witness(pa.h, pa.k, n);
  const std::string text = certificate_to_json(w.certificate).dump(2) + "\n";
  if (out_path.empty()) {
    ctx.out << text;
  } else {
    write_output(out_path, text);
    ctx.out << "n=" << w.graph.order() << " m=" << w.graph.size() << " strategy=" << w.strategy
            << " label=" << w.certificate.label << " graph6=" << graph6_encode(w.graph) << "\n";
  }
  return kExitOk;
}

json graph_report(const Graph& g, PatternSpec p) {
  const bool planar = is_planar(g);
  const bool free = is_free(g, p);
  const BoundSpec b = bounds_for(p.h, p.k, g.order());
  return {{"graph6", graph6_encode(g)},
          {"n", g.order()},
          {"m", g.size()},
          {"planar", planar},
          {"pattern_free", free},
          {"upper_floor", b.floor_upper()},
          {"within_bound", static_cast<std::int64_t>(g.size()) <= b.floor_upper()}};
}

int cmd_check(const Context& ctx, const PatternArgs& pa, const std::string& path, bool as_json) {
  const PatternSpec p = pa.spec();
  require_supported_pattern(p);
  const std::string text = read_input(path, ctx.in);
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<Graph> graphs;
  json cert_part = nullptr;
  bool cert_ok = true;
  if (first != std::string::npos && text[first] == '{') {
    const Certificate c = certificate_from_text(text);
    json j = json::parse(text);
    const Verification v = verify_certificate_json(j);
    cert_ok = v.ok;
    cert_part = {{"ok", v.ok}, {"failures", v.failures}};
    graphs.push_back(c.graph);
  } else {
    graphs = graph6_decode_lines(text);
  }
  json reports = json::array();
  bool all_free = true;
  for (const Graph& g : graphs) {
    reports.push_back(graph_report(g, p));
    all_free = all_free && reports.back()["pattern_free"].get<bool>();
  }
  if (as_json) {
    json j = {{"pattern", {{"h", p.h}, {"k", p.k}}}, {"graphs", reports}};
    if (!cert_part.is_null()) j["certificate"] = cert_part;
    ctx.out << j.dump(2) << "\n";
  } else {
    if (!cert_part.is_null()) {
      ctx.out << "certificate: " << (cert_ok ? "ok" : "FAILED") << "\n";
      for (const auto& f : cert_part["failures"]) ctx.out << "  " << f.get<std::string>() << "\n";
    }
    std::size_t i = 0;
    for (const auto& r : reports) {
      ctx.out << "graph " << ++i << ": n=" << r["n"] << " m=" << r["m"]
              << " planar=" << yes_no(r["planar"]) << " " << pattern_name(p)
              << "-free=" << yes_no(r["pattern_free"]) << " upper_floor=" << r["upper_floor"]
              << " within_bound=" << yes_no(r["within_bound"]) << "\n";
    }
  }
  if (!cert_ok) return kExitFailure;
  return all_free ? kExitOk : kExitContainsPattern;
}

int cmd_ex_exact(const Context& ctx, const PatternArgs& pa, std::size_t n, std::size_t threads,
                 const std::string& engine) {
  const PatternSpec p = pa.spec();
  require_supported_pattern(p);
  SearchOptions opt;
  opt.engine = parse_engine(engine);
  opt.threads = threads;
  const SearchResult r = exact_ex(n, p, opt);
  json j = certificate_to_json(make_search_certificate(r));
  j["search"]["pruning"] = {{"filtered", r.pruning.filtered},
                            {"nonplanar", r.pruning.nonplanar},
                            {"contains_pattern", r.pruning.contains_pattern},
                            {"noncanonical", r.pruning.noncanonical},
                            {"duplicate", r.pruning.duplicate},
                            {"edge_count", r.pruning.edge_count}};
  j["search"]["within_bound"] = r.within_bound();
  ctx.out << j.dump(2) << "\n";
  return kExitOk;
}

std::string rational_text(Rational r) {
  return r.to_string() + " (floor " + std::to_string(r.floor()) + ")";
}

int cmd_bounds(const Context& ctx, const PatternArgs& pa, std::size_t n, bool as_json) {
  const BoundSpec b = bounds_for(pa.h, pa.k, n);
  if (as_json) {
    json j = bounds_to_json(b);
    j["pattern"] = {{"h", b.h}, {"k", b.k}};
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }
  ctx.out << pattern_name(pa.spec()) << " n=" << n << " row " << to_string(b.row) << "\n";
  ctx.out << "upper " << rational_text(b.upper) << "\n";
  ctx.out << "lower " << (b.lower ? rational_text(*b.lower) : "none for this n") << "\n";
  ctx.out << "equality " << yes_no(b.equality);
  if (b.equality_modulus != 0) ctx.out << " (when " << b.equality_modulus << " divides n)";
  ctx.out << "\n";
  return kExitOk;
}

int cmd_verify_lemmas(const Context& ctx, const PatternArgs& pa, std::size_t samples,
                      std::uint64_t seed, const std::string& lemma, std::size_t threads,
                      bool as_json) {
  LemmaSuiteOptions opt;
  opt.pattern = pa.spec();
  opt.samples = samples;
  opt.seed = seed;
  opt.threads = threads;
  if (!lemma.empty()) opt.lemma = lemma;
  const LemmaSuiteResult r = run_lemma_suite(opt);
  if (as_json) {
    ctx.out << lemma_suite_to_json(r, opt).dump(2) << "\n";
  } else {
    ctx.out << pattern_name(opt.pattern) << " samples=" << samples << " seed=" << seed
            << " generated=" << r.generated << "\n";
    for (const LemmaReport& rep : r.reports) {
      ctx.out << rep.lemma << ": ";
      if (!rep.applicable) {
        ctx.out << "not applicable\n";
        continue;
      }
      ctx.out << "instances=" << rep.instances << " hits=" << rep.hits
              << " hit_instances=" << rep.hit_instances << " violations=" << rep.violations
              << (rep.passed() ? " ok" : rep.violations ? " VIOLATED" : " NO HITS") << "\n";
      if (rep.violated_example) {
        ctx.out << "  example " << graph6_encode(rep.violated_example->graph) << " "
                << rep.violated_example->anchor << ": " << rep.violated_example->detail << "\n";
      }
    }
  }
  return r.passed() ? kExitOk : kExitFailure;
}

int cmd_gen(const Context& ctx, std::size_t n, bool planar, const std::string& free) {
  std::vector<GraphFilter> parts;
  if (planar) parts.push_back(planar_filter());
  if (!free.empty()) {
    const PatternSpec p = parse_pair(free);
    require_supported_pattern(p);
    parts.push_back([p](const Graph& g) { return is_free(g, p); });
  }
  const GraphFilter filter = [parts](const Graph& g) {
    return std::all_of(parts.begin(), parts.end(), [&](const GraphFilter& f) { return f(g); });
  };
  enumerate_graphs(n, filter, [&](const Graph& g) { ctx.out << graph6_encode(g) << "\n"; });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Planar Turán numbers of quasi-double stars", "planar-turan"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  PatternArgs pa;
  std::size_t n = 0;
  std::string path;
  std::string engine = "augment";
  std::string lemma;
  std::string free;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  bool as_json = false;
  bool planar = false;

  auto* witness = app.add_subcommand("witness", "densest certified W-free planar witness");
  add_pattern(witness, pa);
  witness->add_option("--n", n, "vertex count")->required();
  witness->add_option("--out", path, "write the certificate here instead of stdout");

  auto* check = app.add_subcommand("check", "test graph6 lines or a certificate");
  add_pattern(check, pa);
  check->add_option("--in", path, "input file, - for stdin")->required();
  check->add_flag("--json", as_json, "JSON output");

  auto* exact = app.add_subcommand("ex-exact", "exact planar Turán number for small n");
  add_pattern(exact, pa);
  exact->add_option("--n", n, "vertex count")->required();
  exact->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  exact->add_option("--engine", engine, "augment or descend");

  auto* bounds = app.add_subcommand("bounds", "extremal bounds as exact rationals");
  add_pattern(bounds, pa);
  bounds->add_option("--n", n, "vertex count")->required();
  bounds->add_flag("--json", as_json, "JSON output");

  auto* lemmas = app.add_subcommand("verify-lemmas", "randomized structural property suite");
  add_pattern(lemmas, pa);
  lemmas->add_option("--samples", samples, "generated instances");
  lemmas->add_option("--seed", seed, "base seed");
  lemmas->add_option("--lemma", lemma, "single lemma id");
  lemmas->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  lemmas->add_flag("--json", as_json, "JSON output");

  auto* gen = app.add_subcommand("gen", "one graph6 line per isomorphism class");
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_flag("--planar", planar, "planar graphs only");
  gen->add_option("--free", free, "H,K: W_{H,K}-free graphs only");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const Context ctx{in, out};
  try {
    if (threads == 0) threads = default_threads();
    if (witness->parsed()) return cmd_witness(ctx, pa, n, path);
    if (check->parsed()) return cmd_check(ctx, pa, path, as_json);
    if (exact->parsed()) return cmd_ex_exact(ctx, pa, n, threads, engine);
    if (bounds->parsed()) return cmd_bounds(ctx, pa, n, as_json);
    if (lemmas->parsed()) {
      return cmd_verify_lemmas(ctx, pa, samples, seed, lemma, threads, as_json);
    }
    if (gen->parsed()) return cmd_gen(ctx, n, planar, free);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedRange& e) {
    err << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  }
  return kExitUsage;
}

}  // namespace planar_turan
