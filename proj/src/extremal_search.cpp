#include "planar_turan/extremal_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <set>
#include <thread>

#include "planar_turan/constructions.hpp"
#include "planar_turan/error.hpp"
#include "planar_turan/planarity.hpp"

namespace planar_turan {

GraphFilter accept_all() {
  return [](const Graph&) { return true; };
}

GraphFilter planar_filter() {
  return [](const Graph& g) { return is_planar(g); };
}

GraphFilter planar_free_filter(PatternSpec p) {
  return [p](const Graph& g) { return is_planar(g) && is_free(g, p); };
}

std::string to_string(SearchEngine e) { return e == SearchEngine::augment ? "augment" : "descend"; }

SearchEngine parse_engine(const std::string& name) {
  if (name == "augment") return SearchEngine::augment;
  if (name == "descend") return SearchEngine::descend;
  throw UsageError("unknown engine '" + name + "' (expected augment or descend)");
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Rejection { none, filtered, nonplanar, pattern };

// Either a caller filter or the built-in planar ∧ W-free test, which keeps
// per-rule statistics.
struct Criteria {
  const GraphFilter* filter = nullptr;
  std::optional<PatternSpec> pattern;

  Rejection check(const Graph& g) const {
    if (filter != nullptr) return (*filter)(g) ? Rejection::none : Rejection::filtered;
    if (!is_planar(g)) return Rejection::nonplanar;
    if (pattern && contains_w(g, *pattern)) return Rejection::pattern;
    return Rejection::none;
  }
};

void count(PruningStats& s, Rejection r) {
  switch (r) {
    case Rejection::filtered: ++s.filtered; break;
    case Rejection::nonplanar: ++s.nonplanar; break;
    case Rejection::pattern: ++s.contains_pattern; break;
    case Rejection::none: break;
  }
}

void merge(PruningStats& into, const PruningStats& from) {
  into.filtered += from.filtered;
  into.nonplanar += from.nonplanar;
  into.contains_pattern += from.contains_pattern;
  into.noncanonical += from.noncanonical;
  into.duplicate += from.duplicate;
  into.edge_count += from.edge_count;
}

class Budget {
 public:
  explicit Budget(const SearchBudget& b) : max_nodes_(b.max_nodes) {
    if (b.max_time.count() > 0) {
      has_deadline_ = true;
      deadline_ = Clock::now() + b.max_time;
    }
  }

  bool tick() {
    const std::uint64_t c = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (max_nodes_ != 0 && c > max_nodes_) stop_.store(true, std::memory_order_relaxed);
    if (has_deadline_ && (c & 1023u) == 0 && Clock::now() > deadline_) {
      stop_.store(true, std::memory_order_relaxed);
    }
    return !stopped();
  }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  std::uint64_t max_nodes_;
  bool has_deadline_ = false;
  Clock::time_point deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

Graph extend(const Graph& parent, std::uint64_t nbrs) {
  const std::size_t p = parent.order();
  GraphBuilder b(p + 1);
  for (Vertex u = 0; u < p; ++u) {
    for (std::uint64_t w = parent.mask(u) & ~((std::uint64_t{2} << u) - 1); w != 0; w &= w - 1) {
      b.add_edge(u, static_cast<Vertex>(std::countr_zero(w)));
    }
  }
  for (std::uint64_t w = nbrs; w != 0; w &= w - 1) {
    b.add_edge(static_cast<Vertex>(p), static_cast<Vertex>(std::countr_zero(w)));
  }
  return b.build();
}

struct Node {
  Graph graph;
  CanonicalForm form;
};

// Children of one parent: a new vertex joined to each neighbour set S that
// passes the criteria. Only |S| <= δ(parent)+1 can make the new vertex a
// minimum-degree vertex, and a rejected S rejects all its supersets.
class Augmenter {
 public:
  Augmenter(const Criteria& criteria, Budget& budget) : criteria_(criteria), budget_(budget) {}

  template <class F>
  void for_each_candidate(const Graph& parent, F&& f) {
    const std::size_t p = parent.order();
    const std::size_t cap = p == 0 ? 0 : parent.min_degree() + 1;
    visit_subsets(parent, 0, 0, 0, cap, f);
  }

  // Accepted (canonical, deduplicated) children.
  std::vector<Node> children(const Node& parent) {
    std::vector<Node> out;
    std::set<CanonicalForm> seen;
    for_each_candidate(parent.graph, [&](Graph child, std::size_t subset_size) {
      const std::size_t delta = child.min_degree();
      if (subset_size != delta) {
        ++stats.noncanonical;
        return;
      }
      const auto newest = static_cast<Vertex>(child.order() - 1);
      CanonicalLabeling lab = canonical_labeling(child);
      Vertex last = newest;
      Vertex last_pos = 0;
      bool any = false;
      for (Vertex u = 0; u < child.order(); ++u) {
        if (child.degree(u) == delta && (!any || lab.position[u] > last_pos)) {
          last = u;
          last_pos = lab.position[u];
          any = true;
        }
      }
      if (last != newest && canonical_form(child.without_vertex(last)) != parent.form) {
        ++stats.noncanonical;
        return;
      }
      if (!seen.insert(lab.form).second) {
        ++stats.duplicate;
        return;
      }
      out.push_back({std::move(child), lab.form});
    });
    return out;
  }

  PruningStats stats;

 private:
  template <class F>
  void visit_subsets(const Graph& parent, std::uint64_t s, std::size_t size, std::size_t start,
                     std::size_t cap, F& f) {
    if (!budget_.tick()) return;
    Graph child = extend(parent, s);
    const Rejection r = criteria_.check(child);
    if (r != Rejection::none) {
      count(stats, r);
      return;
    }
    f(std::move(child), size);
    if (size == cap) return;
    for (std::size_t i = start; i < parent.order() && !budget_.stopped(); ++i) {
      visit_subsets(parent, s | (std::uint64_t{1} << i), size + 1, i + 1, cap, f);
    }
  }

  const Criteria& criteria_;
  Budget& budget_;
};

Node root_node() {
  Graph k1(1);
  return {k1, canonical_form(k1)};
}

void collect_level(Augmenter& aug, const Node& node, std::size_t level,
                   std::vector<Node>& out) {
  if (node.graph.order() == level) {
    out.push_back(node);
    return;
  }
  for (const Node& c : aug.children(node)) collect_level(aug, c, level, out);
}

struct Best {
  bool found = false;
  std::size_t value = 0;
  CanonicalForm form;

  void offer(std::size_t v, const CanonicalForm& f) {
    if (!found || v > value || (v == value && f < form)) {
      found = true;
      value = v;
      form = f;
    }
  }
  void offer(const Best& o) {
    if (o.found) offer(o.value, o.form);
  }
};

// Best over every graph on target vertices below this node. Final-level
// children need no canonical test: every class appears among them.
void best_below(Augmenter& aug, const Node& node, std::size_t target, Best& best) {
  if (node.graph.order() == target) {
    best.offer(node.graph.size(), node.form);
    return;
  }
  if (node.graph.order() + 1 == target) {
    aug.for_each_candidate(node.graph, [&](Graph child, std::size_t) {
      const std::size_t e = child.size();
      if (best.found && e < best.value) return;
      best.offer(e, canonical_form(child));
    });
    return;
  }
  for (const Node& c : aug.children(node)) best_below(aug, c, target, best);
}

std::size_t edge_ceiling(std::size_t n) { return n >= 3 ? 3 * n - 6 : n * (n - 1) / 2; }

SearchResult run_augment(std::size_t n, PatternSpec p, const SearchOptions& opt, Budget& budget) {
  SearchResult r;
  Criteria criteria;
  criteria.pattern = p;
  const std::size_t threads = std::max<std::size_t>(1, opt.threads);
  r.threads = threads;

  if (n == 0) {
    r.witness = Graph(0);
    return r;
  }
  Augmenter top(criteria, budget);
  const std::size_t split = std::min<std::size_t>(n - 1 == 0 ? 1 : n - 1, 6);
  std::vector<Node> tasks;
  collect_level(top, root_node(), std::max<std::size_t>(split, 1), tasks);
  PruningStats stats = top.stats;

  std::vector<Best> results(tasks.size());
  std::vector<PruningStats> task_stats(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || budget.stopped()) return;
      Augmenter aug(criteria, budget);
      best_below(aug, tasks[i], n, results[i]);
      task_stats[i] = aug.stats;
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Best best;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    best.offer(results[i]);
    merge(stats, task_stats[i]);
  }
  r.pruning = stats;
  r.value = best.value;
  r.witness = best.found ? best.form.to_graph() : Graph(n);
  return r;
}

// Descending feasibility: for target = 3n-6, 3n-7, ..., decide by edge
// inclusion/exclusion backtracking whether some planar W-free graph on n
// labelled vertices has exactly target edges.
class Descender {
 public:
  Descender(std::size_t n, PatternSpec p, Budget& budget) : n_(n), p_(p), budget_(budget) {
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    }
  }

  std::optional<Graph> feasible(std::size_t target) {
    adj_.fill(0);
    target_ = target;
    if (dfs(0, 0)) return to_graph();
    return std::nullopt;
  }

  PruningStats stats;

 private:
  Graph to_graph() const {
    GraphBuilder b(n_);
    for (auto [i, j] : pairs_) {
      if ((adj_[i] >> j) & 1u) b.add_edge(i, j);
    }
    return b.build();
  }

  bool admissible(std::size_t edges) {
    if (detail::contains_w_masks(adj_.data(), n_, p_)) {
      ++stats.contains_pattern;
      return false;
    }
    // Every graph with at most 8 edges is planar.
    if (edges >= 9 && !is_planar(to_graph())) {
      ++stats.nonplanar;
      return false;
    }
    return true;
  }

  bool dfs(std::size_t idx, std::size_t edges) {
    if (edges == target_) return true;
    if (!budget_.tick()) return false;
    if (edges + (pairs_.size() - idx) < target_) {
      ++stats.edge_count;
      return false;
    }
    const auto [i, j] = pairs_[idx];
    adj_[i] |= std::uint64_t{1} << j;
    adj_[j] |= std::uint64_t{1} << i;
    if (admissible(edges + 1) && dfs(idx + 1, edges + 1)) return true;
    adj_[i] &= ~(std::uint64_t{1} << j);
    adj_[j] &= ~(std::uint64_t{1} << i);
    return dfs(idx + 1, edges);
  }

  std::size_t n_;
  PatternSpec p_;
  Budget& budget_;
  std::vector<Edge> pairs_;
  std::array<std::uint64_t, kSearchMaxOrder> adj_{};
  std::size_t target_ = 0;
};

SearchResult run_descend(std::size_t n, PatternSpec p, Budget& budget) {
  SearchResult r;
  r.threads = 1;
  Descender d(n, p, budget);
  for (std::size_t target = edge_ceiling(n) + 1; target-- > 0;) {
    auto g = d.feasible(target);
    if (budget.stopped()) break;
    if (g) {
      r.value = target;
      r.witness = canonical_graph(*g);
      break;
    }
  }
  r.pruning = d.stats;
  return r;
}

}  // namespace

void enumerate_graphs(std::size_t n, const GraphFilter& filter,
                      const std::function<void(const Graph&)>& visit) {
  if (n > kSearchMaxOrder) {
    throw UnsupportedRange("enumeration supports at most " + std::to_string(kSearchMaxOrder) +
                     " vertices");
  }
  if (n == 0) {
    if (filter(Graph(0))) visit(Graph(0));
    return;
  }
  Criteria criteria;
  criteria.filter = &filter;
  SearchBudget unlimited;
  Budget budget(unlimited);
  Augmenter aug(criteria, budget);
  const std::function<void(const Node&)> walk = [&](const Node& node) {
    if (node.graph.order() == n) {
      visit(node.graph);
      return;
    }
    for (const Node& c : aug.children(node)) walk(c);
  };
  const Node root = root_node();
  if (filter(root.graph)) walk(root);
}

std::vector<Graph> enumerate_graph_list(std::size_t n, const GraphFilter& filter) {
  std::vector<Graph> out;
  enumerate_graphs(n, filter, [&](const Graph& g) { out.push_back(g); });
  return out;
}

SearchResult exact_ex(std::size_t n, PatternSpec p, const SearchOptions& options) {
  if (n > kSearchMaxOrder) {
    throw UnsupportedRange("exact search supports at most " + std::to_string(kSearchMaxOrder) +
                     " vertices");
  }
  const auto start = Clock::now();
  Budget budget(options.budget);
  SearchResult r = options.engine == SearchEngine::augment ? run_augment(n, p, options, budget)
                                                           : run_descend(n, p, budget);
  r.n = n;
  r.pattern = p;
  r.engine = options.engine;
  r.exact = !budget.stopped();
  r.nodes_explored = budget.nodes();
  r.wall_time = Clock::now() - start;
  if (is_supported_pattern(p)) r.upper_floor = bounds_for(p.h, p.k, n).upper.floor();
  return r;
}

}  // namespace planar_turan
