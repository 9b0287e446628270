#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace oracles {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.has_edge(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

namespace {

struct Router {
  const Graph& g;
  std::vector<std::pair<int, int>> pattern_edges;
  std::vector<Vertex> branch;
  std::vector<bool> used;

  bool route(std::size_t e) {
    if (e == pattern_edges.size()) return true;
    const Vertex a = branch[pattern_edges[e].first];
    const Vertex b = branch[pattern_edges[e].second];
    return extend(e, a, b);
  }

  // Simple path from `at` to `target` through unused vertices.
  bool extend(std::size_t e, Vertex at, Vertex target) {
    if (g.has_edge(at, target)) {
      if (!edge_taken(at, target)) {
        taken.emplace_back(std::min(at, target), std::max(at, target));
        if (route(e + 1)) return true;
        taken.pop_back();
      }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (used[v] || !g.has_edge(at, v)) continue;
      used[v] = true;
      taken.emplace_back(std::min(at, v), std::max(at, v));
      if (extend(e, v, target)) return true;
      taken.pop_back();
      used[v] = false;
    }
    return false;
  }

  bool edge_taken(Vertex a, Vertex b) const {
    return std::find(taken.begin(), taken.end(), std::pair{std::min(a, b), std::max(a, b)}) !=
           taken.end();
  }

  std::vector<std::pair<Vertex, Vertex>> taken;
};

// Branch vertices within a group are picked in increasing label order, and
// the first vertex of each later group exceeds the first of the group before.
bool has_subdivision(const Graph& g, std::size_t k, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<std::size_t>& degree, std::size_t group) {
  const std::size_t n = g.order();
  if (n < k) return false;
  std::vector<Vertex> pick(k);
  std::vector<bool> chosen(n, false);
  bool found = false;
  // Injective branch maps, in label order for the symmetric parts.
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (found) return;
    if (i == k) {
      Router r{g, edges, pick, std::vector<bool>(n, false), {}};
      for (Vertex v : pick) r.used[v] = true;
      found = r.route(0);
      return;
    }
    Vertex from = 0;
    if (i % group != 0) {
      from = pick[i - 1] + 1;
    } else if (i > 0) {
      from = pick[i - group] + 1;
    }
    for (Vertex v = from; v < n && !found; ++v) {
      if (chosen[v] || g.degree(v) < degree[i]) continue;
      chosen[v] = true;
      pick[i] = v;
      self(self, i + 1);
      chosen[v] = false;
    }
  };
  search(search, 0);
  return found;
}

}  // namespace

bool has_kuratowski_subdivision(const Graph& g) {
  std::vector<std::pair<int, int>> k5;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
  }
  std::vector<std::pair<int, int>> k33;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) k33.emplace_back(i, j);
  }
  return has_subdivision(g, 5, k5, std::vector<std::size_t>(5, 4), 5) ||
         has_subdivision(g, 6, k33, std::vector<std::size_t>(6, 3), 3);
}

std::uint64_t brute_force_code(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i, ++bit) {
        if (g.has_edge(perm[i], perm[j])) code |= std::uint64_t{1} << bit;
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> brute_force_classes(std::size_t n) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  }
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<planar_turan::Edge> edges;
    for (std::size_t b = 0; b < pairs; ++b) {
      if ((mask >> b) & 1u) edges.push_back(slots[b]);
    }
    const Graph g = Graph::from_edges(n, edges);
    if (seen.insert(brute_force_code(g)).second) out.push_back(g);
  }
  return out;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  planar_turan::GraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (coin(rng)) b.add_edge(i, j);
    }
  }
  return b.build();
}

}  // namespace oracles
