#include "planar_turan/patterns.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "planar_turan/error.hpp"

namespace planar_turan {

// Leaf selection. With A = N(v1)\{v2,v3} and B = N(v3)\{v1,v2}, disjoint
// sets L1 ⊆ A, L3 ⊆ B with |L1| = h, |L3| = k exist iff
//   |A| >= h, |B| >= k and |A ∪ B| >= h + k.
// Necessity is immediate (L1 ∪ L3 ⊆ A ∪ B). Sufficiency: take
// L1 = min(h, |A\B|) vertices of A\B topped up from A∩B. If |A\B| >= h,
// B is untouched and |B| >= k. Otherwise h - |A\B| vertices of A∩B are
// used and B keeps |B| - h + |A\B| = |A ∪ B| - h >= k of them.
// pick_leaves below performs exactly this selection.

namespace {

constexpr std::size_t kOracleLimit = 10;

bool leaves_fit(std::size_t a, std::size_t b, std::size_t both, std::size_t h, std::size_t k) {
  return a >= h && b >= k && both >= h + k;
}

void pick_leaves(VertexSet a, VertexSet b, std::size_t h, std::size_t k, WEmbedding& out) {
  VertexSet a_only = a - b;
  for (Vertex v : a_only.to_vector()) {
    if (out.leaves_v1.size() == h) break;
    out.leaves_v1.push_back(v);
  }
  for (Vertex v : (a & b).to_vector()) {
    if (out.leaves_v1.size() == h) break;
    out.leaves_v1.push_back(v);
  }
  for (Vertex v : out.leaves_v1) b.erase(v);
  for (Vertex v : b.to_vector()) {
    if (out.leaves_v3.size() == k) break;
    out.leaves_v3.push_back(v);
  }
}

}  // namespace

std::size_t CaterpillarSpec::vertex_count() const noexcept {
  return std::accumulate(leaves.begin(), leaves.end(), leaves.size());
}

Graph caterpillar_graph(const CaterpillarSpec& spec) {
  if (spec.leaves.empty()) throw UsageError("caterpillar spine must have at least one vertex");
  GraphBuilder b(spec.vertex_count());
  const std::size_t l = spec.spine_length();
  for (Vertex i = 1; i < l; ++i) b.add_edge(i - 1, i);
  auto next = static_cast<Vertex>(l);
  for (Vertex i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < spec.leaves[i]; ++j) b.add_edge(i, next++);
  }
  return b.build();
}

Graph quasi_double_star_graph(PatternSpec p) {
  return caterpillar_graph(CaterpillarSpec::quasi_double_star(p.h, p.k));
}

std::vector<Vertex> WEmbedding::vertices() const {
  std::vector<Vertex> out{v1, v2, v3};
  out.insert(out.end(), leaves_v1.begin(), leaves_v1.end());
  out.insert(out.end(), leaves_v3.begin(), leaves_v3.end());
  return out;
}

std::vector<Edge> WEmbedding::tree_edges() const {
  std::vector<Edge> out{{v1, v2}, {v2, v3}};
  for (Vertex u : leaves_v1) out.emplace_back(v1, u);
  for (Vertex w : leaves_v3) out.emplace_back(v3, w);
  return out;
}

namespace detail {

bool contains_w_masks(const std::uint64_t* adj, std::size_t n, PatternSpec p) {
  if (n < p.vertex_count()) return false;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t nv = adj[v];
    if (std::popcount(nv) < 2) continue;
    for (std::uint64_t us = nv; us != 0; us &= us - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(us));
      if (static_cast<std::size_t>(std::popcount(adj[u])) < p.h + 1) continue;
      for (std::uint64_t ws = nv & ~(std::uint64_t{1} << u); ws != 0; ws &= ws - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(ws));
        if (static_cast<std::size_t>(std::popcount(adj[w])) < p.k + 1) continue;
        const std::uint64_t drop = (std::uint64_t{1} << v) | (std::uint64_t{1} << u) |
                                   (std::uint64_t{1} << w);
        const std::uint64_t a = adj[u] & ~drop;
        const std::uint64_t b = adj[w] & ~drop;
        if (leaves_fit(static_cast<std::size_t>(std::popcount(a)),
                       static_cast<std::size_t>(std::popcount(b)),
                       static_cast<std::size_t>(std::popcount(a | b)), p.h, p.k)) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace detail

std::optional<WEmbedding> find_w(const Graph& g, PatternSpec p) {
  const std::size_t n = g.order();
  if (n < p.vertex_count()) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet nv = neighbors(g, v);
    if (nv.size() < 2) continue;
    for (Vertex u : nv.to_vector()) {
      if (g.degree(u) < p.h + 1) continue;
      for (Vertex w : nv.to_vector()) {
        if (w == u || g.degree(w) < p.k + 1) continue;
        VertexSet drop(n);
        drop.insert(v);
        drop.insert(u);
        drop.insert(w);
        const VertexSet a = neighbors(g, u) - drop;
        const VertexSet b = neighbors(g, w) - drop;
        if (leaves_fit(a.size(), b.size(), (a | b).size(), p.h, p.k)) {
          WEmbedding e;
          e.v1 = u;
          e.v2 = v;
          e.v3 = w;
          pick_leaves(a, b, p.h, p.k, e);
          return e;
        }
      }
    }
  }
  return std::nullopt;
}

bool contains_w(const Graph& g, PatternSpec p) {
  if (g.fits_word()) {
    std::vector<std::uint64_t> adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.mask(v);
    return detail::contains_w_masks(adj.data(), adj.size(), p);
  }
  return find_w(g, p).has_value();
}

bool is_free(const Graph& g, PatternSpec p) { return !contains_w(g, p); }

bool contains_double_star(const Graph& g, std::size_t h, std::size_t k) {
  const std::size_t n = g.order();
  if (n < h + k + 2) return false;
  for (auto [x, y] : g.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      const Vertex u = flip == 0 ? x : y;
      const Vertex v = flip == 0 ? y : x;
      VertexSet drop(n);
      drop.insert(u);
      drop.insert(v);
      const VertexSet a = neighbors(g, u) - drop;
      const VertexSet b = neighbors(g, v) - drop;
      if (leaves_fit(a.size(), b.size(), (a | b).size(), h, k)) return true;
    }
  }
  return false;
}

namespace {

class SubgraphSearch {
 public:
  SubgraphSearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
    // Map pattern vertices in BFS order from a maximum-degree vertex so each
    // new vertex (after the first of its component) has a mapped neighbor.
    const std::size_t p = pattern.order();
    std::vector<bool> placed(p, false);
    while (order_.size() < p) {
      Vertex start = 0;
      std::size_t best = 0;
      bool found = false;
      for (Vertex v = 0; v < p; ++v) {
        if (!placed[v] && (!found || pattern.degree(v) > best)) {
          start = v;
          best = pattern.degree(v);
          found = true;
        }
      }
      placed[start] = true;
      order_.push_back(start);
      for (std::size_t i = order_.size() - 1; i < order_.size(); ++i) {
        for (Vertex w : neighbors(pattern, order_[i]).to_vector()) {
          if (!placed[w]) {
            placed[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
    image_.assign(p, 0);
    used_ = VertexSet(host.order());
  }

  std::optional<std::vector<Vertex>> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex pv = order_[depth];
    const std::size_t need = pattern_.degree(pv);
    for (Vertex hv = 0; hv < host_.order(); ++hv) {
      if (used_.contains(hv) || host_.degree(hv) < need) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        if (pattern_.has_edge(pv, order_[j]) && !host_.has_edge(hv, image_[order_[j]])) {
          ok = false;
        }
      }
      if (!ok) continue;
      image_[pv] = hv;
      used_.insert(hv);
      if (extend(depth + 1)) return true;
      used_.erase(hv);
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  VertexSet used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_subgraph_oracle(const Graph& host, const Graph& pattern) {
  if (pattern.order() > kOracleLimit) {
    throw UsageError("subgraph oracle supports patterns of at most 10 vertices");
  }
  return SubgraphSearch(host, pattern).run();
}

bool contains_subgraph_oracle(const Graph& host, const Graph& pattern) {
  return find_subgraph_oracle(host, pattern).has_value();
}

}  // namespace planar_turan
