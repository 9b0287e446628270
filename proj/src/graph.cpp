#include "planar_turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>

#include "planar_turan/error.hpp"

namespace planar_turan {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(n_));
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return ((bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u) != 0;
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  std::size_t best = n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    VertexSet::from_words(n_, row(u)).for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  return GraphBuilder(*this).add_edge(u, v).build();
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  return GraphBuilder(*this).remove_edge(u, v).build();
}

Graph Graph::with_vertex(const VertexSet& nbrs) const {
  GraphBuilder b(n_ + 1);
  for (auto [u, v] : edges()) b.add_edge(u, v);
  const auto x = static_cast<Vertex>(n_);
  nbrs.for_each([&](Vertex v) { b.add_edge(x, v); });
  return b.build();
}

Graph Graph::without_vertex(Vertex v) const {
  check_vertex(v);
  VertexSet keep = VertexSet::all(n_);
  keep.erase(v);
  return induced(keep);
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> label(n_, 0);
  std::size_t next = 0;
  for (Vertex v = 0; v < n_; ++v) {
    if (keep.contains(v)) label[v] = static_cast<Vertex>(next++);
  }
  GraphBuilder b(next);
  for (auto [u, v] : edges()) {
    if (keep.contains(u) && keep.contains(v)) b.add_edge(label[u], label[v]);
  }
  return b.build();
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  if (new_label.size() != n_) throw UsageError("relabeling has wrong length");
  std::vector<bool> seen(n_, false);
  for (auto l : new_label) {
    if (l >= n_ || seen[l]) throw UsageError("relabeling is not a permutation");
    seen[l] = true;
  }
  GraphBuilder b(n_);
  for (auto [u, v] : edges()) b.add_edge(new_label[u], new_label[v]);
  return b.build();
}

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
  auto& a = g_.bits_[u * g_.words_ + (v >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((a & bit) != 0) return *this;
  a |= bit;
  g_.bits_[v * g_.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++g_.m_;
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) return *this;
  auto& a = g_.bits_[u * g_.words_ + (v >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((a & bit) == 0) return *this;
  a &= ~bit;
  g_.bits_[v * g_.words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --g_.m_;
  return *this;
}

std::size_t DegreeCensus::vertex_total() const {
  std::size_t t = 0;
  for (auto [d, c] : counts) t += c;
  return t;
}

std::size_t DegreeCensus::degree_sum() const {
  std::size_t t = 0;
  for (auto [d, c] : counts) t += d * c;
  return t;
}

VertexSet neighbors(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(g.order()));
  }
  return VertexSet::from_words(g.order(), g.row(v));
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = neighbors(g, v);
  s.insert(v);
  return s;
}

VertexSet second_neighborhood(const Graph& g, Vertex v) {
  VertexSet closed = closed_neighborhood(g, v);
  VertexSet reach(g.order());
  closed.for_each([&](Vertex u) { reach |= neighbors(g, u); });
  return reach - closed;
}

VertexSet second_neighborhood(const Graph& g, const VertexSet& of) {
  VertexSet closed = of;
  of.for_each([&](Vertex v) { closed |= neighbors(g, v); });
  VertexSet reach(g.order());
  closed.for_each([&](Vertex v) { reach |= neighbors(g, v); });
  return reach - closed;
}

DegreeCensus degree_census(const Graph& g) {
  DegreeCensus c;
  for (Vertex v = 0; v < g.order(); ++v) ++c.counts[g.degree(v)];
  return c;
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw UsageError("disjoint_union needs at least one part");
  std::size_t total = 0;
  for (const auto& p : parts) total += p.order();
  GraphBuilder b(total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) {
      b.add_edge(static_cast<Vertex>(u + offset), static_cast<Vertex>(v + offset));
    }
    offset += p.order();
  }
  return b.build();
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> out;
  VertexSet seen(n);
  for (Vertex s = 0; s < n; ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(n);
    std::deque<Vertex> queue{s};
    comp.insert(s);
    seen.insert(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      VertexSet::from_words(n, g.row(v)).for_each([&](Vertex w) {
        if (!seen.contains(w)) {
          seen.insert(w);
          comp.insert(w);
          queue.push_back(w);
        }
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_component(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  VertexSet boundary(g.order());
  s.for_each([&](Vertex v) { boundary |= neighbors(g, v); });
  if (!boundary.is_subset_of(s)) return false;
  // s is closed; it is a component iff it is connected.
  const Graph sub = g.induced(s);
  return components(sub).size() == 1;
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      bool ok = true;
      VertexSet::from_words(n, g.row(v)).for_each([&](Vertex w) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

std::size_t edges_within(const Graph& g, const VertexSet& s) {
  std::size_t twice = 0;
  s.for_each([&](Vertex v) { twice += (neighbors(g, v) & s).size(); });
  return twice / 2;
}

std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t count = 0;
  for (auto [u, v] : g.edges()) {
    if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))) ++count;
  }
  return count;
}

namespace families {

Graph edgeless(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return b.build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw UsageError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return b.build();
}

Graph star(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t v = a; v < a + b; ++v) g.add_edge(u, static_cast<Vertex>(v));
  }
  return g.build();
}

Graph wheel(std::size_t rim) {
  if (rim < 3) throw UsageError("wheel needs a rim of at least 3 vertices");
  GraphBuilder b(rim + 1);
  for (Vertex v = 1; v <= rim; ++v) {
    b.add_edge(0, v);
    b.add_edge(v, static_cast<Vertex>(v % rim + 1));
  }
  return b.build();
}

}  // namespace families

}  // namespace planar_turan
