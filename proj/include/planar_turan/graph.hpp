#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "planar_turan/vertex_set.hpp"

namespace planar_turan {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..order()-1, stored as one adjacency
// bitset row per vertex. Values are immutable; the with_/without_ members
// and GraphBuilder produce new values.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Duplicate edges collapse. Self-loops and out-of-range endpoints throw
  // UsageError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;

  // Adjacency row of v. Unchecked.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  bool fits_word() const noexcept { return n_ <= 64; }
  // Single-word adjacency mask; valid only when fits_word().
  std::uint64_t mask(Vertex v) const noexcept { return n_ == 0 ? 0 : bits_[v]; }

  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  // Appends vertex order() adjacent to every member of nbrs.
  Graph with_vertex(const VertexSet& nbrs) const;
  Graph without_vertex(Vertex v) const;
  // Subgraph induced by keep, relabeled to 0..|keep|-1 in increasing order.
  Graph induced(const VertexSet& keep) const;
  // Vertex v of this graph becomes new_label[v].
  Graph relabeled(std::span<const Vertex> new_label) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g) : g_(g) {}

  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
  std::size_t degree(Vertex v) const { return g_.degree(v); }
  std::size_t order() const noexcept { return g_.order(); }
  std::size_t size() const noexcept { return g_.size(); }

  Graph build() const { return g_; }

 private:
  Graph g_;
};

struct DegreeCensus {
  std::map<std::size_t, std::size_t> counts;  // degree i -> n_i

  std::size_t count(std::size_t degree) const {
    auto it = counts.find(degree);
    return it == counts.end() ? 0 : it->second;
  }
  std::size_t vertex_total() const;
  std::size_t degree_sum() const;
  friend bool operator==(const DegreeCensus&, const DegreeCensus&) = default;
};

VertexSet neighbors(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
// Vertices at distance exactly two from v.
VertexSet second_neighborhood(const Graph& g, Vertex v);
VertexSet second_neighborhood(const Graph& g, const VertexSet& of);
DegreeCensus degree_census(const Graph& g);
Graph disjoint_union(std::span<const Graph> parts);
std::vector<VertexSet> components(const Graph& g);
bool is_component(const Graph& g, const VertexSet& s);
bool is_bipartite(const Graph& g);
// Edges with both ends in s.
std::size_t edges_within(const Graph& g, const VertexSet& s);
// Edges with one end in a and the other in b; an edge inside a∩b counts once.
std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

namespace families {
Graph edgeless(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);
// Hub 0 joined to every vertex of the cycle 1..rim.
Graph wheel(std::size_t rim);
}  // namespace families

}  // namespace planar_turan
