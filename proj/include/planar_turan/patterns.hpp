#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "planar_turan/graph.hpp"

namespace planar_turan {

// Quasi-double star: path v1-v2-v3 with h leaves on v1 and k leaves on v3.
struct PatternSpec {
  std::size_t h = 0;
  std::size_t k = 0;

  std::size_t vertex_count() const noexcept { return h + k + 3; }
  PatternSpec normalized() const noexcept {
    return h <= k ? *this : PatternSpec{k, h};
  }
  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

// Caterpillar P_l(s_1..s_l): spine v_1..v_l, s_i leaves on v_i.
struct CaterpillarSpec {
  std::vector<std::size_t> leaves;

  std::size_t spine_length() const noexcept { return leaves.size(); }
  std::size_t vertex_count() const noexcept;

  static CaterpillarSpec quasi_double_star(std::size_t h, std::size_t k) {
    return {{h, 0, k}};
  }
  static CaterpillarSpec double_star(std::size_t h, std::size_t k) { return {{h, k}}; }
};

// Spine vertices get labels 0..l-1, leaves follow in spine order.
Graph caterpillar_graph(const CaterpillarSpec& spec);
Graph quasi_double_star_graph(PatternSpec p);

// Host vertices of one W_{h,k} copy.
struct WEmbedding {
  Vertex v1 = 0;
  Vertex v2 = 0;
  Vertex v3 = 0;
  std::vector<Vertex> leaves_v1;
  std::vector<Vertex> leaves_v3;

  std::vector<Vertex> vertices() const;
  // The h+k+2 tree edges of the copy.
  std::vector<Edge> tree_edges() const;
};

bool contains_w(const Graph& g, PatternSpec p);
std::optional<WEmbedding> find_w(const Graph& g, PatternSpec p);
bool is_free(const Graph& g, PatternSpec p);

// Double star S_{h,k} on an edge uv: h leaves on u, k on v.
bool contains_double_star(const Graph& g, std::size_t h, std::size_t k);

// Exhaustive injective-homomorphism search; pattern order at most 10.
// Returns host image of each pattern vertex.
std::optional<std::vector<Vertex>> find_subgraph_oracle(const Graph& host, const Graph& pattern);
bool contains_subgraph_oracle(const Graph& host, const Graph& pattern);

namespace detail {
// Fast W_{h,k} decision over single-word adjacency masks (order <= 64).
bool contains_w_masks(const std::uint64_t* adj, std::size_t n, PatternSpec p);
}  // namespace detail

}  // namespace planar_turan
