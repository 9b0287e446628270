#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "planar_turan/error.hpp"
#include "planar_turan/lemma_props.hpp"

namespace planar_turan {

namespace {

using Rng = std::mt19937_64;
using Face = std::array<Vertex, 3>;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool face_has(const Face& f, Vertex v) { return f[0] == v || f[1] == v || f[2] == v; }

Vertex third(const Face& f, Vertex a, Vertex b) {
  for (Vertex v : f) {
    if (v != a && v != b) return v;
  }
  return f[0];
}

// Random stacked triangulation on s >= 3 vertices starting at `base`, then
// random diagonal flips that keep every degree at least 3.
void add_random_triangulation(GraphBuilder& b, Vertex base, std::size_t s, Rng& rng) {
  std::vector<Face> faces{{base, base + 1, base + 2}, {base, base + 1, base + 2}};
  b.add_edge(base, base + 1).add_edge(base + 1, base + 2).add_edge(base, base + 2);
  for (Vertex v = base + 3; v < base + s; ++v) {
    const std::size_t fi = uniform(rng, 0, faces.size() - 1);
    const Face f = faces[fi];
    for (Vertex u : f) b.add_edge(v, u);
    faces[fi] = {f[0], f[1], v};
    faces.push_back({f[1], f[2], v});
    faces.push_back({f[0], f[2], v});
  }
  if (s < 5) return;
  const std::size_t flips = uniform(rng, 0, 2 * s);
  for (std::size_t t = 0; t < flips; ++t) {
    const std::size_t fi = uniform(rng, 0, faces.size() - 1);
    const std::size_t ei = uniform(rng, 0, 2);
    const Vertex u = faces[fi][ei];
    const Vertex w = faces[fi][(ei + 1) % 3];
    const Vertex p = third(faces[fi], u, w);
    std::size_t fj = faces.size();
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (j != fi && face_has(faces[j], u) && face_has(faces[j], w)) {
        fj = j;
        break;
      }
    }
    if (fj == faces.size()) continue;
    const Vertex q = third(faces[fj], u, w);
    if (p == q || b.has_edge(p, q) || b.degree(u) <= 3 || b.degree(w) <= 3) continue;
    b.remove_edge(u, w).add_edge(p, q);
    faces[fi] = {u, p, q};
    faces[fj] = {w, p, q};
  }
}

std::vector<Edge> current_edges(const GraphBuilder& b) { return b.build().edges(); }

bool removable(const GraphBuilder& b, Edge e, std::size_t min_degree) {
  return b.degree(e.first) > min_degree && b.degree(e.second) > min_degree;
}

}  // namespace

Graph generate_instance(PatternSpec p, std::size_t n, std::size_t min_degree,
                        std::size_t max_degree, std::uint64_t seed) {
  if (n == 0 || min_degree > max_degree || max_degree > n - 1) {
    throw UsageError("need min_degree <= max_degree <= n-1");
  }
  if (n <= 3) return families::complete(n);
  Rng rng(seed);

  // Component sizes; every component needs min_degree+1 vertices.
  const std::size_t smallest = std::max<std::size_t>(3, min_degree + 1);
  const std::size_t largest = std::max(smallest, p.h + p.k + 4);
  std::vector<std::size_t> sizes;
  std::size_t left = n;
  while (left > 0) {
    if (left < smallest) {
      if (sizes.empty()) {
        sizes.push_back(left);
      } else {
        sizes.back() += left;
      }
      break;
    }
    const std::size_t s = uniform(rng, smallest, std::min(largest, left));
    sizes.push_back(s);
    left -= s;
  }

  GraphBuilder b(n);
  Vertex base = 0;
  for (std::size_t s : sizes) {
    if (s >= 3) {
      add_random_triangulation(b, base, s, rng);
    } else if (s == 2) {
      b.add_edge(base, base + 1);
    }
    base += static_cast<Vertex>(s);
  }

  for (Vertex v = 0; v < n; ++v) {
    while (b.degree(v) > max_degree) {
      std::vector<Vertex> nbrs;
      for (Vertex u = 0; u < n; ++u) {
        if (b.has_edge(v, u)) nbrs.push_back(u);
      }
      std::stable_sort(nbrs.begin(), nbrs.end(),
                       [&](Vertex a, Vertex c) { return b.degree(a) > b.degree(c); });
      b.remove_edge(v, nbrs.front());
    }
  }

  // Half of the components keep every edge; the rest lose up to a third.
  base = 0;
  for (std::size_t s : sizes) {
    const Vertex lo = base;
    const Vertex hi = base + static_cast<Vertex>(s);
    base = hi;
    if (uniform(rng, 0, 1) == 0) continue;
    std::vector<Edge> own;
    for (Edge e : current_edges(b)) {
      if (e.first >= lo && e.first < hi) own.push_back(e);
    }
    const std::size_t deletions = uniform(rng, 1, std::max<std::size_t>(1, own.size() / 3));
    for (std::size_t t = 0; t < deletions; ++t) {
      std::vector<Edge> pool;
      for (Edge e : own) {
        if (b.has_edge(e.first, e.second) && removable(b, e, min_degree)) pool.push_back(e);
      }
      if (pool.empty()) break;
      const Edge e = pool[uniform(rng, 0, pool.size() - 1)];
      b.remove_edge(e.first, e.second);
    }
  }

  const std::size_t budget = 4 * b.size() + 16;
  bool free = false;
  for (std::size_t t = 0; t < budget; ++t) {
    const auto copy = find_w(b.build(), p);
    if (!copy) {
      free = true;
      break;
    }
    std::vector<Edge> tree = copy->tree_edges();
    std::vector<Edge> pool;
    for (Edge e : tree) {
      if (removable(b, e, min_degree)) pool.push_back(e);
    }
    const auto& from = pool.empty() ? tree : pool;
    const Edge e = from[uniform(rng, 0, from.size() - 1)];
    b.remove_edge(e.first, e.second);
  }
  if (!free) throw GenerationFailed("repair budget exhausted");

  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  Graph g = b.build().relabeled(label);
  if (g.min_degree() < min_degree) throw GenerationFailed("minimum degree not met");
  return g;
}

}  // namespace planar_turan
