#include "planar_turan/planarity.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <vector>

#include "planar_turan/error.hpp"

namespace planar_turan {

EulerVerdict euler_filter(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  if (n < 3) return EulerVerdict::inconclusive;
  if (m > 3 * n - 6) return EulerVerdict::nonplanar;
  if (m > 2 * n - 4 && is_bipartite(g)) return EulerVerdict::nonplanar;
  return EulerVerdict::inconclusive;
}

namespace {

constexpr int kNone = -1;

// State of the left-right test. Oriented edges are indexed 0..m-1 in the
// order the orientation DFS discovers them.
class LeftRightTest {
 public:
  explicit LeftRightTest(const Graph& g) : g_(g), n_(g.order()) {}

  bool run() {
    if (n_ > 2 && g_.size() > 3 * n_ - 6) return false;
    const std::size_t m = g_.size();
    src_.reserve(m);
    dst_.reserve(m);
    lowpt_.reserve(m);
    lowpt2_.reserve(m);
    nesting_.reserve(m);
    height_.assign(n_, kNone);
    parent_edge_.assign(n_, kNone);
    out_.assign(n_, {});
    adj_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) adj_[v] = neighbors(g_, v).to_vector();
    oriented_.assign(n_, VertexSet(n_));

    std::vector<Vertex> roots;
    for (Vertex v = 0; v < n_; ++v) {
      if (height_[v] == kNone) {
        height_[v] = 0;
        roots.push_back(v);
        orient(v);
      }
    }

    for (Vertex v = 0; v < n_; ++v) {
      std::stable_sort(out_[v].begin(), out_[v].end(),
                       [&](int a, int b) { return nesting_[a] < nesting_[b]; });
    }
    ref_.assign(m, kNone);
    lowpt_edge_.assign(m, kNone);
    stack_bottom_.assign(m, 0);
    for (Vertex r : roots) {
      if (!test(r)) return false;
    }
    return true;
  }

 private:
  struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval left;
    Interval right;
  };

  bool conflicting(const Interval& i, int edge) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[edge];
  }
  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  // Iterative DFS orienting edges away from the root, computing lowpoints
  // and the nesting depth used to order outgoing edges.
  void orient(Vertex root) {
    std::vector<Vertex> stack{root};
    std::vector<std::size_t> next(n_, 0);
    std::vector<int> pending(n_, kNone);  // tree edge awaiting post-processing
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const int e = parent_edge_[v];
      while (next[v] < adj_[v].size()) {
        const Vertex w = adj_[v][next[v]];
        int vw = pending[v];
        if (vw == kNone) {
          if (oriented_[v].contains(w)) {
            ++next[v];
            continue;
          }
          oriented_[v].insert(w);
          oriented_[w].insert(v);
          vw = static_cast<int>(src_.size());
          src_.push_back(v);
          dst_.push_back(w);
          lowpt_.push_back(height_[v]);
          lowpt2_.push_back(height_[v]);
          nesting_.push_back(0);
          out_[v].push_back(vw);
          if (height_[w] == kNone) {
            parent_edge_[w] = vw;
            height_[w] = height_[v] + 1;
            pending[v] = vw;
            stack.push_back(v);
            stack.push_back(w);
            break;
          }
          lowpt_[vw] = height_[w];
        } else {
          pending[v] = kNone;
        }
        nesting_[vw] = 2 * lowpt_[vw];
        if (lowpt2_[vw] < height_[v]) nesting_[vw] += 1;  // chordal
        if (e != kNone) {
          if (lowpt_[vw] < lowpt_[e]) {
            lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
            lowpt_[e] = lowpt_[vw];
          } else if (lowpt_[vw] > lowpt_[e]) {
            lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
          } else {
            lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
          }
        }
        ++next[v];
      }
    }
  }

  bool test(Vertex root) {
    std::vector<Vertex> stack{root};
    std::vector<std::size_t> next(n_, 0);
    std::vector<bool> resumed(n_, false);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const int e = parent_edge_[v];
      bool descended = false;
      while (next[v] < out_[v].size()) {
        const int ei = out_[v][next[v]];
        const Vertex w = dst_[ei];
        if (!resumed[v]) {
          stack_bottom_[ei] = conflicts_.size();
          if (ei == parent_edge_[w]) {
            resumed[v] = true;
            stack.push_back(v);
            stack.push_back(w);
            descended = true;
            break;
          }
          lowpt_edge_[ei] = ei;
          conflicts_.push_back({Interval{}, Interval{ei, ei}});
        } else {
          resumed[v] = false;
        }
        if (lowpt_[ei] < height_[v]) {
          if (next[v] == 0) {
            lowpt_edge_[e] = lowpt_edge_[ei];
          } else if (!add_constraints(ei, e)) {
            return false;
          }
        }
        ++next[v];
      }
      if (!descended && e != kNone) remove_back_edges(e);
    }
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // Merge return edges of ei into p.right.
    do {
      ConflictPair q = conflicts_.back();
      conflicts_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (conflicts_.size() != stack_bottom_[ei]);

    // Merge conflicting return edges of earlier siblings into p.left.
    while (!conflicts_.empty() && (conflicting(conflicts_.back().left, ei) ||
                                   conflicting(conflicts_.back().right, ei))) {
      ConflictPair q = conflicts_.back();
      conflicts_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;
      if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!p.left.empty() || !p.right.empty()) conflicts_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const Vertex u = src_[e];
    while (!conflicts_.empty() && lowest(conflicts_.back()) == height_[u]) {
      conflicts_.pop_back();
    }
    if (!conflicts_.empty()) {
      ConflictPair p = conflicts_.back();
      conflicts_.pop_back();
      while (p.left.high != kNone && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && dst_[p.right.high] == u) {
        p.right.high = ref_[p.right.high];
      }
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
      conflicts_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !conflicts_.empty()) {
      const int hl = conflicts_.back().left.high;
      const int hr = conflicts_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) {
        ref_[e] = hl;
      } else {
        ref_[e] = hr;
      }
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> oriented_;
  std::vector<int> height_;
  std::vector<int> parent_edge_;
  std::vector<std::vector<int>> out_;
  std::vector<Vertex> src_;
  std::vector<Vertex> dst_;
  std::vector<int> lowpt_;
  std::vector<int> lowpt2_;
  std::vector<int> nesting_;
  std::vector<int> ref_;
  std::vector<int> lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<ConflictPair> conflicts_;
};

}  // namespace

bool is_planar(const Graph& g) {
  if (g.order() < 5) return true;
  if (euler_filter(g) == EulerVerdict::nonplanar) return false;
  return LeftRightTest(g).run();
}

Graph maximal_planar(std::size_t m) {
  if (m < 3) throw UsageError("maximal_planar needs at least 3 vertices");
  GraphBuilder b(m);
  b.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2);
  // Both faces of the starting triangle; each insertion splits the oldest
  // face into three.
  std::deque<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (Vertex v = 3; v < m; ++v) {
    const auto [a, c, d] = faces.front();
    faces.pop_front();
    b.add_edge(v, a).add_edge(v, c).add_edge(v, d);
    faces.push_back({a, c, v});
    faces.push_back({c, d, v});
    faces.push_back({a, d, v});
  }
  return b.build();
}

Graph icosahedron() {
  // Vertices of the plane drawing: outer triangle 0,1,2; middle hexagon
  // 3,5,8,4,7,6 (clockwise from the top); inner triangle 9,10,11.
  static constexpr std::array<Edge, 30> kEdges{{
      {0, 1}, {1, 2}, {0, 2},                           // outer triangle
      {0, 5}, {5, 2}, {2, 4}, {4, 1}, {1, 6}, {6, 0},   // outer ring to hexagon
      {3, 5}, {5, 8}, {8, 4}, {4, 7}, {7, 6}, {6, 3},   // hexagon
      {0, 3}, {2, 8}, {1, 7},                           // spokes
      {9, 10}, {10, 11}, {11, 9},                       // inner triangle
      {10, 5}, {11, 6}, {9, 4}, {3, 10}, {3, 11},       // inner ring
      {9, 8}, {8, 10}, {9, 7}, {7, 11},
  }};
  Graph g = Graph::from_edges(12, std::span<const Edge>(kEdges));
  if (g.size() != 30 || g.min_degree() != 5 || g.max_degree() != 5 || !is_planar(g)) {
    throw std::logic_error("icosahedron adjacency table is corrupt");
  }
  return g;
}

}  // namespace planar_turan
