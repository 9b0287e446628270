#include "planar_turan/lemma_props.hpp"

#include <algorithm>

#include "planar_turan/error.hpp"
#include "planar_turan/planarity.hpp"

namespace planar_turan {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::skipped: return "skipped";
    case Verdict::held: return "held";
    case Verdict::violated: return "violated";
  }
  return "?";
}

EdgeNeighborhoodPartition EdgeNeighborhoodPartition::of(const Graph& g, Vertex x, Vertex y) {
  if (!g.has_edge(x, y)) {
    throw UsageError(std::to_string(x) + "-" + std::to_string(y) + " is not an edge");
  }
  EdgeNeighborhoodPartition p;
  p.x = x;
  p.y = y;
  const VertexSet nx = neighbors(g, x);
  const VertexSet ny = neighbors(g, y);
  p.common = nx & ny;
  p.only_x = nx - closed_neighborhood(g, y);
  p.only_y = ny - closed_neighborhood(g, x);
  p.closed = closed_neighborhood(g, x) | ny;
  p.outer = (second_neighborhood(g, x) | second_neighborhood(g, y)) - p.closed;
  p.outer4 = VertexSet(g.order());
  p.outer.for_each([&](Vertex v) {
    if (g.degree(v) == 4) p.outer4.insert(v);
  });
  return p;
}

bool EdgeNeighborhoodPartition::well_formed(const Graph& g) const {
  VertexSet ends(g.order());
  ends.insert(x);
  ends.insert(y);
  const VertexSet parts[] = {ends, common, only_x, only_y};
  VertexSet seen(g.order());
  for (const auto& part : parts) {
    if (seen.intersects(part)) return false;
    seen |= part;
  }
  return seen == closed && closed.size() == g.degree(x) + g.degree(y) - common.size() &&
         !outer.intersects(closed) && outer4.is_subset_of(outer);
}

GraphFacts GraphFacts::of(const Graph& g, PatternSpec p) {
  GraphFacts f;
  f.graph = &g;
  f.pattern = p;
  f.planar = is_planar(g);
  f.pattern_free = f.planar && is_free(g, p);
  f.min_degree = g.min_degree();
  f.max_degree = g.max_degree();
  return f;
}

Verdict W25Verdicts::overall() const {
  if (private_neighbors.verdict == Verdict::violated || outer.verdict == Verdict::violated) {
    return Verdict::violated;
  }
  return private_neighbors.verdict;
}

namespace {

std::optional<CheckResult> standing(const GraphFacts& f, std::size_t min_delta) {
  if (!f.planar) return CheckResult::skip("not planar");
  if (!f.pattern_free) return CheckResult::skip("contains the pattern");
  if (f.min_degree < min_delta) {
    return CheckResult::skip("minimum degree below " + std::to_string(min_delta));
  }
  return std::nullopt;
}

bool in_range(const Graph& g, Vertex v) { return v < g.order(); }

std::size_t claim_min_degree(PatternSpec p) { return std::max<std::size_t>(p.h + 1, 3); }

VertexSet with(VertexSet s, Vertex v) {
  s.insert(v);
  return s;
}

std::string vertex_name(Vertex v) { return std::to_string(v); }

}  // namespace

CheckResult check_component_lemma(const GraphFacts& f, Vertex x) {
  const Graph& g = f.g();
  const auto [h, k] = f.pattern;
  if (auto s = standing(f, h + 1)) return *s;
  if (!in_range(g, x) || g.degree(x) < h + k + 1) return CheckResult::skip("degree too small");
  const VertexSet nx = neighbors(g, x);
  if (!is_component(g, closed_neighborhood(g, x))) {
    return CheckResult::violated("N[" + vertex_name(x) + "] is not a component");
  }
  if (g.degree(x) >= h + k + 2) {
    for (Vertex u : nx.to_vector()) {
      if ((neighbors(g, u) & nx).size() > h) {
        return CheckResult::violated("G[N(x)] contains K_{1,h+1} centred at " + vertex_name(u));
      }
    }
  }
  return CheckResult::held();
}

CheckResult check_second_neighborhood_lemma(const GraphFacts& f, Vertex x) {
  const Graph& g = f.g();
  const auto [h, k] = f.pattern;
  if (auto s = standing(f, h + 1)) return *s;
  if (!in_range(g, x) || g.degree(x) < h + k) return CheckResult::skip("degree too small");
  const VertexSet nx = neighbors(g, x);
  const VertexSet n2 = second_neighborhood(g, x);
  for (Vertex y : n2.to_vector()) {
    if (!neighbors(g, y).is_subset_of(nx)) {
      return CheckResult::violated("N(" + vertex_name(y) + ") not inside N(x)");
    }
  }
  if (!is_component(g, closed_neighborhood(g, x) | n2)) {
    return CheckResult::violated("N[x] ∪ N2(x) is not a component");
  }
  return CheckResult::held();
}

CheckResult check_star_lemma(const GraphFacts& f, Vertex x) {
  const Graph& g = f.g();
  const auto [h, k] = f.pattern;
  if (h + k < 5) return CheckResult::skip("h+k below 5");
  if (auto s = standing(f, h + 1)) return *s;
  if (!in_range(g, x) || g.degree(x) != h + k) return CheckResult::skip("degree is not h+k");
  for (Vertex u : neighbors(g, x).to_vector()) {
    if (g.degree(u) != h + k - 1) return CheckResult::skip("not an (h+k)-(h+k-1) star");
  }
  if (second_neighborhood(g, x).empty()) return CheckResult::violated("N2(x) is empty");
  return CheckResult::held();
}

CheckResult check_common_neighbor_lemma(const GraphFacts& f, Vertex x, Vertex y) {
  const Graph& g = f.g();
  const auto [h, k] = f.pattern;
  if (auto s = standing(f, 0)) return *s;
  if (!in_range(g, x) || !in_range(g, y) || x == y || !g.has_edge(x, y)) {
    return CheckResult::skip("not an edge");
  }
  const std::size_t p = g.degree(x);
  const std::size_t q = g.degree(y);
  if (p < k + 2 || q > k + 2) return CheckResult::skip("degrees out of range");
  const std::size_t common = (neighbors(g, x) & neighbors(g, y)).size();
  if (common == 0) return CheckResult::skip("no common neighbour");
  if (common + h < q) {
    return CheckResult::violated("|S_xy| = " + std::to_string(common) + " < q-h");
  }
  return CheckResult::held();
}

CheckResult check_claim_66_edge(const GraphFacts& f, Vertex x, Vertex y) {
  const Graph& g = f.g();
  const auto [h, k] = f.pattern;
  if (auto s = standing(f, claim_min_degree(f.pattern))) return *s;
  if (!in_range(g, x) || !in_range(g, y) || x == y || !g.has_edge(x, y)) {
    return CheckResult::skip("not an edge");
  }
  if (g.degree(x) != h + k || g.degree(y) != h + k) return CheckResult::skip("not an (h+k)-(h+k) edge");
  const auto part = EdgeNeighborhoodPartition::of(g, x, y);
  if (!is_component(g, part.closed)) return CheckResult::violated("S[xy] is not a component");
  return CheckResult::held();
}

CheckResult check_claim_path(const GraphFacts& f, Vertex x, Vertex y, Vertex z) {
  const Graph& g = f.g();
  const auto [h, k] = f.pattern;
  if (auto s = standing(f, claim_min_degree(f.pattern))) return *s;
  if (!in_range(g, x) || !in_range(g, y) || !in_range(g, z) || x == z || x == y || y == z) {
    return CheckResult::skip("not a path");
  }
  if (!g.has_edge(x, y) || !g.has_edge(y, z) || g.has_edge(x, z)) {
    return CheckResult::skip("not an induced path");
  }
  if (g.degree(x) != h + k || g.degree(z) != h + k) return CheckResult::skip("end degrees not h+k");
  if (g.degree(y) < 3 || g.degree(y) + 1 > h + k) return CheckResult::skip("middle degree out of range");
  if (neighbors(g, x) != neighbors(g, z)) return CheckResult::violated("N(x) != N(z)");
  if (!is_component(g, with(closed_neighborhood(g, x), z))) {
    return CheckResult::violated("N[x] ∪ {z} is not a component");
  }
  return CheckResult::held();
}

W25Verdicts check_w25_claims(const GraphFacts& f, Vertex x, Vertex y) {
  const Graph& g = f.g();
  W25Verdicts out;
  auto skip_all = [&](const std::string& why) {
    out.private_neighbors = CheckResult::skip(why);
    out.outer = CheckResult::skip(why);
    return out;
  };
  if (!(f.pattern == PatternSpec{2, 5})) return skip_all("pattern is not W_{2,5}");
  if (auto s = standing(f, 3)) return skip_all(s->detail);
  if (f.max_degree > 6) return skip_all("maximum degree above 6");
  if (!in_range(g, x) || !in_range(g, y) || x == y || !g.has_edge(x, y)) {
    return skip_all("not an edge");
  }
  if (g.degree(x) != 6 || g.degree(y) != 6) return skip_all("not a 6-6 edge");

  const auto part = EdgeNeighborhoodPartition::of(g, x, y);
  const VertexSet outside = part.closed.complement();

  out.private_neighbors = CheckResult::held();
  for (const auto* side : {&part.only_x, &part.only_y}) {
    const VertexSet reach = *side | outside;
    for (Vertex u : side->to_vector()) {
      if ((neighbors(g, u) & reach).size() > 1) {
        out.private_neighbors =
            CheckResult::violated(vertex_name(u) + " has two neighbours in its side or outside");
      }
    }
    if (edges_within(g, *side) + edges_between(g, *side, outside) > side->size()) {
      out.private_neighbors = CheckResult::violated("too many edges leave a private side");
    }
  }

  const std::size_t common = part.common.size();
  if (common < 2 || common > 5) {
    out.outer = CheckResult::skip("|S_xy| outside [2,5]");
    return out;
  }
  const VertexSet n2x = second_neighborhood(g, x);
  const VertexSet n2y = second_neighborhood(g, y);
  auto fail = [&](Vertex v, const std::string& what) {
    if (out.outer.verdict != Verdict::violated) {
      out.outer = CheckResult::violated(what + " at " + vertex_name(v));
    }
  };
  out.outer = CheckResult::held();
  for (Vertex v : part.outer.to_vector()) {
    const VertexSet nv = neighbors(g, v);
    const std::size_t a = (nv & part.common).size();
    const std::size_t b = (nv & part.only_x).size();
    const std::size_t c = (nv & part.only_y).size();
    const std::size_t o = (nv & outside).size();
    if (a > 2) fail(v, "three common neighbours");
    if (o > 1) fail(v, "two outside neighbours");
    if (a == 0 && b < 2 && c < 2) fail(v, "no side with two neighbours");
    if (a == 1 && (b != 1 || c != 1)) fail(v, "unbalanced sides with one common neighbour");
    if (n2x.contains(v) && c > 1) fail(v, "second neighbour of x sees two of S_y");
    if (n2y.contains(v) && b > 1) fail(v, "second neighbour of y sees two of S_x");
    if (g.degree(v) > 4) fail(v, "outer degree above 4");
  }
  if (part.outer4.size() > part.only_y.size()) fail(x, "|S'_4| > |S_y|");
  if (2 * part.outer.size() + 3 * part.only_y.size() > 24) fail(x, "|S'| > 12 - 3|S_y|/2");
  return out;
}

CheckResult check_degree_census(const GraphFacts& f) {
  const Graph& g = f.g();
  const std::size_t s = f.pattern.h + f.pattern.k;
  if (s != 5 && s != 6) return CheckResult::skip("h+k not in {5,6}");
  if (auto r = standing(f, 3)) return *r;
  if (f.max_degree > s) return CheckResult::skip("maximum degree above h+k");
  VertexSet top(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == s) top.insert(v);
  }
  if (top.empty()) return CheckResult::skip("no vertex of degree h+k");
  VertexSet seen(g.order());
  for (Vertex v : top.to_vector()) {
    const VertexSet nv = neighbors(g, v);
    if (nv.intersects(top)) return CheckResult::skip("adjacent top-degree vertices");
    if (nv.intersects(seen)) return CheckResult::skip("top-degree vertices share a neighbour");
    seen |= nv;
    bool all_next = true;
    nv.for_each([&](Vertex u) { all_next = all_next && g.degree(u) == s - 1; });
    if (all_next) return CheckResult::skip("contains an (h+k)-(h+k-1) star");
  }
  const DegreeCensus census = degree_census(g);
  std::size_t low = 0;
  for (std::size_t i = 3; i + 2 <= s; ++i) low += census.count(i);
  if (census.count(s) > low) return CheckResult::violated("n_top exceeds the low-degree count");
  return CheckResult::held();
}

CheckResult check_component_lemma(const Graph& g, PatternSpec p, Vertex x) {
  return check_component_lemma(GraphFacts::of(g, p), x);
}
CheckResult check_second_neighborhood_lemma(const Graph& g, PatternSpec p, Vertex x) {
  return check_second_neighborhood_lemma(GraphFacts::of(g, p), x);
}
CheckResult check_star_lemma(const Graph& g, PatternSpec p, Vertex x) {
  return check_star_lemma(GraphFacts::of(g, p), x);
}
CheckResult check_common_neighbor_lemma(const Graph& g, PatternSpec p, Vertex x, Vertex y) {
  return check_common_neighbor_lemma(GraphFacts::of(g, p), x, y);
}
CheckResult check_claim_66_edge(const Graph& g, PatternSpec p, Vertex x, Vertex y) {
  return check_claim_66_edge(GraphFacts::of(g, p), x, y);
}
CheckResult check_claim_path(const Graph& g, PatternSpec p, Vertex x, Vertex y, Vertex z) {
  return check_claim_path(GraphFacts::of(g, p), x, y, z);
}
W25Verdicts check_w25_claims(const Graph& g, Vertex x, Vertex y) {
  return check_w25_claims(GraphFacts::of(g, {2, 5}), x, y);
}

CheckResult check_euler_lemma(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto m = static_cast<std::int64_t>(g.size());
  if (n < 3) return CheckResult::skip("fewer than 3 vertices");
  if (!is_planar(g)) return CheckResult::skip("not planar");
  if (m > 3 * n - 6) return CheckResult::violated("m > 3n-6");
  if (is_bipartite(g) && m > 2 * n - 4) return CheckResult::violated("bipartite with m > 2n-4");
  return CheckResult::held();
}

CheckResult check_absorption_bound(std::int64_t n, std::int64_t component_order,
                                   std::int64_t rest_edges, std::int64_t component_edges,
                                   Rational tau) {
  if (tau < Rational(0) || !(tau < Rational(3))) return CheckResult::skip("τ outside [0,3)");
  if (component_order < 3 || component_order > n) return CheckResult::skip("bad component order");
  if (rest_edges < 0 || component_edges < 0) return CheckResult::skip("negative edge count");
  if (Rational(rest_edges) > tau * Rational(n - component_order)) {
    return CheckResult::skip("remainder above τ(n-|C|)");
  }
  if ((Rational(3) - tau) * Rational(component_order) > Rational(6)) {
    return CheckResult::skip("|C| above 6/(3-τ)");
  }
  if (component_edges > 3 * component_order - 6) return CheckResult::skip("component not planar");
  if (Rational(rest_edges + component_edges) > tau * Rational(n)) {
    return CheckResult::violated("e(G) > τn");
  }
  return CheckResult::held();
}

CheckResult check_neighborhood_bound(PatternSpec p, std::int64_t n, std::int64_t degree,
                                     std::int64_t rest_edges, std::int64_t closed_edges) {
  const auto h = static_cast<std::int64_t>(p.h);
  const auto k = static_cast<std::int64_t>(p.k);
  if (h < 1 || h > 2 || k < 2) return CheckResult::skip("need 1 <= h <= 2 <= k");
  if (degree < h + k + 1 || degree + 1 > n) return CheckResult::skip("degree out of range");
  if (rest_edges < 0 || closed_edges < 0) return CheckResult::skip("negative edge count");
  const Rational tau(3 * (h + k), h + k + 2);
  if (Rational(rest_edges) > tau * Rational(n - degree - 1)) {
    return CheckResult::skip("remainder above τ(n-d-1)");
  }
  const std::int64_t local = degree == h + k + 1 ? 3 * (degree + 1) - 6 : (h + 2) * degree / 2;
  if (closed_edges > local) return CheckResult::skip("closed neighbourhood above its local bound");
  if (Rational(rest_edges + closed_edges) > tau * Rational(n)) {
    return CheckResult::violated("e(G) > 3(h+k)n/(h+k+2)");
  }
  return CheckResult::held();
}

CheckResult check_single_vertex_bound(std::int64_t n, std::int64_t degree,
                                      std::int64_t rest_edges, Rational sigma) {
  if (n < 1 || degree < 0 || rest_edges < 0) return CheckResult::skip("bad counts");
  if (Rational(degree) > sigma) return CheckResult::skip("degree above σ");
  if (Rational(rest_edges) > sigma * Rational(n - 1)) return CheckResult::skip("remainder above σ(n-1)");
  if (Rational(rest_edges + degree) > sigma * Rational(n)) return CheckResult::violated("e(G) > σn");
  return CheckResult::held();
}

}  // namespace planar_turan
