#include "planar_turan/constructions.hpp"

#include <vector>

#include "planar_turan/error.hpp"
#include "planar_turan/extremal_search.hpp"
#include "planar_turan/planarity.hpp"

namespace planar_turan {

bool is_supported_pattern(PatternSpec p) noexcept {
  return p.h >= 1 && p.h <= 2 && p.k >= 2 && p.k <= 5;
}

void require_supported_pattern(PatternSpec p) {
  if (!is_supported_pattern(p)) {
    throw UnsupportedRange("(h,k) = (" + std::to_string(p.h) + "," + std::to_string(p.k) +
                           ") outside 1 <= h <= 2 <= k <= 5");
  }
}

std::string to_string(BoundRow row) {
  switch (row) {
    case BoundRow::small_sum: return "h+k<=5";
    case BoundRow::sum_six: return "h+k=6";
    case BoundRow::w25: return "h=2,k=5";
  }
  return "?";
}

BoundSpec bounds_for(std::size_t h, std::size_t k, std::size_t n) {
  require_supported_pattern({h, k});
  BoundSpec b;
  b.h = h;
  b.k = k;
  b.n = n;
  const auto nn = static_cast<std::int64_t>(n);
  const std::size_t sum = h + k;
  if (sum <= 5) {
    const std::size_t block = sum + 2;
    b.row = BoundRow::small_sum;
    b.upper = Rational(3 * static_cast<std::int64_t>(sum) * nn, static_cast<std::int64_t>(block));
    b.equality_modulus = block;
    b.equality = n % block == 0;
    if (b.equality) b.lower = b.upper;
  } else if (sum == 6) {
    b.row = BoundRow::sum_six;
    b.upper = Rational(5 * nn, 2);
    if (h == 1) {
      b.equality_modulus = 12;
      b.equality = n % 12 == 0;
    }
    if (h == 1 && n % 12 == 0) {
      b.lower = Rational(5 * nn, 2);
    } else if (n % 8 == 0) {
      b.lower = Rational(9 * nn, 4);
    }
  } else {
    b.row = BoundRow::w25;
    b.upper = Rational(17 * nn, 6);
    if (n % 12 == 0) b.lower = Rational(5 * nn, 2);
  }
  return b;
}

Graph block_union_witness(std::size_t h, std::size_t k, std::size_t n) {
  const std::size_t block = h + k + 2;
  if (block < 3) throw UsageError("block size h+k+2 must be at least 3");
  if (n % block != 0) {
    throw UsageError("n = " + std::to_string(n) + " is not divisible by h+k+2 = " +
                     std::to_string(block));
  }
  if (n == 0) return Graph(0);
  const std::vector<Graph> parts(n / block, maximal_planar(block));
  return disjoint_union(parts);
}

Graph icosa_union_witness(std::size_t h, std::size_t n) {
  if (h < 1 || h > 2) throw UsageError("icosahedral witness needs h in {1,2}");
  if (n % 12 != 0) {
    throw UsageError("n = " + std::to_string(n) + " is not divisible by 12");
  }
  if (n == 0) return Graph(0);
  const std::vector<Graph> parts(n / 12, icosahedron());
  return disjoint_union(parts);
}

namespace {

// Densest W-free graph on r vertices with r below the block size.
Graph padding(std::size_t r) {
  if (r >= 3) return maximal_planar(r);
  if (r == 2) return families::complete(2);
  return Graph(r);
}

void append_blocks(std::vector<Graph>& parts, std::size_t vertices, std::size_t block) {
  for (std::size_t i = 0; i < vertices / block; ++i) parts.push_back(maximal_planar(block));
  if (vertices % block != 0) parts.push_back(padding(vertices % block));
}

Graph assemble(const std::vector<Graph>& parts) {
  return parts.empty() ? Graph(0) : disjoint_union(parts);
}

constexpr std::size_t kExactTailLimit = 8;

}  // namespace

Witness best_witness(std::size_t h, std::size_t k, std::size_t n) {
  const PatternSpec p{h, k};
  require_supported_pattern(p);
  const std::size_t block = h + k + 2;
  const std::size_t rem = n % block;

  struct Candidate {
    Graph graph;
    std::string strategy;
    bool exact_family;  // divisible case of a family, so it attains the stated lower bound
  };
  std::vector<Candidate> candidates;

  {
    std::vector<Graph> parts;
    append_blocks(parts, n, block);
    candidates.push_back({assemble(parts), "maximal planar blocks", rem == 0});
  }
  if (k == 5) {
    std::vector<Graph> parts(n / 12, icosahedron());
    append_blocks(parts, n % 12, block);
    candidates.push_back({assemble(parts), "icosahedral blocks", n % 12 == 0});
  }
  if (rem != 0 && n >= block && block + rem <= kExactTailLimit) {
    std::vector<Graph> parts(n / block - 1, maximal_planar(block));
    parts.push_back(exact_ex(block + rem, p).witness);
    candidates.push_back({assemble(parts), "maximal planar blocks with exact tail", false});
  }

  const Candidate* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.graph.size() > best->graph.size()) best = &c;
  }
  const BoundSpec bound = bounds_for(h, k, n);
  const bool meets_lower =
      best->exact_family && bound.lower && Rational(static_cast<std::int64_t>(best->graph.size())) == *bound.lower;
  Witness w;
  w.graph = best->graph;
  w.strategy = best->strategy;
  w.certificate = make_certificate(w.graph, p, Provenance::witness_family,
                                   meets_lower ? "theorem lower bound" : "heuristic lower bound");
  if (!w.certificate.planar || !w.certificate.pattern_free) {
    throw std::logic_error("witness construction produced an invalid graph");
  }
  return w;
}

}  // namespace planar_turan
