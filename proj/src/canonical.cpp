#include "planar_turan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

#include "planar_turan/error.hpp"

namespace planar_turan {

namespace {

using Bits = std::array<std::uint64_t, 2>;
using Colouring = std::array<std::uint8_t, kCanonicalMaxOrder>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = static_cast<std::uint32_t>(g.mask(v));
  }

  CanonicalLabeling run() {
    Colouring colour{};
    std::size_t cells = n_ == 0 ? 0 : 1;
    refine(colour, cells);
    search(colour, cells);
    CanonicalLabeling out;
    out.form = CanonicalForm(n_, best_);
    out.position.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) out.position[best_order_[i]] = static_cast<Vertex>(i);
    return out;
  }

 private:
  // Split cells by (cell, neighbour count per cell) until stable. Cells keep
  // their relative order, so the refined partition is isomorphism invariant.
  void refine(Colouring& colour, std::size_t& cells) const {
    while (true) {
      std::array<std::array<std::uint8_t, kCanonicalMaxOrder + 1>, kCanonicalMaxOrder> sig{};
      for (std::size_t v = 0; v < n_; ++v) {
        sig[v][0] = colour[v];
        for (std::uint32_t w = adj_[v]; w != 0; w &= w - 1) {
          ++sig[v][1 + colour[static_cast<std::size_t>(std::countr_zero(w))]];
        }
      }
      std::array<std::uint8_t, kCanonicalMaxOrder> idx{};
      for (std::size_t v = 0; v < n_; ++v) idx[v] = static_cast<std::uint8_t>(v);
      std::sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_),
                [&](std::uint8_t a, std::uint8_t b) { return sig[a] < sig[b]; });
      std::size_t rank = 0;
      Colouring next{};
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
        next[idx[i]] = static_cast<std::uint8_t>(rank);
      }
      const std::size_t next_cells = n_ == 0 ? 0 : rank + 1;
      colour = next;
      if (next_cells == cells) return;
      cells = next_cells;
    }
  }

  void leaf(const Colouring& colour) {
    std::array<Vertex, kCanonicalMaxOrder> order{};
    for (std::size_t v = 0; v < n_; ++v) order[colour[v]] = static_cast<Vertex>(v);
    Bits bits{0, 0};
    std::size_t idx = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i, ++idx) {
        if ((adj_[order[i]] >> order[j]) & 1u) bits[idx / 64] |= std::uint64_t{1} << (63 - idx % 64);
      }
    }
    if (!have_best_ || bits < best_) {
      have_best_ = true;
      best_ = bits;
      best_order_.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_));
    }
  }

  bool twins(std::size_t a, std::size_t b) const {
    const std::uint32_t ma = adj_[a] & ~(std::uint32_t{1} << b);
    const std::uint32_t mb = adj_[b] & ~(std::uint32_t{1} << a);
    return ma == mb;
  }

  void search(const Colouring& colour, std::size_t cells) {
    if (cells == n_) {
      leaf(colour);
      return;
    }
    std::array<std::size_t, kCanonicalMaxOrder> cell_size{};
    for (std::size_t v = 0; v < n_; ++v) ++cell_size[colour[v]];
    std::size_t target = 0;
    while (cell_size[target] == 1) ++target;

    std::array<std::size_t, kCanonicalMaxOrder> tried{};
    std::size_t tried_count = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour[v] != target) continue;
      // Swapping twins in one cell is an automorphism fixing the partition,
      // so their subtrees produce the same leaves.
      bool redundant = false;
      for (std::size_t t = 0; t < tried_count && !redundant; ++t) redundant = twins(tried[t], v);
      if (redundant) continue;
      tried[tried_count++] = v;

      Colouring child = colour;
      for (std::size_t u = 0; u < n_; ++u) {
        if (u != v && colour[u] >= target) child[u] = static_cast<std::uint8_t>(colour[u] + 1);
      }
      std::size_t child_cells = cells + 1;
      refine(child, child_cells);
      search(child, child_cells);
    }
  }

  std::size_t n_;
  std::array<std::uint32_t, kCanonicalMaxOrder> adj_{};
  bool have_best_ = false;
  Bits best_{0, 0};
  std::vector<Vertex> best_order_;
};

}  // namespace

Graph CanonicalForm::to_graph() const {
  GraphBuilder b(order_);
  std::size_t idx = 0;
  for (std::size_t j = 1; j < order_; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++idx) {
      if ((bits_[idx / 64] >> (63 - idx % 64)) & 1u) {
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return b.build();
}

std::string CanonicalForm::to_hex() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%zu:%016llx%016llx", order_,
                static_cast<unsigned long long>(bits_[0]), static_cast<unsigned long long>(bits_[1]));
  return buf;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw UsageError("canonical form supports graphs of at most 16 vertices");
  }
  return Canonicalizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return canonical_form(g).to_graph(); }

}  // namespace planar_turan
