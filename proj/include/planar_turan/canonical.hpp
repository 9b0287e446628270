#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "planar_turan/graph.hpp"

namespace planar_turan {

inline constexpr std::size_t kCanonicalMaxOrder = 16;

// Upper-triangle adjacency bits under the canonical vertex order, column by
// column ((0,1), (0,2), (1,2), (0,3), ...), packed most significant first.
// Ordering of forms is lexicographic on that bit string.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  CanonicalForm(std::size_t order, std::array<std::uint64_t, 2> bits)
      : order_(order), bits_(bits) {}

  std::size_t order() const noexcept { return order_; }
  const std::array<std::uint64_t, 2>& bits() const noexcept { return bits_; }

  Graph to_graph() const;
  std::string to_hex() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  struct Hash {
    std::size_t operator()(const CanonicalForm& f) const noexcept {
      std::uint64_t h = f.order_ * 0x9e3779b97f4a7c15ULL;
      h ^= f.bits_[0] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= f.bits_[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

 private:
  std::size_t order_ = 0;
  std::array<std::uint64_t, 2> bits_{0, 0};
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> position;  // canonical position of each original vertex
};

// Colour refinement, then individualization with backtracking; the form is
// the lexicographically least leaf string. Order at most 16.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
// g relabeled into canonical order; equal for isomorphic inputs.
Graph canonical_graph(const Graph& g);

}  // namespace planar_turan
