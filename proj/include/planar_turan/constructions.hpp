#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "planar_turan/certificate.hpp"
#include "planar_turan/graph.hpp"
#include "planar_turan/patterns.hpp"
#include "planar_turan/rational.hpp"

namespace planar_turan {

// 1 <= h <= 2 <= k <= 5.
bool is_supported_pattern(PatternSpec p) noexcept;
void require_supported_pattern(PatternSpec p);

enum class BoundRow { small_sum, sum_six, w25 };

std::string to_string(BoundRow row);

// Extremal bounds on ex_P(n, W_{h,k}). `lower` is present only where a
// witness family attains it for this n; `equality` marks n where it meets
// `upper`.
struct BoundSpec {
  std::size_t h = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  BoundRow row = BoundRow::small_sum;
  std::optional<Rational> lower;
  Rational upper;
  bool equality = false;
  std::size_t equality_modulus = 0;  // n divisible by this gives equality; 0 for never

  std::int64_t floor_upper() const { return upper.floor(); }
};

BoundSpec bounds_for(std::size_t h, std::size_t k, std::size_t n);

// n/(h+k+2) disjoint stacked triangulations on h+k+2 vertices.
Graph block_union_witness(std::size_t h, std::size_t k, std::size_t n);
// n/12 disjoint icosahedra; h in {1,2}.
Graph icosa_union_witness(std::size_t h, std::size_t n);

struct Witness {
  Graph graph;
  Certificate certificate;
  std::string strategy;
};

// Densest certified witness among the implemented families. Non-divisible n
// pads with a maximal planar block on the remainder, or with an exact search
// result when the padded tail is small.
Witness best_witness(std::size_t h, std::size_t k, std::size_t n);

}  // namespace planar_turan
