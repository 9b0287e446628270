#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace planar_turan {

using Vertex = std::uint32_t;

// Bitset over the vertex universe 0..universe-1. Graphs with at most 64
// vertices use a single word, so set algebra is a handful of instructions.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet from_words(std::size_t universe,
                              std::span<const std::uint64_t> words) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size() && i < words.size(); ++i) {
      s.words_[i] = words[i];
    }
    return s;
  }

  static VertexSet all(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  VertexSet complement() const {
    VertexSet s = all(universe_);
    return s -= *this;
  }

  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & o.words_[i]) != 0) return true;
    }
    return false;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace planar_turan
