#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "planar_turan/canonical.hpp"
#include "planar_turan/error.hpp"
#include "planar_turan/extremal_search.hpp"
#include "planar_turan/patterns.hpp"
#include "planar_turan/planarity.hpp"

using namespace planar_turan;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

}  // namespace

TEST(Canonical, TriangleLabelings) {
  const Graph t = families::complete(3);
  std::vector<Vertex> perm{0, 1, 2};
  std::set<CanonicalForm> forms;
  do {
    forms.insert(canonical_form(t.relabeled(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(forms.size(), 1u);
  EXPECT_NE(canonical_form(families::path(3)), canonical_form(t));
}

TEST(Canonical, ElevenGraphsOnFour) {
  const auto classes = oracles::brute_force_classes(4);
  ASSERT_EQ(classes.size(), 11u);
  std::set<CanonicalForm> forms;
  for (const Graph& g : classes) forms.insert(canonical_form(g));
  EXPECT_EQ(forms.size(), 11u);
}

TEST(Canonical, AgreesWithBruteForceCodes) {
  // Same form iff same permutation-minimal code.
  std::mt19937_64 rng(41);
  std::vector<Graph> pool;
  for (int t = 0; t < 400; ++t) {
    pool.push_back(oracles::random_graph(6, 0.5, rng));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); j += 7) {
      EXPECT_EQ(canonical_form(pool[i]) == canonical_form(pool[j]),
                oracles::brute_force_code(pool[i]) == oracles::brute_force_code(pool[j]));
    }
  }
}

TEST(Canonical, RelabelInvariance) {
  std::mt19937_64 rng(43);
  std::vector<Graph> hard{icosahedron(), families::cycle(16), families::complete_bipartite(8, 8),
                          disjoint_union(std::vector<Graph>{families::cycle(8), families::cycle(8)}),
                          families::edgeless(16), families::complete(16)};
  for (int t = 0; t < 200; ++t) {
    hard.push_back(oracles::random_graph(1 + rng() % 16, 0.3, rng));
  }
  for (const Graph& g : hard) {
    const CanonicalLabeling lab = canonical_labeling(g);
    EXPECT_EQ(lab.form.to_graph(), g.relabeled(lab.position));
    EXPECT_EQ(canonical_graph(g), lab.form.to_graph());
    for (int r = 0; r < 5; ++r) {
      ASSERT_EQ(canonical_form(shuffled(g, rng)), lab.form);
    }
  }
  EXPECT_NE(canonical_form(families::cycle(16)),
            canonical_form(disjoint_union(std::vector<Graph>{families::cycle(8), families::cycle(8)})));
}

TEST(Canonical, OrderLimit) {
  EXPECT_THROW(canonical_form(families::path(17)), UsageError);
  EXPECT_NO_THROW(canonical_form(families::path(16)));
  EXPECT_FALSE(canonical_form(families::path(5)).to_hex().empty());
}

TEST(Enumeration, CountsMatchBruteForce) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto brute = oracles::brute_force_classes(n);
    const auto listed = enumerate_graph_list(n);
    EXPECT_EQ(listed.size(), brute.size()) << "n=" << n;
    std::set<std::uint64_t> codes;
    for (const Graph& g : listed) codes.insert(oracles::brute_force_code(g));
    EXPECT_EQ(codes.size(), listed.size()) << "duplicate class at n=" << n;
  }
}

TEST(Enumeration, KnownCounts) {
  const std::vector<std::size_t> all{1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n < all.size(); ++n) {
    EXPECT_EQ(enumerate_graph_list(n).size(), all[n]);
  }
  const std::vector<std::size_t> planar{1, 1, 2, 4, 11, 33, 142, 822};
  for (std::size_t n = 0; n < planar.size(); ++n) {
    EXPECT_EQ(enumerate_graph_list(n, planar_filter()).size(), planar[n]);
  }
  EXPECT_EQ(enumerate_graph_list(3, planar_free_filter({1, 2})).size(), 4u);
}

TEST(Enumeration, FilteredListsAreExact) {
  // Filtered enumeration equals the full list restricted by the predicate.
  for (PatternSpec p : {PatternSpec{1, 2}, PatternSpec{2, 2}}) {
    for (std::size_t n = 5; n <= 7; ++n) {
      std::size_t expected = 0;
      for (const Graph& g : enumerate_graph_list(n)) {
        if (is_planar(g) && is_free(g, p)) ++expected;
      }
      EXPECT_EQ(enumerate_graph_list(n, planar_free_filter(p)).size(), expected);
    }
  }
}

TEST(Enumeration, OrderLimit) {
  EXPECT_THROW(enumerate_graph_list(11), UnsupportedRange);
}
