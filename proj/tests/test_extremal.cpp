#include <gtest/gtest.h>

#include <map>

#include "planar_turan/constructions.hpp"
#include "planar_turan/error.hpp"
#include "planar_turan/extremal_search.hpp"
#include "planar_turan/patterns.hpp"
#include "planar_turan/planarity.hpp"

using namespace planar_turan;

namespace {

const std::vector<PatternSpec> kPatterns{{1, 2}, {1, 3}, {2, 2}, {1, 4},
                                         {2, 3}, {1, 5}, {2, 4}, {2, 5}};

// Maximum over the enumerated planar W-free classes.
std::size_t brute_ex(std::size_t n, PatternSpec p) {
  std::size_t best = 0;
  for (const Graph& g : enumerate_graph_list(n)) {
    if (is_planar(g) && is_free(g, p)) best = std::max(best, g.size());
  }
  return best;
}

}  // namespace

TEST(ExactEx, EqualityPoints) {
  EXPECT_EQ(exact_ex(5, {1, 2}).value, 9u);
  EXPECT_EQ(exact_ex(4, {1, 2}).value, 6u);
  EXPECT_EQ(exact_ex(7, {1, 4}).value, 15u);
  const SearchResult six = exact_ex(6, {1, 2});
  EXPECT_LE(six.value, 10u);
  EXPECT_EQ(six.value, 9u);
}

TEST(ExactEx, MatchesEnumerationOracle) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (PatternSpec p : kPatterns) {
      EXPECT_EQ(exact_ex(n, p).value, brute_ex(n, p)) << "n=" << n << " h=" << p.h << " k=" << p.k;
    }
  }
}

TEST(ExactEx, WitnessIsValid) {
  for (PatternSpec p : kPatterns) {
    const SearchResult r = exact_ex(7, p);
    EXPECT_EQ(r.witness.order(), 7u);
    EXPECT_EQ(r.witness.size(), r.value);
    EXPECT_TRUE(is_planar(r.witness));
    EXPECT_TRUE(is_free(r.witness, p));
    EXPECT_TRUE(r.exact);
    EXPECT_TRUE(r.within_bound());
    ASSERT_TRUE(r.upper_floor.has_value());
  }
}

TEST(ExactEx, EnginesAgree) {
  SearchOptions descend;
  descend.engine = SearchEngine::descend;
  for (std::size_t n = 0; n <= 7; ++n) {
    for (PatternSpec p : kPatterns) {
      EXPECT_EQ(exact_ex(n, p).value, exact_ex(n, p, descend).value);
    }
  }
}

TEST(ExactEx, ThreadsDoNotChangeResults) {
  SearchOptions one;
  SearchOptions four;
  four.threads = 4;
  for (PatternSpec p : {PatternSpec{1, 3}, PatternSpec{2, 5}}) {
    const SearchResult a = exact_ex(8, p, one);
    const SearchResult b = exact_ex(8, p, four);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(b.threads, 4u);
  }
}

TEST(ExactEx, BudgetStopsEarly) {
  SearchOptions opt;
  opt.budget.max_nodes = 10;
  const SearchResult r = exact_ex(8, {2, 5}, opt);
  EXPECT_FALSE(r.exact);
  EXPECT_LE(r.value, 18u);
}

TEST(ExactEx, Limits) {
  EXPECT_THROW(exact_ex(11, {1, 2}), UnsupportedRange);
  EXPECT_THROW(parse_engine("dfs"), UsageError);
  EXPECT_EQ(parse_engine("descend"), SearchEngine::descend);
  EXPECT_EQ(to_string(SearchEngine::augment), "augment");
  EXPECT_FALSE(exact_ex(6, {3, 5}).upper_floor.has_value());
}
