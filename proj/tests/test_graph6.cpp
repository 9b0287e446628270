#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "planar_turan/error.hpp"
#include "planar_turan/graph.hpp"
#include "planar_turan/graph6.hpp"

using namespace planar_turan;

namespace {

// Fixtures produced by networkx.to_graph6_bytes.
struct Fixture {
  Graph graph;
  std::string text;
};

Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

std::size_t error_offset(std::string_view text) {
  try {
    graph6_decode(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return 0;
}

}  // namespace

TEST(Graph6, ReferenceStrings) {
  const std::vector<Fixture> fixtures{
      {families::complete(3), "Bw"},     {families::edgeless(1), "@"},
      {families::edgeless(0), "?"},      {families::complete(5), "D~{"},
      {petersen(), "IheA@GUAo"},         {families::path(4), "Ch"},
      {families::cycle(7), "FhCKG"},
  };
  for (const auto& f : fixtures) {
    EXPECT_EQ(graph6_encode(f.graph), f.text);
    EXPECT_EQ(graph6_decode(f.text), f.graph);
  }
}

TEST(Graph6, LongOrderHeader) {
  const std::string empty63 = graph6_encode(families::edgeless(63));
  EXPECT_EQ(empty63, "~??~" + std::string(326, '?'));
  const std::string star = graph6_encode(families::star(63));
  EXPECT_EQ(star.size(), 340u);
  EXPECT_EQ(star.substr(0, 12), "~?@?saCCA?_C");
  EXPECT_EQ(graph6_decode(star), families::star(63));
  EXPECT_EQ(graph6_decode(empty63), families::edgeless(63));
  EXPECT_EQ(graph6_decode(graph6_encode(families::cycle(300))), families::cycle(300));
}

TEST(Graph6, HeaderAndNewline) {
  EXPECT_EQ(graph6_decode(">>graph6<<Bw"), families::complete(3));
  EXPECT_EQ(graph6_decode("Bw\n"), families::complete(3));
  EXPECT_EQ(graph6_decode("Bw\r\n"), families::complete(3));
  const auto lines = graph6_decode_lines("Bw\n@\n\nCh\n");
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[2], families::path(4));
}

TEST(Graph6, ErrorsCarryOffsets) {
  EXPECT_THROW(graph6_decode(""), ParseError);
  EXPECT_EQ(error_offset("B"), 1u);          // truncated
  EXPECT_EQ(error_offset("Bww"), 2u);        // trailing data
  EXPECT_EQ(error_offset("Bx"), 1u);         // non-zero padding bits
  EXPECT_EQ(error_offset("B!"), 1u);         // byte below 63
  EXPECT_EQ(error_offset("~??C"), 1u);       // short length encoded in long form
  EXPECT_EQ(error_offset(">>graph6<<B"), 11u);
  EXPECT_THROW(graph6_decode_lines("Bw\nB\n"), ParseError);
  try {
    graph6_decode_lines("Bw\nB!\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
}

TEST(Graph6, RandomRoundTrips) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = rng() % 17;
    const Graph g = oracles::random_graph(n, static_cast<double>(rng() % 101) / 100.0, rng);
    ASSERT_EQ(graph6_decode(graph6_encode(g)), g);
  }
  for (std::size_t n : {62u, 63u, 64u, 65u, 200u, 1000u}) {
    const Graph g = oracles::random_graph(n, 0.1, rng);
    EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
  }
}
