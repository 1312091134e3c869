#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "lexconn/graph_io.hpp"

namespace lexconn {
namespace {

TEST(EdgeList, ParsesSingleEdge) {
  auto g = parse_edge_list("2 1\n0 1");
  EXPECT_EQ(g, complete_graph(2));
}

TEST(EdgeList, EmptyEdgeSet) {
  auto g = parse_edge_list("3 0\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(isolated_vertices(g), (VertexSet{0, 1, 2}));
}

TEST(EdgeList, CounterexampleFixture) {
  auto g = parse_edge_list("5 6\n0 1\n0 2\n1 2\n1 3\n1 4\n3 4");
  EXPECT_EQ(g, testing::counterexample_g1());
}

TEST(EdgeList, CommentsAndDuplicates) {
  auto g = parse_edge_list("# triangle with a repeat\n3 4\n0 1\n1 2\n# mid\n2 0\n1 0\n");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(EdgeList, ErrorsNameTheLine) {
  auto message = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("x y\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("3 2\n0 1\n0 3\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("3 1\n# c\n2 2\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("3 2\n0 1\n").find("expected 2"), std::string::npos);
  EXPECT_NE(message("").find("header"), std::string::npos);
}

TEST(Graph6, SerializesK2) { EXPECT_EQ(serialize_graph6(complete_graph(2)), "A_"); }

TEST(Graph6, ParsesAllZero) {
  auto g = parse_graph6("A?");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Graph6, KnownEncodings) {
  // Reference strings from networkx.to_graph6_bytes.
  EXPECT_EQ(serialize_graph6(cycle_graph(4)), "Cl");
  EXPECT_EQ(serialize_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(serialize_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(serialize_graph6(Graph(0)), "?");
  EXPECT_EQ(parse_graph6(">>graph6<<Cl\n"), cycle_graph(4));
}

TEST(Graph6, LargeOrderHeader) {
  Graph g(100);
  g.add_edge(0, 99);
  g.add_edge(40, 41);
  auto text = serialize_graph6(g);
  EXPECT_EQ(text.substr(0, 4), "~?@c");
  EXPECT_EQ(parse_graph6(text), g);
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);       // truncated bit stream
  EXPECT_THROW(parse_graph6("Cl?"), ParseError);     // trailing data
  EXPECT_THROW(parse_graph6("C l"), ParseError);     // invalid character
  EXPECT_THROW(parse_graph6("~?"), ParseError);      // truncated vertex count
}

TEST(Graph6, RoundTripRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    EXPECT_EQ(parse_graph6(serialize_graph6(g)), g);
    EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  }
}

TEST(GraphFile, SniffsExtension) {
  EXPECT_EQ(format_from_extension("a/b.g6"), GraphFormat::graph6);
  EXPECT_EQ(format_from_extension("x.el"), GraphFormat::edge_list);
  EXPECT_THROW(format_from_extension("x.txt"), ParseError);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.g6", GraphFormat::graph6), ParseError);
}

}  // namespace
}  // namespace lexconn
