#include <gtest/gtest.h>

#include <sstream>

#include "extensor/error.hpp"
#include "extensor/text_io.hpp"

using namespace extensor;

namespace {

GraphInput graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

UpdateBatch updates(const std::string& text, std::uint32_t n) {
  std::istringstream in(text);
  return parse_updates(in, n);
}

}  // namespace

TEST(GraphFile, ParsesEdgesAndComments) {
  const auto g = graph("# a path\n3 2 directed\n\n1 2\n2 3\n");
  EXPECT_EQ(g.n, 3u);
  EXPECT_TRUE(g.directed);
  EXPECT_EQ(g.edges, (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_FALSE(g.constraints.has_value());
  EXPECT_TRUE(g.directed_graph().has_edge(1, 2));
  const auto u = graph("2 1 undirected\n2 1\n");
  EXPECT_FALSE(u.directed);
  EXPECT_TRUE(u.undirected_graph().has_edge(0, 1));
}

TEST(GraphFile, ParsesConstraints) {
  const auto g = graph("3 2 directed\n1 2\n2 3\nV1: 2\nV2: 1 3\n1 2\n");
  ASSERT_TRUE(g.constraints.has_value());
  EXPECT_EQ(g.constraints->V1, (std::vector<Vertex>{1}));
  EXPECT_EQ(g.constraints->V2, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(g.constraints->mu1, 1u);
  EXPECT_EQ(g.constraints->mu2, 2u);
}

TEST(GraphFile, RejectsMalformedInput) {
  EXPECT_THROW(graph(""), ParseError);
  EXPECT_THROW(graph("3 two directed\n"), ParseError);
  EXPECT_THROW(graph("3 1 sideways\n1 2\n"), ParseError);
  EXPECT_THROW(graph("3 2 directed\n1 2\n"), ParseError);
  EXPECT_THROW(graph("3 1 directed\n1 4\n"), ParseError);
  EXPECT_THROW(graph("3 1 directed\n0 1\n"), ParseError);
  EXPECT_THROW(graph("3 2 directed\n1 2\n1 2\n"), ParseError);
  EXPECT_THROW(parse_graph_file("/nonexistent/graph"), ParseError);
}

TEST(UpdateFile, ParsesOperations) {
  const auto b = updates("+ 1 2\n- 2 3\nx 3\n# done\n", 3);
  EXPECT_EQ(b.inserts, (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(b.deletes, (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(b.vertex_failures, (std::vector<Vertex>{2}));
  EXPECT_THROW(updates("x 0\n", 3), ParseError);
  EXPECT_THROW(updates("+ 1\n", 3), ParseError);
  EXPECT_THROW(updates("* 1 2\n", 3), ParseError);
  EXPECT_THROW(updates("+ 1 9\n", 3), ParseError);
}

TEST(SidesFile, MarksRemainingVerticesSideTwo) {
  std::istringstream in("V1: 1 3\n");
  EXPECT_EQ(parse_sides(in, 4), (std::vector<std::uint8_t>{1, 2, 1, 2}));
  std::istringstream bad("1 3\n");
  EXPECT_THROW(parse_sides(bad, 4), ParseError);
}

TEST(SessionFile, ParsesHeaderAndCommands) {
  std::istringstream in("6 3\n+ 1 2\n?\n- 1\nv\nx 4\n");
  const auto s = parse_session(in);
  EXPECT_EQ(s.first, 6u);
  EXPECT_EQ(s.second, 3u);
  ASSERT_EQ(s.lines.size(), 5u);
  EXPECT_EQ(s.lines[0].op, '+');
  EXPECT_EQ(s.lines[0].args, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(s.lines[1].op, '?');
  EXPECT_EQ(s.lines[3].op, 'v');
  EXPECT_EQ(s.lines[4].args, (std::vector<std::uint64_t>{4}));
  std::istringstream none("");
  EXPECT_THROW(parse_session(none), ParseError);
}
