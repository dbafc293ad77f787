#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>
#include <string>

#include "csale/graph.hpp"

using namespace csale;

namespace {

EdgeList parse(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in, "test");
}

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const std::runtime_error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(EdgeList, TokensMapToDenseIdsInFileOrder) {
    const auto g = parse("# header\nlax jfk\njfk ord  # trailing\n\n  ord lax\n");
    ASSERT_EQ(g.node_names, (std::vector<std::string>{"lax", "jfk", "ord"}));
    ASSERT_EQ(g.edges.size(), 3u);
    EXPECT_EQ(g.edges[0].tail, 0u);
    EXPECT_EQ(g.edges[0].head, 1u);
    EXPECT_EQ(g.edges[2].tail, 2u);
    EXPECT_EQ(g.edges[2].head, 0u);
    EXPECT_FALSE(g.weighted());
    EXPECT_EQ(g.find_node("ord"), 2u);
    EXPECT_FALSE(g.find_node("sfo").has_value());
}

TEST(EdgeList, WeightsAndDirectedness) {
    const auto list = parse("1 2 0.5\n2 3 0.25\n");
    ASSERT_TRUE(list.weighted());
    EXPECT_EQ(list.weights, (std::vector<double>{0.5, 0.25}));
    EXPECT_TRUE(list.to_graph(true).directed);
    EXPECT_FALSE(list.to_graph(false).directed);
    EXPECT_EQ(list.to_graph(true).node_count, 3u);
}

TEST(EdgeList, ParallelEdgesAreKeptAsSeparateArms) {
    const auto list = parse("a b\na b\nb a\n");
    EXPECT_EQ(list.edges.size(), 3u);
    EXPECT_EQ(list.node_names.size(), 2u);
}

TEST(EdgeList, Errors) {
    EXPECT_NE(error_of("a b\nc\n").find("test:2"), std::string::npos);
    EXPECT_NE(error_of("a b 1 2\n").find("test:1"), std::string::npos);
    EXPECT_NE(error_of("a b 0.1\nb c\n").find("weight column"), std::string::npos);
    EXPECT_NE(error_of("a a\n").find("self-loop"), std::string::npos);
    EXPECT_NE(error_of("a b x1\n").find("bad weight"), std::string::npos);
    EXPECT_NE(error_of("a b 0.5z\n").find("bad weight"), std::string::npos);
    EXPECT_THROW(read_edge_list("/nonexistent/graph.txt"), std::runtime_error);
}

TEST(EdgeList, EmptyInputIsAnEmptyGraph) {
    const auto list = parse("# nothing\n\n");
    EXPECT_TRUE(list.edges.empty());
    EXPECT_TRUE(list.node_names.empty());
}

TEST(EdgeList, WriteThenParseRoundTrips) {
    GraphInstance g;
    g.node_count = 4;
    g.directed = true;
    g.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    std::ostringstream out;
    write_edge_list(out, g, {0.1, 0.5, 0.9, 0.25});
    const auto back = parse(out.str());
    EXPECT_EQ(back.to_graph(true).edges, g.edges);
    EXPECT_EQ(back.weights, (std::vector<double>{0.1, 0.5, 0.9, 0.25}));
}

TEST(GraphInstance, Validate) {
    GraphInstance g;
    g.node_count = 3;
    g.edges = {{0, 1}, {1, 3}};
    EXPECT_THROW(g.validate(), std::invalid_argument);
    g.edges = {{0, 1}, {2, 2}};
    EXPECT_THROW(g.validate(), std::invalid_argument);
    g.edges = {{0, 1}, {1, 2}};
    EXPECT_NO_THROW(g.validate());
}
