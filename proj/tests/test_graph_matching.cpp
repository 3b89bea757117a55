#include <istab/errors.hpp>
#include <istab/graph_matching.hpp>

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace istab;

namespace {

Graph path(int vertices)
{
    Graph g(vertices);
    for (Vertex v = 0; v + 1 < vertices; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int vertices)
{
    Graph g = path(vertices);
    g.add_edge(0, vertices - 1);
    return g;
}

void check_is_matching(const Graph & g, const std::vector<Edge> & m)
{
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    for (auto [u, v] : m) {
        CHECK(u < v);
        CHECK(g.has_edge(u, v));
        CHECK_FALSE(used[static_cast<std::size_t>(u)]);
        CHECK_FALSE(used[static_cast<std::size_t>(v)]);
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
    }
}

} // namespace

TEST_SUITE("graph_matching") {

TEST_CASE("graph invariants")
{
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.set_bipartition({Part::A, Part::A, Part::B}), std::invalid_argument);
    g.set_bipartition({Part::A, Part::B, Part::B});
    CHECK_THROWS_AS(g.add_edge(1, 2), std::invalid_argument);
}

TEST_CASE("maximum matching on small shapes")
{
    CHECK(max_matching(cycle(3)).size() == 1);
    CHECK_FALSE(has_perfect_matching(cycle(3)));
    CHECK(max_matching(cycle(4)).size() == 2);
    CHECK(has_perfect_matching(cycle(4)));
    CHECK(has_perfect_matching(Graph(0)));
    CHECK(max_matching(cycle(5)).size() == 2);
    // Two triangles joined by an edge need a blossom to find the perfect matching.
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(has_perfect_matching(g));
    // Petersen graph.
    Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                        {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
    CHECK(has_perfect_matching(petersen));
}

TEST_CASE("maximum matching equals the exhaustive maximum on random graphs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        int n = static_cast<int>(rng() % 11);
        double density = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
        Graph g = testing::random_graph(n, density, rng);
        auto m = max_matching(g);
        check_is_matching(g, m);
        REQUIRE(static_cast<int>(m.size()) == testing::brute_max_matching(g));
    }
}

TEST_CASE("maximality")
{
    Graph p3 = path(3);
    CHECK(is_maximal_matching(p3, std::vector<Edge>{{0, 1}}));
    Graph p4 = path(4);
    CHECK(is_maximal_matching(p4, std::vector<Edge>{{1, 2}}));
    CHECK_FALSE(is_maximal_matching(p4, std::vector<Edge>{}));
    CHECK_THROWS_AS(is_maximal_matching(p4, std::vector<Edge>{{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(is_maximal_matching(p4, std::vector<Edge>{{0, 1}, {1, 2}}), std::invalid_argument);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = testing::random_graph(static_cast<int>(rng() % 10), 0.3, rng);
        std::vector<Edge> greedy;
        std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
        for (auto [u, v] : g.edges())
            if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
                greedy.emplace_back(u, v);
                used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
            }
        CHECK(is_maximal_matching(g, greedy));
    }
}

TEST_CASE("minimum maximal matching")
{
    CHECK(minimum_maximal_matching(path(2)) == 1);
    CHECK(minimum_maximal_matching(path(4)) == 1);
    CHECK(minimum_maximal_matching(cycle(4)) == 2);
    CHECK(minimum_maximal_matching(cycle(6)) == 2);
    CHECK(minimum_maximal_matching(Graph(5)) == 0);
    CHECK_THROWS_AS(minimum_maximal_matching(Graph(50)), PreconditionError);
}

TEST_CASE("subdivision")
{
    Graph edge = path(2);
    Graph s = subdivision_graph(edge);
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_count() == 2);
    CHECK(s.has_edge(0, 2));
    CHECK(s.has_edge(1, 2));
    CHECK(s.part(Part::A) == std::vector<Vertex>{0, 1});
    CHECK(s.part(Part::B) == std::vector<Vertex>{2});

    Graph c6 = subdivision_graph(cycle(3));
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 6);
    for (Vertex v = 0; v < 6; ++v)
        CHECK(c6.neighbors(v).size() == 2);
    CHECK(max_matching(c6).size() == 3);

    for (const Graph & g : testing::small_graphs(3, 5)) {
        Graph sub = subdivision_graph(g);
        CHECK(sub.edge_count() == 2 * g.edge_count());
        REQUIRE(sub.bipartition());
        for (auto [u, v] : sub.edges())
            CHECK((*sub.bipartition())[static_cast<std::size_t>(u)] != (*sub.bipartition())[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("padding")
{
    SUBCASE("balanced graphs are left alone")
    {
        auto padded = pad_bipartition(subdivision_graph(cycle(3)));
        CHECK(padded.r == 0);
        CHECK(padded.graph.vertex_count() == 6);
    }
    SUBCASE("single edge gets one gadget")
    {
        auto padded = pad_bipartition(subdivision_graph(path(2)));
        CHECK(padded.r == 1);
        CHECK(padded.centre_side == Part::A);
        CHECK(padded.graph.part(Part::A).size() == 3);
        CHECK(padded.graph.part(Part::B).size() == 3);
        CHECK(padded.graph.has_edge(3, 4));
        CHECK(padded.graph.has_edge(3, 5));
    }
    SUBCASE("larger B side is padded on B")
    {
        Graph g(5, {{0, 2}, {0, 3}, {0, 4}});
        g.set_bipartition({Part::A, Part::A, Part::B, Part::B, Part::B});
        auto padded = pad_bipartition(g);
        CHECK(padded.r == 1);
        CHECK(padded.centre_side == Part::B);
        CHECK(padded.graph.part(Part::A).size() == 4);
        CHECK(padded.graph.part(Part::B).size() == 4);
    }
    SUBCASE("minimum maximal matching grows by exactly r")
    {
        for (const Graph & g : testing::small_graphs(3, 6)) {
            Graph sub = subdivision_graph(g);
            auto padded = pad_bipartition(sub);
            CHECK(padded.graph.part(Part::A).size() == padded.graph.part(Part::B).size());
            CHECK(minimum_maximal_matching(padded.graph) == minimum_maximal_matching(sub) + padded.r);
        }
    }
    CHECK_THROWS_AS(pad_bipartition(path(3)), std::invalid_argument);
}

TEST_CASE("graph file format")
{
    Graph g = parse_graph("# triangle\ngraph 3 3\n1 2\n2 3\n1 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(parse_graph(format_graph(g)).edges() == g.edges());
    CHECK_THROWS_AS(parse_graph("graph 2 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2 2\n1 2\n2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2 1\n1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("grph 2 0\n"), ParseError);
}

} // TEST_SUITE
