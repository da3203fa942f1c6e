#include <p5w4/detect.hpp>
#include <p5w4/errors.hpp>
#include <p5w4/graph.hpp>

#include "oracle.hpp"

#include <doctest.h>

using namespace p5w4;

TEST_CASE("vertex set algebra")
{
    VertexSet a{1, 3, 70, 127}, b{3, 4, 127};
    CHECK((a | b).size() == 5);
    CHECK((a & b) == VertexSet{3, 127});
    CHECK((a - b) == VertexSet{1, 70});
    CHECK(a.first() == 1);
    CHECK(a.next(3) == 70);
    CHECK(a.next(127) == -1);
    CHECK(VertexSet::range(65).size() == 65);
    CHECK(VertexSet::range(128).size() == 128);
    CHECK(VertexSet{2, 5}.subset_of(VertexSet::range(6)));
    CHECK(! VertexSet{2, 6}.subset_of(VertexSet::range(6)));
}

TEST_CASE("construction rejects loops, repeats and range errors")
{
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph{129}, ResourceError);
}

TEST_CASE("complement")
{
    auto c5 = cycle_graph(5);
    auto c5c = complement(c5);
    CHECK(c5c.edge_count() == 5);
    CHECK(find_induced(c5c, cycle_graph(5), true).has_value());
    CHECK(complement(complete_graph(4)).edge_count() == 0);
    auto c7c = complement(cycle_graph(7));
    for (int i = 0; i < 7; ++i) {
        CHECK(c7c.adjacent(i, (i + 2) % 7));
        CHECK(c7c.adjacent(i, (i + 3) % 7));
        CHECK(! c7c.adjacent(i, (i + 1) % 7));
    }
    CHECK(complement(complement(c7c)) == c7c);
}

TEST_CASE("induced subgraph")
{
    auto sub = induced_subgraph(cycle_graph(5), VertexSet{0, 1, 2});
    CHECK(sub.graph == path_graph(3));
    CHECK(sub.to_parent == std::vector<int>{0, 1, 2});
    CHECK(induced_subgraph(complete_graph(5), VertexSet{0, 2, 4}).graph == complete_graph(3));
    auto rim = induced_subgraph(wheel_graph(4), VertexSet{0, 1, 2, 3});
    CHECK(rim.graph == cycle_graph(4));
    auto g = wheel_graph(5);
    CHECK(induced_subgraph(g, g.vertices()).graph == g);
    CHECK_THROWS_AS(induced_subgraph(g, VertexSet{7}), GraphError);
}

TEST_CASE("blowup")
{
    auto w5 = wheel_graph(5);
    auto same = clique_blowup(w5, {1, 1, 1, 1, 1, 1});
    CHECK(same.graph == w5);

    auto b = clique_blowup(cycle_graph(5), {2, 1, 1, 1, 1});
    CHECK(b.graph.n() == 6);
    CHECK(omega(b.graph) == 3);
    CHECK(b.part_of == std::vector<int>{0, 0, 1, 2, 3, 4});

    BlowupSpec bad{path_graph(2), {path_graph(3), Graph{1}}};
    CHECK_THROWS_AS(blowup(bad), GraphError);

    BlowupSpec ok{path_graph(2), {Graph::from_edges(4, {{0, 1}, {2, 3}}), Graph{1}}};
    auto r = blowup(ok);
    CHECK(r.graph.n() == 5);
    CHECK(r.graph.edge_count() == 2 + 4);
}

TEST_CASE("relation")
{
    auto c5 = cycle_graph(5);
    CHECK(relation(c5, VertexSet{0}, VertexSet{1}) == Relation::complete);
    CHECK(relation(c5, VertexSet{0}, VertexSet{2}) == Relation::anticomplete);
    CHECK(relation(c5, VertexSet{0}, VertexSet{1, 2}) == Relation::mixed);
    CHECK(relation(c5, VertexSet{1, 2}, VertexSet{0}) == Relation::mixed);
    CHECK_THROWS_AS(relation(c5, VertexSet{0, 1}, VertexSet{1}), GraphError);
}

TEST_CASE("components")
{
    auto g = Graph::from_edges(6, {{0, 1}, {2, 3}, {3, 4}});
    auto cs = components(g);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == VertexSet{0, 1});
    CHECK(cs[1] == VertexSet{2, 3, 4});
    CHECK(cs[2] == VertexSet{5});
    CHECK(! is_connected(g));
    CHECK(is_connected(cycle_graph(6)));
}
