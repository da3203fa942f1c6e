#include <p5w4/decompose.hpp>
#include <p5w4/detect.hpp>
#include <p5w4/errors.hpp>

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace p5w4;

TEST_CASE("clique cutset examples")
{
    auto p3 = find_clique_cutset(path_graph(3));
    REQUIRE(p3);
    CHECK(p3->q == VertexSet{1});
    CHECK(p3->v1 == VertexSet{0});
    CHECK(p3->v2 == VertexSet{2});

    CHECK(! find_clique_cutset(cycle_graph(5)));

    auto bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto b = find_clique_cutset(bowtie);
    REQUIRE(b);
    CHECK(b->q == VertexSet{2});

    CHECK_THROWS_AS(find_clique_cutset(Graph{2}), GraphError);
    CHECK(! find_clique_cutset(Graph{1}));
}

TEST_CASE("atom trees")
{
    auto c5 = atom_tree(cycle_graph(5));
    CHECK(c5.leaves().size() == 1);

    // two five-cycles sharing vertex 0
    auto g = Graph::from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
    auto t = atom_tree(g);
    auto leaves = t.leaves();
    REQUIRE(leaves.size() == 2);
    for (int l : leaves) {
        CHECK(t.nodes[l].graph.n() == 5);
        CHECK(find_induced(t.nodes[l].graph, Pattern{PatternKind::c5}).has_value());
    }

    auto tree = Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    auto tt = atom_tree(tree);
    CHECK(tt.leaves().size() == 5);
    for (int l : tt.leaves())
        CHECK(tt.nodes[l].graph == complete_graph(2));
}

TEST_CASE("atom tree leaves are atoms and reassemble the root")
{
    std::mt19937_64 rng{17};
    std::bernoulli_distribution coin(0.35);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 3 + trial % 7;
        GraphBuilder b{n};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    b.add_edge(u, v);
        auto g = std::move(b).build();
        if (! is_connected(g))
            continue;
        ++checked;
        auto t = atom_tree(g);
        auto leaves = t.leaves();
        CHECK(int(leaves.size()) <= n);
        int best_chi = 0, best_omega = 0;
        GraphBuilder back{n};
        for (int l : leaves) {
            auto & node = t.nodes[l];
            CHECK(is_connected(node.graph));
            CHECK(! oracle::has_clique_cutset(node.graph));
            best_chi = std::max(best_chi, oracle::chi(node.graph));
            best_omega = std::max(best_omega, omega(node.graph));
            for (auto [u, v] : node.graph.edges())
                back.ensure_edge(node.to_root[u], node.to_root[v]);
        }
        CHECK(best_chi == oracle::chi(g));
        CHECK(best_omega == omega(g));
        CHECK(std::move(back).build() == g);
    }
    CHECK(checked > 100);
}
