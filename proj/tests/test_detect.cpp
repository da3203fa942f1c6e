#include <p5w4/detect.hpp>
#include <p5w4/errors.hpp>

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace p5w4;
using std::vector;

namespace
{
    auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        GraphBuilder b{n};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    auto embedding_is_induced(const Graph & g, const Graph & h, const vector<int> & e) -> bool
    {
        for (int i = 0; i < h.n(); ++i)
            for (int j = i + 1; j < h.n(); ++j)
                if (h.adjacent(i, j) != g.adjacent(e[i], e[j]) || e[i] == e[j])
                    return false;
        return true;
    }
}

TEST_CASE("find_induced examples")
{
    CHECK(! find_induced(cycle_graph(5), Pattern{PatternKind::p5}));
    auto e = find_induced(cycle_graph(6), Pattern{PatternKind::p5});
    REQUIRE(e);
    CHECK(*e == vector<int>{0, 1, 2, 3, 4});
    CHECK(! find_induced(complete_graph(5), Pattern{PatternKind::four_wheel}));
    auto rim = find_induced(wheel_graph(5), Pattern{PatternKind::c5});
    REQUIRE(rim);
    CHECK(*rim == vector<int>{0, 1, 2, 3, 4});
    auto hub = find_induced(wheel_graph(5), Pattern{PatternKind::five_wheel});
    REQUIRE(hub);
    CHECK(hub->back() == 5);
}

TEST_CASE("pattern names round trip")
{
    for (auto p : {Pattern{PatternKind::p3}, Pattern{PatternKind::two_k2}, Pattern::k_wheel(6), Pattern::odd_hole(7),
             Pattern::odd_antihole(5), Pattern{PatternKind::c7_complement}}) {
        auto q = Pattern::parse(p.name());
        CHECK(q.kind == p.kind);
        CHECK(q.name() == p.name());
    }
    CHECK_THROWS_AS(Pattern::parse("banana"), GraphError);
}

TEST_CASE("find_induced agrees with brute force on random graphs")
{
    std::mt19937_64 rng{7};
    vector<Pattern> pats{{PatternKind::p4}, {PatternKind::p5}, {PatternKind::c4}, {PatternKind::c5}, {PatternKind::two_k2},
        {PatternKind::three_k1}, {PatternKind::four_wheel}, {PatternKind::c7_complement}};
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(7, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
        for (auto & p : pats) {
            auto h = pattern_graph(p);
            auto e = find_induced(g, p);
            CHECK(e.has_value() == oracle::contains_induced(g, h));
            if (e)
                CHECK(embedding_is_induced(g, h, *e));
        }
    }
}

TEST_CASE("clique partition and r_set")
{
    auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    CHECK(is_p3_free(g, g.vertices()));
    auto parts = clique_partition(g, g.vertices());
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet{0, 1, 2});
    CHECK(parts[1] == VertexSet{3, 4});
    CHECK(r_set(g, g.vertices()) == VertexSet{0, 3});
    CHECK(r_set(g, {}).empty());
    CHECK(clique_partition(g, {}).empty());
    CHECK(! is_p3_free(path_graph(3), VertexSet{0, 1, 2}));
    CHECK_THROWS_AS(clique_partition(path_graph(3), VertexSet{0, 1, 2}), GraphError);
    auto c5r = r_set(cycle_graph(5), VertexSet::range(5));
    CHECK(c5r.size() == 2);
    CHECK(is_stable(cycle_graph(5), c5r));
    CHECK(c5r == VertexSet{0, 2});
}

TEST_CASE("r_set is a maximum stable set")
{
    std::mt19937_64 rng{11};
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(7, 0.5, rng);
        auto r = r_set(g, g.vertices());
        CHECK(is_stable(g, r));
        CHECK(r.size() == oracle::alpha(g));
    }
}

TEST_CASE("omega, max cliques and chi")
{
    auto c5 = cycle_graph(5);
    CHECK(omega(c5) == 2);
    CHECK(chi_exact(c5).chi == 3);
    auto k4 = complete_graph(4);
    CHECK(omega(k4) == 4);
    CHECK(chi_exact(k4).chi == 4);
    auto mc = max_cliques(k4);
    REQUIRE(mc.size() == 1);
    CHECK(mc[0] == k4.vertices());
    CHECK(max_cliques(c5).size() == 5);
    CHECK(maximal_cliques(wheel_graph(5)).size() == 5);
    CHECK(chi_exact(Graph{0}).chi == 0);
    CHECK(chi_exact(Graph{3}).chi == 1);
}

TEST_CASE("exact oracles agree with brute force")
{
    std::mt19937_64 rng{3};
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 9;
        auto g = random_graph(n, 0.15 + 0.7 * (trial % 7) / 6.0, rng);
        int w = omega(g);
        CHECK(w == oracle::omega(g));
        for (auto & m : max_cliques(g)) {
            CHECK(m.size() == w);
            CHECK(is_clique(g, m));
        }
        auto c = chi_exact(g);
        CHECK(c.chi == oracle::chi(g));
        CHECK(check_proper(g, c.coloring));
        CHECK(color_count(c.coloring) == c.chi);
        CHECK(alpha(g) == oracle::alpha(g));
    }
}

TEST_CASE("chi via matching on graphs without three pairwise non-adjacent vertices")
{
    std::mt19937_64 rng{5};
    int tried = 0;
    for (int trial = 0; trial < 2000 && tried < 100; ++trial) {
        auto g = random_graph(9, 0.75, rng);
        if (! is_3k1_free(g))
            continue;
        ++tried;
        auto c = chi_exact(g);
        CHECK(c.chi == oracle::chi(g));
        CHECK(check_proper(g, c.coloring));
    }
    CHECK(tried > 10);
}

TEST_CASE("quasi-line recognition")
{
    auto w = quasi_line_witness(cycle_graph(5));
    REQUIRE(w);
    CHECK(check_quasi_line_witness(cycle_graph(5), *w));
    CHECK(! is_quasi_line(wheel_graph(5)));
    auto k6 = complete_graph(6);
    auto wk = quasi_line_witness(k6);
    REQUIRE(wk);
    CHECK(check_quasi_line_witness(k6, *wk));
}

TEST_CASE("perfection, chordality, class membership")
{
    CHECK(is_perfect(cycle_graph(6)));
    CHECK(! is_perfect(cycle_graph(5)));
    CHECK(! is_perfect(complement(cycle_graph(7))));
    CHECK(is_perfect(complete_graph(5)));
    CHECK(is_chordal(path_graph(5)));
    CHECK(! is_chordal(cycle_graph(4)));
    CHECK(! in_class(cycle_graph(6)));
    CHECK(! in_class(wheel_graph(4)));
    CHECK(in_class(wheel_graph(5)));
    CHECK(is_3k1_free(cycle_graph(5)));
    CHECK(! is_3k1_free(cycle_graph(6)));
}

TEST_CASE("good with respect to a set")
{
    // x = {0,1} u {2}; probe vertices 3, 4, 5
    auto g = Graph::from_edges(6, {{0, 1}, {3, 0}, {3, 1}, {3, 2}, {4, 0}});
    VertexSet x{0, 1, 2};
    CHECK(is_good_wrt(g, 3, x));
    CHECK(! is_good_wrt(g, 4, x));
    CHECK(! is_good_wrt(g, 5, x));
    CHECK_THROWS_AS(is_good_wrt(g, 0, x), GraphError);
}
