#include <p5w4/errors.hpp>
#include <p5w4/harness.hpp>
#include <p5w4/json.hpp>
#include <p5w4/nice.hpp>

#include "oracle.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

using namespace p5w4;
using std::vector;

namespace
{
    auto c7_complement() -> Graph
    {
        return complement(cycle_graph(7));
    }

    auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        return a.n() == b.n() && a.edge_count() == b.edge_count() && oracle::contains_induced(a, b);
    }

    auto dimacs(const Graph & g) -> std::string
    {
        std::ostringstream out;
        write_dimacs(out, g);
        return out.str();
    }

    auto edge_list(const Graph & g) -> std::string
    {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
    }

    auto parse_dimacs(const std::string & s) -> Graph
    {
        std::istringstream in{s};
        return read_dimacs(in);
    }

    auto parse_edge_list(const std::string & s) -> Graph
    {
        std::istringstream in{s};
        return read_edge_list(in);
    }

    auto is_in_class_oracle(const Graph & g) -> bool
    {
        return ! oracle::contains_induced(g, path_graph(5)) && ! oracle::contains_induced(g, wheel_graph(4));
    }
}

TEST_CASE("gen_gstar examples")
{
    auto g = gen_gstar(1);
    CHECK(g == gstar_graph());
    CHECK(g.n() == 20);
    CHECK(omega(g) == 7);
    CHECK(chi_exact(g).chi == 10);
    CHECK(alpha(g) == 2);
    CHECK(in_class(g));

    auto h = gen_gstar(2);
    CHECK(h.n() == 40);
    CHECK(omega(h) == 14);
    CHECK(alpha(h) == 2);
    auto r = color(h);
    CHECK(check_proper(h, r.colors));
    CHECK(r.count <= 21);

    CHECK_THROWS_AS(gen_gstar(0), GraphError);
    CHECK_THROWS_AS(gen_gstar(7), ResourceError);
}

TEST_CASE("gen_gstar stays in the class and hits ratio 10/7 for k up to 3")
{
    for (int k = 1; k <= 3; ++k) {
        auto g = gen_gstar(k);
        CAPTURE(k);
        CHECK(in_class(g));
        CHECK(! contains(g, Pattern{PatternKind::k_wheel, 4}));
        CHECK(alpha(g) == 2);
        CHECK(omega(g) == 7 * k);
        // no stable triple, so chi >= n / 2 = 10k; a colouring with 10k colours pins it
        auto r = color(g);
        CHECK(check_proper(g, r.colors));
        CHECK(r.count == 10 * k);
        CHECK(r.count * 7 == omega(g) * 10);
    }
}

TEST_CASE("gen_hstar_blowup examples")
{
    CHECK(gen_hstar_blowup(vector<int>(9, 1)) == hstar_graph());
    CHECK(gen_hstar_blowup(vector<int>(9, 1)).n() == 9);

    auto c = gen_hstar_blowup({1, 1, 1, 1, 1, 1, 1, 0, 0});
    CHECK(isomorphic(c, c7_complement()));

    auto big = gen_hstar_blowup(vector<int>(9, 2));
    CHECK(big.n() == 18);
    CHECK(in_class(big));
    CHECK(omega(big) == 2 * omega(hstar_graph()));

    CHECK_THROWS_AS(gen_hstar_blowup({1, 1, 1}), GraphError);
    CHECK_THROWS_AS(gen_hstar_blowup({1, 1, 1, 1, 1, 1, 0, 1, 1}), GraphError);
    CHECK_THROWS_AS(gen_hstar_blowup(vector<int>(9, 20)), ResourceError);
}

TEST_CASE("gen_random_in_class draws only class members and is deterministic")
{
    CHECK(in_class(cycle_graph(5)));
    CHECK(! in_class(path_graph(5)));
    for (bool structured : {false, true})
        for (int n : {5, 7, 9})
            for (std::uint64_t seed = 0; seed < 6; ++seed) {
                CAPTURE(structured);
                CAPTURE(n);
                CAPTURE(seed);
                auto d = gen_random_in_class(n, 0.6, seed, structured);
                REQUIRE(d);
                CHECK(d->graph.n() == n);
                CHECK(is_in_class_oracle(d->graph));
                auto again = gen_random_in_class(n, 0.6, seed, structured);
                CHECK(again->graph == d->graph);
                CHECK(again->source == d->source);
                CHECK(d->source.starts_with(structured ? "blowup:" : "er"));
            }
    auto a = gen_random_in_class(12, 0.3, 1, true);
    auto b = gen_random_in_class(12, 0.3, 2, true);
    CHECK(a->graph != b->graph);
}

TEST_CASE("5-wheel blowups: clique parts of size at most 2 stay in the class, a stable pair does not")
{
    std::mt19937_64 rng{5};
    std::uniform_int_distribution<int> size{1, 2};
    for (int t = 0; t < 40; ++t) {
        vector<int> sizes;
        for (int v = 0; v < 6; ++v)
            sizes.push_back(size(rng));
        auto g = clique_blowup(wheel_graph(5), sizes).graph;
        CHECK(in_class(g));
        if (g.n() <= 9)
            CHECK(is_in_class_oracle(g));
    }
    // a stable pair in any part closes a C4 through two rim vertices, and a common neighbour hubs it
    for (int v = 0; v < 6; ++v) {
        BlowupSpec spec{wheel_graph(5), vector<Graph>(6, complete_graph(1))};
        spec.parts[v] = Graph{2};
        auto g = blowup(spec).graph;
        CAPTURE(v);
        CHECK(! in_class(g));
        CHECK(oracle::contains_induced(g, wheel_graph(4)));
    }
}

TEST_CASE("enumerate_small counts")
{
    auto count = [](int n, bool connected, bool cls) { return enumerate_small(n, connected, cls, [](const Graph &) {}); };
    CHECK(count(3, false, false) == 8);
    CHECK(count(4, false, false) == 64);
    CHECK(count(4, true, false) == 38);
    // frozen from an independent enumeration that tests every 5-subset for P5 and the 4-wheel
    CHECK(count(5, false, true) == 949);
    CHECK(count(5, true, true) == 653);
    CHECK(count(6, false, true) == 22688);
    CHECK(count(6, true, true) == 17074);
    CHECK_THROWS_AS(count(8, false, false), ResourceError);

    std::uint64_t seen = 0;
    enumerate_small(4, false, false, [&](const Graph & g) {
        CHECK(g == graph_from_mask(4, seen));
        ++seen;
    });
    CHECK(seen == 64);
}

TEST_CASE("DIMACS round trip is bit-exact")
{
    for (auto & g : {gstar_graph(), cycle_graph(5), Graph{3}, Graph{0}, hstar_graph()}) {
        auto text = dimacs(g);
        auto back = parse_dimacs(text);
        CHECK(back == g);
        CHECK(dimacs(back) == text);
    }
    CHECK(dimacs(cycle_graph(3)) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    auto g = parse_dimacs("c a triangle\n\np edge 3 2\ne 1 2\nc between\ne 3 2\n");
    CHECK(g == Graph::from_edges(3, {{0, 1}, {1, 2}}));
    CHECK(parse_dimacs("p col 2 1\ne 1 2\n").edge_count() == 1);
}

TEST_CASE("DIMACS errors")
{
    CHECK_THROWS_AS(parse_dimacs(""), GraphError);
    CHECK_THROWS_AS(parse_dimacs("e 1 2\np edge 2 1\n"), GraphError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2\n"), GraphError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\ne 1 2\n"), GraphError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), GraphError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\n"), GraphError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 2 3\n"), GraphError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nx 1 2\n"), GraphError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\np edge 2 1\ne 1 2\n"), GraphError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"), GraphError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), GraphError);
    try {
        parse_dimacs("c ok\np edge 2 1\ne 1 9\n");
    }
    catch (const GraphError & e) {
        CHECK(std::string{e.what()}.find("line 3") != std::string::npos);
    }
}

TEST_CASE("edge list round trip and errors")
{
    for (auto & g : {gstar_graph(), cycle_graph(5), Graph{4}, Graph{0}}) {
        auto text = edge_list(g);
        auto back = parse_edge_list(text);
        CHECK(back == g);
        CHECK(edge_list(back) == text);
    }
    CHECK(edge_list(path_graph(3)) == "3\n0 1\n1 2\n");
    CHECK_THROWS_AS(parse_edge_list(""), GraphError);
    CHECK_THROWS_AS(parse_edge_list("-1\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1\n2\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), GraphError);
}

TEST_CASE("graph files by extension")
{
    auto dir = std::filesystem::temp_directory_path() / "p5w4_test_harness";
    std::filesystem::create_directories(dir);
    auto g = hstar_graph();
    for (auto ext : {".col", ".json", ".txt"}) {
        auto path = (dir / (std::string{"h"} + ext)).string();
        write_graph_file(path, g);
        CHECK(read_graph_file(path) == g);
    }
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(read_graph_file((dir / "missing.col").string()), GraphError);
}

TEST_CASE("make_instance caches invariants")
{
    auto r = make_instance(cycle_graph(5), "c5", 16);
    CHECK(r.n == 5);
    CHECK(r.m == 5);
    CHECK(r.omega == 2);
    CHECK(r.chi == 3);
    CHECK(r.in_class);
    auto big = make_instance(gen_gstar(2), "gstar k=2", 16);
    CHECK(! big.chi);
    CHECK(big.omega == 14);
    CHECK(! make_instance(path_graph(5), "p5").in_class);
}

TEST_CASE("verification sweeps")
{
    vector<InstanceRecord> instances;
    for (int k = 1; k <= 2; ++k)
        instances.push_back(make_instance(gen_gstar(k), "gstar k=" + std::to_string(k)));
    instances.push_back(make_instance(hstar_graph(), "hstar"));
    instances.push_back(make_instance(wheel_graph(5), "five wheel"));
    instances.push_back(make_instance(c7_complement(), "c7 complement"));

    auto t1 = verify_theorem1(instances);
    CHECK(t1.checked == instances.size());
    CHECK(t1.failures() == 0);
    CHECK(t1.exact_checks == 3);

    auto tri = verify_trichotomy(instances);
    CHECK(tri.failures() == 0);
    CHECK(tri.atoms > 0);
    CHECK(tri.fallback_checks > 0);

    auto props = verify_propositions(instances);
    CHECK(props.failures() == 0);
    CHECK(props.c5_atoms > 0);
    CHECK(! props.proposition_hits.empty());

    // negative control: a P5 slipped into the corpus is skipped, not failed
    instances.push_back(make_instance(path_graph(5), "injected p5"));
    auto with_p5 = verify_theorem1(instances);
    CHECK(with_p5.instances == instances.size());
    CHECK(with_p5.skipped_membership == 1);
    CHECK(with_p5.failures() == 0);
}

TEST_CASE("verifier on small exhaustive input")
{
    Verifier v;
    std::uint64_t fed = enumerate_small(6, true, false, [&](const Graph & g) { v.add(g, "n=6"); });
    auto & r = v.report();
    CHECK(r.instances == fed);
    CHECK(r.checked == 17074);
    CHECK(r.skipped_membership == fed - 17074);
    CHECK(r.failures() == 0);
    CHECK(r.decomposition_checks == 17074);
    CHECK(r.fixtures.empty());
}

TEST_CASE("random sweep is reproducible")
{
    Verifier a, b;
    CHECK(random_sweep(a, 60, 8, 12, 3) == 0);
    random_sweep(b, 60, 8, 12, 3);
    CHECK(a.report().checked == 60);
    CHECK(a.report().failures() == 0);
    CHECK(nlohmann::json(a.report()) == nlohmann::json(b.report()));
    CHECK_THROWS_AS(random_sweep(a, 1, 9, 8, 0), GraphError);
}

TEST_CASE("fallback callback sees both certificates")
{
    Verifier v;
    int seen = 0;
    v.on_fallback = [&](const Graph & h, const NiceCertificate & built, const NiceCertificate & found) {
        ++seen;
        CHECK(verify_nice(h, built).valid());
        CHECK(verify_nice(h, found).valid());
    };
    v.add(wheel_graph(5), "five wheel");
    v.add(c7_complement(), "c7 complement");
    CHECK(seen == 2);
}

TEST_CASE("rerun_fixture")
{
    nlohmann::json clean = {{"provenance", "c5"}, {"clause", "none"}, {"graph", cycle_graph(5)}};
    CHECK(rerun_fixture(clean).empty());
    nlohmann::json outside = {{"provenance", "p5"}, {"clause", "none"}, {"graph", path_graph(5)}};
    CHECK(rerun_fixture(outside).empty());
    auto round = nlohmann::json::parse(clean.dump());
    CHECK(round.at("graph").get<Graph>() == cycle_graph(5));
}

TEST_CASE("exhaustive clique cutset check agrees with the decomposition and the oracle")
{
    std::mt19937_64 rng{11};
    std::uniform_int_distribution<std::uint64_t> mask{0, (std::uint64_t{1} << 28) - 1};
    for (int t = 0; t < 300; ++t) {
        auto g = graph_from_mask(8, mask(rng));
        bool exhaustive = has_clique_cutset_exhaustive(g);
        CHECK(exhaustive == oracle::has_clique_cutset(g));
        if (is_connected(g))
            CHECK(exhaustive == find_clique_cutset(g).has_value());
    }
    CHECK(! has_clique_cutset_exhaustive(cycle_graph(5)));
    CHECK(has_clique_cutset_exhaustive(path_graph(3)));
    CHECK_THROWS_AS(has_clique_cutset_exhaustive(Graph{21}), ResourceError);
}
