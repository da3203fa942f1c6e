#include <p5w4/errors.hpp>
#include <p5w4/nice.hpp>

#include "oracle.hpp"
#include "sample.hpp"

#include <doctest.h>

#include <optional>
#include <random>

using namespace p5w4;
using std::optional;
using std::vector;

namespace
{
    auto mask(const VertexSet & s) -> std::uint64_t
    {
        std::uint64_t m = 0;
        s.for_each([&](int v) { m |= std::uint64_t{1} << v; });
        return m;
    }

    // the nice condition, checked with subset enumeration only
    auto oracle_nice(const Graph & g, const NiceCertificate & c) -> bool
    {
        auto a = mask(c.s1), b = mask(c.s2), d = mask(c.s3);
        if ((a & b) || (a & d) || (b & d))
            return false;
        for (auto s : {a, b, d})
            if (! oracle::subset_is_stable(g, s))
                return false;
        std::uint64_t all = (std::uint64_t{1} << g.n()) - 1;
        int w = oracle::omega(g);
        if (oracle::omega(g, all & ~(a | b | d)) > w - 2)
            return false;
        for (std::uint64_t m = all;; m = (m - 1) & all) {
            if (__builtin_popcountll(m) == w && oracle::subset_is_clique(g, m) && __builtin_popcountll(m & (a | b | d)) < 2)
                return false;
            if (m == 0)
                break;
        }
        return true;
    }

    auto nice_of(const NiceOrQuasiLine & r) -> NiceCertificate
    {
        REQUIRE(std::holds_alternative<NiceCertificate>(r));
        return std::get<NiceCertificate>(r);
    }

    auto rim_of(const vector<int> & v) -> std::array<int, 5>
    {
        return {v[0], v[1], v[2], v[3], v[4]};
    }

    auto wheel_cert(const Graph & g, CaseRecord * rec = nullptr) -> NiceCertificate
    {
        auto w5 = find_induced(g, Pattern{PatternKind::five_wheel});
        REQUIRE(w5);
        auto s = build_c5_structure(g, rim_of(*w5));
        auto w = build_wheel_workspace(g, s);
        auto c = certify_5wheel_case(g, s, w);
        if (rec)
            *rec = w.record;
        return c;
    }

    auto wheelfree_result(const Graph & g, CaseRecord * rec = nullptr) -> NiceOrQuasiLine
    {
        auto c5 = find_induced(g, Pattern{PatternKind::c5});
        REQUIRE(c5);
        auto s = build_c5_structure(g, rim_of(*c5));
        auto w = build_wheelfree_workspace(g, s);
        auto r = certify_wheelfree_c5_case(g, s, w);
        if (rec)
            *rec = w.record;
        return r;
    }

    auto grotzsch() -> Graph
    {
        // Mycielskian of C5: ω 2, χ 4
        vector<std::pair<int, int>> e;
        for (int i = 0; i < 5; ++i) {
            e.push_back({i, (i + 1) % 5});
            e.push_back({5 + i, (i + 1) % 5});
            e.push_back({5 + i, (i + 4) % 5});
            e.push_back({5 + i, 10});
        }
        return Graph::from_edges(11, e);
    }
}

TEST_CASE("verify_nice examples")
{
    auto w5 = wheel_graph(5);
    auto ok = verify_nice(w5, {{0, 2}, {1, 3}, {4}});
    CHECK(ok.valid());
    CHECK(ok.omega_before == 3);
    CHECK(ok.omega_after == 1);

    auto weak = verify_nice(w5, {{0}, {1}, {2}});
    CHECK_FALSE(weak.valid());
    CHECK(weak.omega_after == 3);
    bool names_drop = false;
    for (auto & v : weak.violations)
        names_drop = names_drop || v.find("omega drops") != std::string::npos;
    CHECK(names_drop);

    auto overlap = verify_nice(cycle_graph(5), {{0, 2}, {2, 4}, {1}});
    CHECK_FALSE(overlap.valid());
    CHECK(overlap.violations.front().find("not disjoint") != std::string::npos);

    CHECK_FALSE(verify_nice(cycle_graph(5), {{0, 1}, {2}, {3}}).valid());
}

TEST_CASE("3K1-free case")
{
    auto w5 = wheel_graph(5);
    auto c = nice_of(certify_3k1_case(w5));
    CHECK(c.s1 == VertexSet{0, 2});
    CHECK(c.s2 == VertexSet{1, 3});
    CHECK(c.s3 == VertexSet{4});
    CHECK(oracle_nice(w5, c));

    auto k6 = complete_graph(6);
    auto q = certify_3k1_case(k6);
    REQUIRE(std::holds_alternative<QuasiLineCertificate>(q));
    CHECK(check_quasi_line_witness(k6, std::get<QuasiLineCertificate>(q)));

    auto b = clique_blowup(w5, {2, 2, 2, 2, 2, 2}).graph;
    auto bc = nice_of(certify_3k1_case(b));
    auto v = verify_nice(b, bc);
    CHECK(v.valid());
    CHECK(v.omega_before == 6);
    CHECK(v.omega_after <= 4);
    CHECK(oracle::omega(b) == 6);
    CHECK(oracle_nice(b, bc));

    CHECK_THROWS_AS(certify_3k1_case(cycle_graph(7)), MembershipError);
}

TEST_CASE("5-wheel case")
{
    auto w5 = wheel_graph(5);
    CaseRecord rec;
    auto c = wheel_cert(w5, &rec);
    CHECK(rec.tag == "t_empty");
    CHECK(oracle_nice(w5, c));
    CHECK(verify_nice(w5, c).omega_after == 1);

    auto b = clique_blowup(w5, {2, 2, 2, 2, 2, 2}).graph;
    auto bc = wheel_cert(b);
    CHECK(oracle_nice(b, bc));
    auto v = verify_nice(b, bc);
    CHECK(v.omega_before == 6);
    CHECK(v.omega_after <= 4);
}

TEST_CASE("5-wheel case with a T-clique of two vertices")
{
    // rim 0..4, hub 5, x 6 in X_5, T = {7, 8} hanging off the hub and x
    auto g = Graph::from_edges(9, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 5},
                                   {4, 5}, {4, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}});
    REQUIRE(in_class(g));
    REQUIRE(sample::is_atom(g));
    auto s = build_c5_structure(g, {0, 1, 2, 3, 4});
    CHECK(s.t == VertexSet{7, 8});
    auto w = build_wheel_workspace(g, s);
    CHECK(w.l == VertexSet{7});
    CHECK(w.l2 == VertexSet{8});
    auto c = certify_5wheel_case(g, s, w);
    CHECK(w.record.tag == "no_x_triple");
    CHECK(w.record.rejected.empty());
    CHECK(c.all().contains(7));
    CHECK(c.all().contains(8));
    CHECK(oracle_nice(g, c));
}

TEST_CASE("wheel-free C5 case")
{
    auto c5 = cycle_graph(5);
    CaseRecord rec;
    auto c = nice_of(wheelfree_result(c5, &rec));
    CHECK(rec.tag == "empty_xy");
    CHECK(c.s1 == VertexSet{0, 2});
    CHECK(c.s2 == VertexSet{1, 3});
    CHECK(c.s3 == VertexSet{4});
    CHECK(verify_nice(c5, c).omega_after == 0);

    auto plus = sample::extend(c5, {0, 2, 3});
    REQUIRE(in_class(plus));
    auto pc = nice_of(wheelfree_result(plus));
    CHECK(oracle_nice(plus, pc));

    auto b = clique_blowup(c5, {2, 2, 2, 2, 2}).graph;
    auto bc = nice_of(wheelfree_result(b));
    CHECK(oracle_nice(b, bc));
    auto v = verify_nice(b, bc);
    CHECK(v.omega_before == 4);
    CHECK(v.omega_after <= 2);

    CHECK_THROWS_AS(wheelfree_result(wheel_graph(5)), MembershipError);
}

TEST_CASE("C7 complement case")
{
    auto g = complement(cycle_graph(7));
    auto w = build_c7_structure(g);
    CHECK(w.d.empty());
    CHECK(w.parts[7].empty());
    CHECK(w.parts[8].empty());
    auto c = certify_c7c_case(g, w);
    CHECK(oracle::omega(g) == 3);
    CHECK(verify_nice(g, c).omega_after <= 1);
    CHECK(oracle_nice(g, c));

    auto h = hstar_graph();
    CHECK(oracle::omega(h) == 3);
    auto hw = build_c7_structure(h);
    for (auto & p : hw.parts)
        CHECK(p.size() == 1);
    CHECK(oracle_nice(h, certify_c7c_case(h, hw)));
}

TEST_CASE("C7 complement case on an H* blowup replays to the input")
{
    auto g = clique_blowup(hstar_graph(), vector<int>(9, 2)).graph;
    auto w = build_c7_structure(g);
    auto c = certify_c7c_case(g, w);
    CHECK(verify_nice(g, c).valid());
    CHECK(oracle_nice(g, c));

    BlowupSpec spec{hstar_graph(), {}};
    vector<int> order;
    for (auto & p : w.parts) {
        spec.parts.push_back(induced_subgraph(g, p).graph);
        p.for_each([&](int v) { order.push_back(v); });
    }
    auto r = blowup(spec).graph;
    REQUIRE(r.n() == g.n());
    for (int a = 0; a < r.n(); ++a)
        for (int b = a + 1; b < r.n(); ++b)
            CHECK(r.adjacent(a, b) == g.adjacent(order[a], order[b]));
}

TEST_CASE("fallback search")
{
    auto c5 = nice_search_fallback(cycle_graph(5));
    REQUIRE(c5);
    CHECK(oracle_nice(cycle_graph(5), *c5));

    auto k3 = nice_search_fallback(complete_graph(3));
    REQUIRE(k3);
    CHECK(oracle_nice(complete_graph(3), *k3));

    // ω 2 and not 3-colourable, so no three stable sets can cover it
    auto gr = grotzsch();
    REQUIRE(oracle::omega(gr) == 2);
    REQUIRE_FALSE(oracle::colourable(gr, 3));
    CHECK_FALSE(nice_search_fallback(gr));

    CHECK_FALSE(nice_search_fallback(complete_graph(1)));
    CHECK_THROWS_AS(nice_search_fallback(Graph::from_edges(17, {})), ResourceError);
}

TEST_CASE("random atoms: constructions verify and agree with the fallback")
{
    std::mt19937_64 rng{20260101};
    vector<Graph> seeds{cycle_graph(5), wheel_graph(5), hstar_graph(), complement(cycle_graph(7)),
                        clique_blowup(cycle_graph(5), {2, 1, 2, 1, 1}).graph};
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        auto g = sample::grow_in_class(seeds[t % seeds.size()], 8 + t % 5, rng, 60);
        if (! sample::is_atom(g))
            continue;
        optional<NiceOrQuasiLine> r;
        CaseRecord rec;
        if (contains(g, Pattern{PatternKind::five_wheel}))
            r = wheel_cert(g, &rec);
        else if (contains(g, Pattern{PatternKind::c5}))
            r = wheelfree_result(g, &rec);
        else if (contains(g, Pattern{PatternKind::c7_complement}))
            r = certify_c7c_case(g, build_c7_structure(g));
        if (! r)
            continue;
        CAPTURE(g.n());
        CHECK(rec.rejected.empty());
        if (auto * c = std::get_if<NiceCertificate>(&*r)) {
            CHECK(oracle_nice(g, *c));
            auto f = nice_search_fallback(g);
            REQUIRE(f);
            CHECK(verify_nice(g, *f).valid());
        }
        else
            CHECK(check_quasi_line_witness(g, std::get<QuasiLineCertificate>(*r)));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("case probe: every applicable construction verifies, shadowed ones included")
{
    // W_1 is empty here under some maps whose two-sided meeting condition fails; the general
    // X construction must not apply under those
    auto g = Graph::from_edges(
        15, {{0, 4},   {0, 6},   {0, 7},   {0, 9},   {0, 13},  {1, 3},   {1, 6},   {1, 8},   {1, 11},  {1, 12},
             {1, 13},  {2, 4},   {2, 5},   {2, 7},   {2, 9},   {2, 10},  {2, 13},  {2, 14},  {3, 4},   {3, 7},
             {3, 8},   {3, 9},   {3, 10},  {3, 11},  {3, 12},  {3, 13},  {3, 14},  {4, 5},   {4, 6},   {4, 7},
             {4, 9},   {4, 11},  {4, 12},  {5, 7},   {5, 9},   {5, 10},  {5, 13},  {5, 14},  {6, 7},   {6, 8},
             {6, 9},   {6, 10},  {6, 14},  {7, 9},   {7, 11},  {7, 12},  {8, 11},  {8, 12},  {8, 13},  {9, 11},
             {9, 12},  {10, 11}, {10, 12}, {10, 14}, {11, 12}, {11, 13}, {11, 14}, {12, 13}, {12, 14}});
    REQUIRE(in_class(g));
    REQUIRE(sample::is_atom(g));
    REQUIRE(! contains(g, Pattern{PatternKind::five_wheel}));

    CaseProbe probe;
    CHECK(set_case_probe(&probe) == nullptr);
    CaseRecord rec;
    auto c = nice_of(wheelfree_result(g, &rec));
    CHECK(oracle_nice(g, c));
    CHECK(rec.tag == "x_general");
    CHECK(rec.rejected.empty());

    std::mt19937_64 rng{77};
    vector<Graph> seeds{cycle_graph(5), wheel_graph(5), clique_blowup(cycle_graph(5), {2, 1, 2, 1, 1}).graph};
    for (int t = 0; t < 300; ++t) {
        auto h = sample::grow_in_class(seeds[t % seeds.size()], 9 + t % 5, rng, 60);
        if (! sample::is_atom(h))
            continue;
        if (contains(h, Pattern{PatternKind::five_wheel}))
            wheel_cert(h);
        else
            wheelfree_result(h);
    }
    CHECK(set_case_probe(nullptr) == &probe);
    CHECK(probe.counts.at("x_general").applied > 0);
    for (auto & [tag, n] : probe.counts) {
        CAPTURE(tag);
        CHECK(n.applied == n.valid);
    }
    CHECK(probe.invalid.empty());
}
