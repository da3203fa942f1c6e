#include <p5w4/errors.hpp>
#include <p5w4/json.hpp>
#include <p5w4/nice.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <utility>

using std::optional;
using std::string;
using std::vector;

namespace p5w4
{
    namespace
    {
        CaseProbe * installed_probe = nullptr;
    }

    auto set_case_probe(CaseProbe * p) -> CaseProbe *
    {
        return std::exchange(installed_probe, p);
    }

    auto case_probe() -> CaseProbe *
    {
        return installed_probe;
    }

    auto verify_nice(const Graph & g, const NiceCertificate & c) -> NiceVerdict
    {
        NiceVerdict v;
        auto say = [&](const string & s) { v.violations.push_back(s); };
        std::pair<const char *, const VertexSet *> sets[] = {{"S1", &c.s1}, {"S2", &c.s2}, {"S3", &c.s3}};
        for (auto [name, s] : sets)
            if (! s->subset_of(g.vertices()))
                say(string{name} + " has vertices outside the graph");
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (auto both = *sets[i].second & *sets[j].second; ! both.empty())
                    say(string{"not disjoint: "} + sets[i].first + " and " + sets[j].first + " share " + both.to_string());
        for (auto [name, s] : sets)
            for (int u = s->first(); u >= 0; u = s->next(u))
                if (auto e = g.neighbors(u) & *s; ! e.empty() && e.first() > u) {
                    say(string{name} + " not stable: edge " + std::to_string(u) + "-" + std::to_string(e.first()));
                    break;
                }
        VertexSet all = c.all();
        v.omega_before = omega(g);
        auto rest = g.vertices() - all;
        v.omega_after = omega_of(g, rest);
        if (v.omega_after > v.omega_before - 2)
            say("omega drops from " + std::to_string(v.omega_before) + " only to " + std::to_string(v.omega_after) +
                ": clique " + max_clique(g, rest).to_string() + " survives");
        for (auto & m : max_cliques(g)) {
            int hits = (m & all).size();
            v.max_clique_hits.push_back(hits);
            if (hits < 2)
                say("maximum clique " + m.to_string() + " met " + std::to_string(hits) + " times");
        }
        return v;
    }

    auto nice_search_fallback(const Graph & g) -> optional<NiceCertificate>
    {
        int n = g.n();
        if (n > limits().fallback_cap)
            throw ResourceError{"nice search fallback capped at " + std::to_string(limits().fallback_cap) + " vertices"};
        int w = omega(g);
        // clique number of every subset, by the least vertex: in or out
        vector<unsigned char> om(size_t{1} << n, 0);
        vector<unsigned> nbr(n, 0);
        for (int v = 0; v < n; ++v)
            g.neighbors(v).for_each([&](int u) { nbr[v] |= 1u << u; });
        for (unsigned s = 1; s < om.size(); ++s) {
            int v = std::countr_zero(s);
            unsigned rest = s & (s - 1);
            om[s] = std::max<int>(om[rest], 1 + om[rest & nbr[v]]);
        }
        vector<unsigned> stable;
        for (auto & m : maximal_cliques(complement(g))) {
            unsigned b = 0;
            m.for_each([&](int u) { b |= 1u << u; });
            stable.push_back(b);
        }
        unsigned full = (n == 0) ? 0 : unsigned((size_t{1} << n) - 1);
        size_t k = stable.size();
        for (size_t a = 0; a < k; ++a)
            for (size_t b = a; b < k; ++b)
                for (size_t c = b; c < k; ++c) {
                    unsigned u = stable[a] | stable[b] | stable[c];
                    if (om[full & ~u] > w - 2)
                        continue;
                    auto to_set = [](unsigned x) {
                        VertexSet s;
                        for (; x; x &= x - 1)
                            s.insert(std::countr_zero(x));
                        return s;
                    };
                    NiceCertificate r;
                    r.s1 = to_set(stable[a]);
                    r.s2 = to_set(stable[b] & ~stable[a]);
                    r.s3 = to_set(stable[c] & ~stable[a] & ~stable[b]);
                    return r;
                }
        return std::nullopt;
    }

    auto certify_3k1_case(const Graph & g) -> NiceOrQuasiLine
    {
        if (auto t = find_induced(g, Pattern{PatternKind::three_k1}))
            throw MembershipError{"triad " + VertexSet::from_vector(*t).to_string()};
        if (auto t = find_induced(g, Pattern{PatternKind::four_wheel}))
            throw MembershipError{"4-wheel " + VertexSet::from_vector(*t).to_string()};
        if (auto q = quasi_line_witness(g))
            return *q;

        // a clique-blowup of the 5-wheel: its parts are the true-twin classes
        std::map<VertexSet, VertexSet> by_closed;
        for (int v = 0; v < g.n(); ++v) {
            auto closed = g.neighbors(v);
            closed.insert(v);
            by_closed[closed].insert(v);
        }
        vector<VertexSet> classes;
        for (auto & [closed, members] : by_closed)
            classes.push_back(members);
        std::sort(classes.begin(), classes.end(), [](auto & x, auto & y) { return x.first() < y.first(); });
        GraphBuilder qb{int(classes.size())};
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i + 1; j < classes.size(); ++j)
                if (g.adjacent(classes[i].first(), classes[j].first()))
                    qb.add_edge(int(i), int(j));
        auto quotient = std::move(qb).build();
        optional<vector<int>> emb;
        if (quotient.n() == 6)
            emb = find_induced(quotient, wheel_graph(5));
        if (! emb)
            throw BugTrap{"3K1-free graph is neither quasi-line nor a 5-wheel blowup", {{"graph", g}, {"classes", classes}}};
        auto q = [&](int k) { return VertexSet{classes[(*emb)[k]].first()}; };
        NiceCertificate c{q(0) | q(2), q(1) | q(3), q(4)};
        if (auto v = verify_nice(g, c); ! v.valid())
            throw BugTrap{"5-wheel blowup certificate failed verification", {{"graph", g}, {"certificate", c}, {"verdict", v}}};
        return c;
    }

    auto to_json(nlohmann::json & j, const NiceCertificate & c) -> void
    {
        j = {{"s1", c.s1}, {"s2", c.s2}, {"s3", c.s3}};
    }

    auto from_json(const nlohmann::json & j, NiceCertificate & c) -> void
    {
        j.at("s1").get_to(c.s1);
        j.at("s2").get_to(c.s2);
        j.at("s3").get_to(c.s3);
    }

    auto to_json(nlohmann::json & j, const NiceVerdict & v) -> void
    {
        j = {{"valid", v.valid()},
             {"omega_before", v.omega_before},
             {"omega_after", v.omega_after},
             {"max_clique_hits", v.max_clique_hits},
             {"violations", v.violations}};
    }

    auto to_json(nlohmann::json & j, const QuasiLineCertificate & q) -> void
    {
        j = nlohmann::json::array();
        for (auto & [a, b] : q.cliques)
            j.push_back({a, b});
    }

    auto to_json(nlohmann::json & j, const Relabel & r) -> void
    {
        j = {{"rotation", r.rotation}, {"reflected", r.reflected}};
    }

    auto to_json(nlohmann::json & j, const CaseRecord & r) -> void
    {
        auto rejected = nlohmann::json::array();
        for (auto & a : r.rejected)
            rejected.push_back({{"tag", a.tag}, {"map", a.map}, {"violations", a.violations}});
        j = {{"tag", r.tag}, {"map", r.map}, {"rejected", rejected}};
    }

    namespace
    {
        auto w_json(const std::array<WFamily, 5> & w) -> nlohmann::json
        {
            auto j = nlohmann::json::array();
            for (auto & f : w) {
                auto e = nlohmann::json::array();
                for (auto & [k, q] : f)
                    e.push_back({{"x_clique", k}, {"a_clique", q}});
                j.push_back(e);
            }
            return j;
        }
    }

    auto to_json(nlohmann::json & j, const WheelCaseWorkspace & w) -> void
    {
        j = {{"a_star", w.a_star},
             {"t_cliques", w.t_cliques},
             {"l", w.l},
             {"l_prime", w.l2},
             {"w", w_json(w.w)},
             {"omega", w.omega},
             {"case", w.record}};
    }

    auto to_json(nlohmann::json & j, const WheelFreeWorkspace & w) -> void
    {
        auto b = nlohmann::json::array();
        for (auto & x : w.b)
            b.push_back(x ? nlohmann::json(*x) : nlohmann::json(nullptr));
        j = {{"b", b},
             {"aa", w.aa},
             {"t_cliques", w.t_cliques},
             {"l", w.l},
             {"l_prime", w.l2},
             {"w", w_json(w.w)},
             {"j", w.j},
             {"omega", w.omega},
             {"case", w.record}};
    }
}
