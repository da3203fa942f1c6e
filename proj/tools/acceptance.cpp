#include <p5w4/harness.hpp>
#include <p5w4/json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace p5w4;
using std::string;
using std::vector;

namespace
{
    using Clock = std::chrono::steady_clock;

    auto seconds_since(Clock::time_point t) -> double
    {
        return std::chrono::duration<double>(Clock::now() - t).count();
    }

    int failed = 0;

    auto verdict(int criterion, bool pass, const string & detail) -> void
    {
        std::cout << "criterion " << criterion << ' ' << (pass ? "PASS" : "FAIL") << ": " << detail << std::endl;
        if (! pass)
            ++failed;
    }

    auto fixtures_of(const VerificationReport & r) -> void
    {
        for (auto & f : r.fixtures)
            std::cout << "  fixture " << f.dump() << '\n';
    }

    // ---- criterion 8: brute-force induced subgraph test

    // bit of the pair (a, b), a < b, among k vertices in the order (0,1), (0,2), .., (1,2), ..
    auto pair_bit(int k, int a, int b) -> int
    {
        return a * k - a * (a + 1) / 2 + (b - a - 1);
    }

    // every labeled copy of h on the vertices 0..k-1, as edge masks
    auto copies(const Graph & h) -> vector<bool>
    {
        int k = h.n();
        vector<bool> out(std::size_t{1} << (k * (k - 1) / 2));
        vector<int> pos(k);
        std::iota(pos.begin(), pos.end(), 0);
        do {
            std::uint32_t m = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (h.adjacent(i, j))
                        m |= std::uint32_t{1} << pair_bit(k, std::min(pos[i], pos[j]), std::max(pos[i], pos[j]));
            out[m] = true;
        } while (std::next_permutation(pos.begin(), pos.end()));
        return out;
    }

    struct BrutePattern
    {
        Pattern pattern;
        // copy tables per pattern size; several sizes for odd holes and antiholes
        vector<std::pair<int, vector<bool>>> tables;
    };

    auto brute_patterns() -> vector<BrutePattern>
    {
        using K = PatternKind;
        vector<Pattern> ps{{K::p3},         {K::p4},           {K::p5},           {K::c4},           {K::c5},
                           {K::c6},         {K::c7},           {K::two_k2},       {K::three_k1},     {K::four_wheel},
                           {K::five_wheel}, Pattern::k_wheel(3), Pattern::k_wheel(4), Pattern::k_wheel(5),
                           Pattern::k_wheel(6), {K::c7_complement}, Pattern::odd_hole(5), Pattern::odd_hole(7),
                           Pattern::odd_antihole(5), Pattern::odd_antihole(7)};
        vector<BrutePattern> out;
        for (auto & p : ps) {
            BrutePattern b{p, {}};
            if (p.kind == K::odd_hole || p.kind == K::odd_antihole) {
                for (int len = std::max(5, p.param | 1); len <= 7; len += 2)
                    b.tables.push_back({len, copies(pattern_graph(p, len))});
            }
            else {
                auto h = pattern_graph(p);
                b.tables.push_back({h.n(), copies(h)});
            }
            out.push_back(std::move(b));
        }
        return out;
    }

    auto witness_ok(const Graph & g, const Pattern & p, const vector<int> & w) -> bool
    {
        bool odd = p.kind == PatternKind::odd_hole || p.kind == PatternKind::odd_antihole;
        if (odd && (w.size() % 2 == 0 || int(w.size()) < std::max(5, p.param)))
            return false;
        auto h = odd ? pattern_graph(p, int(w.size())) : pattern_graph(p);
        if (int(w.size()) != h.n())
            return false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] < 0 || w[i] >= g.n())
                return false;
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[i] == w[j] || g.adjacent(w[i], w[j]) != h.adjacent(int(i), int(j)))
                    return false;
        }
        return true;
    }

    auto criterion8() -> void
    {
        auto start = Clock::now();
        auto patterns = brute_patterns();
        std::uint64_t graphs = 0, disagreements = 0, bad_witnesses = 0;
        string first;
        for (int n = 0; n <= 7; ++n) {
            int pairs = n * (n - 1) / 2;
            // induced edge mask of every vertex subset, relabeled in increasing order
            vector<std::uint32_t> sub(std::size_t{1} << n);
            vector<int> vs;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
                auto g = graph_from_mask(n, m);
                ++graphs;
                for (std::uint32_t s = 0; s < sub.size(); ++s) {
                    vs.clear();
                    for (int v = 0; v < n; ++v)
                        if (s >> v & 1)
                            vs.push_back(v);
                    int k = int(vs.size());
                    std::uint32_t e = 0;
                    for (int a = 0; a < k; ++a)
                        for (int b = a + 1; b < k; ++b)
                            if (g.adjacent(vs[a], vs[b]))
                                e |= std::uint32_t{1} << pair_bit(k, a, b);
                    sub[s] = e;
                }
                for (auto & bp : patterns) {
                    bool brute = false;
                    for (auto & [k, table] : bp.tables)
                        for (std::uint32_t s = 0; s < sub.size() && ! brute; ++s)
                            if (std::popcount(s) == k && table[sub[s]])
                                brute = true;
                    auto hit = find_induced(g, bp.pattern);
                    if (hit.has_value() != brute) {
                        if (! disagreements++)
                            first = bp.pattern.name() + " on " + nlohmann::json(g).dump();
                    }
                    else if (hit && ! witness_ok(g, bp.pattern, *hit))
                        ++bad_witnesses;
                }
            }
        }
        std::ostringstream d;
        d << std::fixed << std::setprecision(2);
        d << graphs << " graphs on n <= 7, " << patterns.size() << " patterns, " << disagreements << " disagreements, "
          << bad_witnesses << " bad witnesses, " << seconds_since(start) << " s";
        if (disagreements)
            d << "; first: " << first;
        verdict(8, disagreements == 0 && bad_witnesses == 0, d.str());
    }
}

int main()
{
    // ---- 1: extremal family
    {
        auto start = Clock::now();
        auto g = gen_gstar(1);
        int w = omega(g);
        auto t = Clock::now();
        int chi = chi_exact(g).chi;
        double chi_time = seconds_since(t);
        bool k1 = w == 7 && chi == 10 && chi * 7 == w * 10 && chi_time < 30 && alpha(g) == 2 && in_class(g) &&
                  ! contains(g, Pattern{PatternKind::three_k1}) && ! contains(g, Pattern{PatternKind::four_wheel});
        auto h = gen_gstar(2);
        auto r = color(h);
        int w2 = omega(h);
        bool k2 = w2 == 14 && alpha(h) == 2 && check_proper(h, r.colors) && r.count <= 21;
        std::ostringstream d;
        d << std::fixed << std::setprecision(2);
        d << "k=1: omega " << w << ", chi " << chi << " (chi_exact " << chi_time << " s), alpha " << alpha(g)
          << "; k=2: omega " << w2 << ", alpha " << alpha(h) << ", color uses " << r.count << " ("
          << seconds_since(start) << " s)";
        vector<InstanceRecord> family;
        for (int k = 1; k <= 3; ++k)
            family.push_back(make_instance(gen_gstar(k), "gstar k=" + std::to_string(k)));
        auto rep = verify_theorem1(family);
        d << "; k=1..3 sweep: " << rep.failures() << " failures";
        verdict(1, k1 && k2 && rep.checked == 3 && rep.failures() == 0, d.str());
    }

    // reservoir of nice atoms for criterion 6, filled by both sweeps
    struct Sampled
    {
        Graph graph;
        NiceCertificate built;
        NiceCertificate found;
    };
    vector<Sampled> reservoir;
    std::uint64_t offered = 0;
    std::mt19937_64 pick{20240601};
    auto sample = [&](const Graph & h, const NiceCertificate & built, const NiceCertificate & found) {
        ++offered;
        if (reservoir.size() < 50)
            reservoir.push_back({h, built, found});
        else if (auto j = std::uniform_int_distribution<std::uint64_t>{0, offered - 1}(pick); j < 50)
            reservoir[j] = {h, built, found};
    };

    // every case construction whose hypothesis holds is also built and verified during the sweeps
    CaseProbe probe;
    set_case_probe(&probe);

    // ---- 2: exhaustive sweep
    Verifier exhaustive;
    exhaustive.on_fallback = sample;
    double exhaustive_time;
    std::uint64_t connected_in_class = 0;
    {
        auto start = Clock::now();
        for (int n = 1; n <= 7; ++n)
            enumerate_small(n, true, false, [&](const Graph & g) { exhaustive.add(g, "exhaustive n=" + std::to_string(n)); });
        exhaustive_time = seconds_since(start);
        auto & r = exhaustive.report();
        connected_in_class = r.checked + r.skipped_resource;
        std::ostringstream d;
        d << std::fixed << std::setprecision(2);
        d << r.instances << " connected graphs, " << r.checked << " in class, " << r.exact_checks
          << " exact chi checks, " << r.bound_violations << " bound violations, " << r.bug_traps << " bug traps, "
          << r.skipped_resource << " skipped on caps (" << exhaustive_time << " s)";
        // 575334 connected in-class labeled graphs on 7 vertices, 17074 + 653 + 38 + 4 + 1 + 1 below
        bool pass = r.bound_violations == 0 && r.bug_traps == 0 && r.skipped_resource == 0 &&
                    r.exact_checks == r.checked && connected_in_class == 575334 + 17074 + 653 + 38 + 4 + 1 + 1 &&
                    exhaustive_time < 1800;
        verdict(2, pass, d.str());
        fixtures_of(r);
    }

    // ---- 3: random sweep
    Verifier randomized;
    randomized.on_fallback = sample;
    {
        auto start = Clock::now();
        int replaced = random_sweep(randomized, 10000, 8, 16, 1);
        auto & r = randomized.report();
        std::ostringstream d;
        d << std::fixed << std::setprecision(2);
        d << r.checked << " in-class instances with 8 <= n <= 16, " << r.exact_checks << " exact chi checks, "
          << r.bound_violations << " bound violations, " << r.bug_traps << " bug traps, " << r.skipped_resource
          << " skipped on caps, " << replaced << " draws replaced (" << seconds_since(start) << " s)";
        verdict(3, r.checked >= 10000 && r.bound_violations == 0 && r.bug_traps == 0 && r.skipped_resource == 0, d.str());
        fixtures_of(r);
    }

    set_case_probe(nullptr);
    VerificationReport both = exhaustive.report();
    both.merge(randomized.report(), 20);

    // ---- 4: trichotomy
    {
        std::ostringstream d;
        d << std::fixed << std::setprecision(2);
        d << both.atoms << " atoms, " << both.trichotomy_failures << " contradictions;";
        for (auto & [k, v] : both.atom_tags)
            if (! k.starts_with("case:"))
                d << ' ' << k << ' ' << v;
        std::uint64_t applied = 0, valid = 0;
        for (auto & [tag, c] : probe.counts) {
            applied += c.applied;
            valid += c.valid;
        }
        d << "; " << applied << " applicable case constructions, " << applied - valid << " invalid";
        verdict(4, both.atoms > 0 && both.trichotomy_failures == 0 && both.bug_traps == 0 && applied == valid, d.str());
        std::cout << "  case: selected / hypothesis held / certificate valid\n";
        for (auto & [tag, c] : probe.counts) {
            auto it = both.atom_tags.find("case:" + tag);
            std::cout << "  " << tag << ' ' << (it == both.atom_tags.end() ? 0 : it->second) << " / " << c.applied
                      << " / " << c.valid << '\n';
        }
        for (auto & [tag, g] : probe.invalid)
            std::cout << "  invalid " << tag << ' ' << nlohmann::json(g).dump() << '\n';
    }

    // ---- 5: propositions
    {
        vector<string> missing;
        for (auto & k : proposition_keys())
            if (! both.proposition_hits.count(k))
                missing.push_back(k);
        std::ostringstream d;
        d << std::fixed << std::setprecision(2);
        d << both.c5_atoms << " atoms with a C5, " << both.proposition_failures << " failures, "
          << proposition_keys().size() - missing.size() << "/" << proposition_keys().size()
          << " propositions exercised non-vacuously";
        for (auto & k : missing)
            d << "; never exercised: " << k;
        verdict(5, both.c5_atoms > 0 && both.proposition_failures == 0 && both.bug_traps == 0 && missing.empty(), d.str());
        for (auto & [k, v] : both.proposition_hits)
            std::cout << "  " << k << ' ' << v << '\n';
    }

    // ---- 6: nice certificate oracle agreement
    {
        int agreed = 0;
        for (auto & s : reservoir)
            if (verify_nice(s.graph, s.built).valid() && verify_nice(s.graph, s.found).valid())
                ++agreed;
        std::ostringstream d;
        d << std::fixed << std::setprecision(2);
        d << both.fallback_checks << " nice atoms with n <= 14 searched, " << both.fallback_failures
          << " without a fallback certificate; " << agreed << "/" << reservoir.size()
          << " sampled atoms pass verify_nice with both certificates";
        verdict(6, both.fallback_checks > 0 && both.fallback_failures == 0 && reservoir.size() == 50 && agreed == 50,
                d.str());
    }

    // ---- 7: decomposition soundness
    {
        std::ostringstream d;
        d << std::fixed << std::setprecision(2);
        d << both.decomposition_checks << " components with n <= 9, " << both.decomposition_failures << " failures";
        verdict(7, both.decomposition_checks > 0 && both.decomposition_failures == 0, d.str());
    }

    // ---- 8: recognition
    criterion8();

    std::cout << (failed ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED") << std::endl;
    return failed ? 1 : 0;
}
