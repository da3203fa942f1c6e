#include <p5w4/errors.hpp>
#include <p5w4/harness.hpp>
#include <p5w4/json.hpp>

#include <algorithm>
#include <functional>

using std::string;
using std::vector;

namespace p5w4
{
    namespace
    {
        auto lower(const InducedSubgraph & sub, const NiceCertificate & c) -> NiceCertificate
        {
            return {sub.lower(c.s1), sub.lower(c.s2), sub.lower(c.s3)};
        }

        auto rim_of(const vector<int> & v) -> std::array<int, 5>
        {
            return {v[0], v[1], v[2], v[3], v[4]};
        }

        // up to `cap` induced C5s in cyclic order, starting from `first`; with `hub` each needs a
        // vertex complete to it
        auto rims(const Graph & g, const std::array<int, 5> & first, bool hub, int cap) -> vector<std::array<int, 5>>
        {
            vector<std::array<int, 5>> out{first};
            vector<VertexSet> seen{VertexSet::from_vector({first.begin(), first.end()})};
            vector<int> pick;
            std::function<void(int)> go = [&](int from) {
                if (int(out.size()) >= cap)
                    return;
                if (pick.size() == 5) {
                    auto s = VertexSet::from_vector(pick);
                    for (int v : pick)
                        if ((g.neighbors(v) & s).size() != 2)
                            return;
                    if (std::find(seen.begin(), seen.end(), s) != seen.end())
                        return;
                    if (hub) {
                        auto common = g.vertices();
                        for (int v : pick)
                            common = common & g.neighbors(v);
                        if (common.empty())
                            return;
                    }
                    // degree two on five vertices forces a single cycle
                    std::array<int, 5> c{pick[0]};
                    auto rest = s;
                    rest.erase(pick[0]);
                    for (int k = 1; k < 5; ++k) {
                        c[k] = (g.neighbors(c[k - 1]) & rest).first();
                        rest.erase(c[k]);
                    }
                    seen.push_back(s);
                    out.push_back(c);
                    return;
                }
                for (int v = from; v < g.n(); ++v) {
                    pick.push_back(v);
                    go(v + 1);
                    pick.pop_back();
                }
            };
            go(0);
            return out;
        }

        auto run(const vector<InstanceRecord> & instances, const VerifyOptions & options) -> VerificationReport
        {
            Verifier v{options};
            for (auto & i : instances)
                v.add(i.graph, i.provenance);
            return v.report();
        }
    }

    auto make_instance(Graph g, string provenance, int max_exact_n) -> InstanceRecord
    {
        InstanceRecord r;
        r.graph = std::move(g);
        r.provenance = std::move(provenance);
        r.n = r.graph.n();
        r.m = r.graph.edge_count();
        r.omega = omega(r.graph);
        if (r.n <= max_exact_n)
            r.chi = chi_exact(r.graph).chi;
        r.in_class = in_class(r.graph);
        return r;
    }

    auto VerificationReport::failures() const -> std::uint64_t
    {
        return bound_violations + trichotomy_failures + proposition_failures + fallback_failures + decomposition_failures +
               bug_traps;
    }

    auto VerificationReport::merge(const VerificationReport & o, int max_fixtures) -> void
    {
        instances += o.instances;
        checked += o.checked;
        skipped_membership += o.skipped_membership;
        skipped_resource += o.skipped_resource;
        bound_violations += o.bound_violations;
        exact_checks += o.exact_checks;
        atoms += o.atoms;
        for (auto & [k, v] : o.atom_tags)
            atom_tags[k] += v;
        trichotomy_failures += o.trichotomy_failures;
        c5_atoms += o.c5_atoms;
        proposition_failures += o.proposition_failures;
        for (auto & [k, v] : o.proposition_hits)
            proposition_hits[k] += v;
        fallback_checks += o.fallback_checks;
        fallback_failures += o.fallback_failures;
        decomposition_checks += o.decomposition_checks;
        decomposition_failures += o.decomposition_failures;
        bug_traps += o.bug_traps;
        for (auto & f : o.fixtures)
            if (int(fixtures.size()) < max_fixtures)
                fixtures.push_back(f);
    }

    Verifier::Verifier(VerifyOptions options) :
        _options(options)
    {
    }

    auto Verifier::fail(const Graph & g, const string & provenance, const string & clause) -> void
    {
        if (int(_report.fixtures.size()) < _options.max_fixtures)
            _report.fixtures.push_back({{"provenance", provenance}, {"clause", clause}, {"graph", g}});
    }

    auto Verifier::add(const Graph & g, const string & provenance) -> void
    {
        ++_report.instances;
        if (! in_class(g)) {
            ++_report.skipped_membership;
            return;
        }
        try {
            auto r = color(g);
            ++_report.checked;
            if (_options.bound) {
                int bound = 3 * r.omega / 2;
                if (! check_proper(g, r.colors) || r.count > bound || replay(g, r.audit) != r.colors) {
                    ++_report.bound_violations;
                    fail(g, provenance, "colouring is improper, above the bound or not replayable");
                }
                if (g.n() <= _options.max_exact_n) {
                    ++_report.exact_checks;
                    int chi = chi_exact(g).chi;
                    if (chi > bound || chi > r.count) {
                        ++_report.bound_violations;
                        fail(g, provenance, "chi " + std::to_string(chi) + " against bound " + std::to_string(bound));
                    }
                }
            }
            check_atoms(g, r, provenance);
            if (g.n() <= _options.decomposition_max_n)
                check_decomposition(g, provenance);
        }
        catch (const ResourceError &) {
            ++_report.skipped_resource;
        }
        catch (const BugTrap & e) {
            ++_report.bug_traps;
            fail(g, provenance, string{"bug trap: "} + e.what());
        }
        catch (const MembershipError & e) {
            // the input passed the class filter, so this is a bug as well
            ++_report.bug_traps;
            fail(g, provenance, string{"membership error on an in-class graph: "} + e.what());
        }
    }

    auto Verifier::check_atoms(const Graph & g, const ColoringResult & r, const string & provenance) -> void
    {
        for (auto & step : r.audit.steps) {
            if (! step.atom)
                continue;
            auto & cls = *step.atom;
            auto sub = induced_subgraph(g, step.vertices);
            auto & h = sub.graph;
            ++_report.atoms;
            ++_report.atom_tags[to_string(cls.tag) + ":" + to_string(cls.trigger)];
            if (! cls.record.tag.empty())
                ++_report.atom_tags["case:" + cls.record.tag];

            if (_options.trichotomy) {
                bool ok = false;
                switch (cls.tag) {
                case AtomTag::perfect:
                    ok = is_perfect(h);
                    break;
                case AtomTag::nice:
                    ok = cls.nice && verify_nice(h, lower(sub, *cls.nice)).valid();
                    break;
                case AtomTag::quasi_line:
                    ok = cls.quasi_line && is_quasi_line(h) && check_quasi_line_witness(h, *cls.quasi_line);
                    break;
                }
                if (! ok) {
                    ++_report.trichotomy_failures;
                    fail(h, provenance, "atom classified " + to_string(cls.tag) + " fails its recognizer");
                }
            }

            if (cls.tag == AtomTag::nice && h.n() <= _options.fallback_max_n) {
                ++_report.fallback_checks;
                auto f = nice_search_fallback(h);
                if (! f) {
                    ++_report.fallback_failures;
                    fail(h, provenance, "fallback search finds no certificate for a nice atom");
                }
                else if (on_fallback)
                    on_fallback(h, lower(sub, *cls.nice), *f);
            }

            if (_options.propositions && (cls.trigger == Trigger::five_wheel || cls.trigger == Trigger::c5)) {
                auto rim = cls.trigger == Trigger::five_wheel ? find_induced(h, Pattern{PatternKind::five_wheel})
                                                              : find_induced(h, Pattern{PatternKind::c5});
                ++_report.c5_atoms;
                for (auto & r : rims(h, rim_of(*rim), cls.trigger == Trigger::five_wheel, _options.rims_per_atom)) {
                    auto rep = assert_c5_propositions(h, build_c5_structure(h, r));
                    for (auto & res : rep.results) {
                        if (! res.passed) {
                            ++_report.proposition_failures;
                            fail(h, provenance, "proposition " + res.key);
                        }
                        else if (! res.vacuous)
                            ++_report.proposition_hits[res.key];
                    }
                }
            }
        }
    }

    auto Verifier::check_decomposition(const Graph & g, const string & provenance) -> void
    {
        for (auto & comp : components(g)) {
            auto h = induced_subgraph(g, comp).graph;
            ++_report.decomposition_checks;
            auto tree = atom_tree(h);
            int best = 0;
            bool cut_free = true;
            for (int leaf : tree.leaves()) {
                auto & lg = tree.nodes[leaf].graph;
                best = std::max(best, chi_exact(lg).chi);
                cut_free = cut_free && ! has_clique_cutset_exhaustive(lg);
            }
            if (best != chi_exact(h).chi || ! cut_free) {
                ++_report.decomposition_failures;
                fail(h, provenance, cut_free ? "leaf chromatic numbers miss the root's" : "an atom-tree leaf has a clique cutset");
            }
        }
    }

    auto verify_theorem1(const vector<InstanceRecord> & instances, VerifyOptions options) -> VerificationReport
    {
        options.trichotomy = options.propositions = false;
        options.fallback_max_n = options.decomposition_max_n = -1;
        return run(instances, options);
    }

    auto verify_trichotomy(const vector<InstanceRecord> & instances, VerifyOptions options) -> VerificationReport
    {
        options.bound = options.propositions = false;
        options.decomposition_max_n = -1;
        return run(instances, options);
    }

    auto verify_propositions(const vector<InstanceRecord> & instances, VerifyOptions options) -> VerificationReport
    {
        options.bound = options.trichotomy = false;
        options.fallback_max_n = options.decomposition_max_n = -1;
        return run(instances, options);
    }

    auto random_sweep(Verifier & v, int count, int min_n, int max_n, std::uint64_t seed) -> int
    {
        if (min_n < 0 || max_n < min_n)
            throw GraphError{"bad size range for the random sweep"};
        int empty = 0;
        std::uint64_t draw = 0;
        for (int done = 0; done < count; ++draw) {
            int n = min_n + int(draw % std::uint64_t(max_n - min_n + 1));
            bool structured = draw % 4 != 3;
            // structured draws read p as the chance of splitting a part; plain ones need dense graphs
            double p = structured ? 0.1 + 0.1 * double(draw / 4 % 4) : (n >= 14 ? 0.9 : 0.85);
            std::uint64_t s = seed * 1000003 + draw;
            auto d = gen_random_in_class(n, p, s, structured);
            if (! d) {
                ++empty;
                continue;
            }
            v.add(d->graph, (structured ? "random-structured" : "random") + string{" n="} + std::to_string(n) + " p=" +
                                std::to_string(p) + " seed=" + std::to_string(s));
            ++done;
        }
        return empty;
    }

    auto rerun_fixture(const nlohmann::json & fixture, VerifyOptions options) -> vector<string>
    {
        Verifier v{options};
        v.add(fixture.at("graph").get<Graph>(), fixture.value("provenance", ""));
        vector<string> clauses;
        for (auto & f : v.report().fixtures)
            clauses.push_back(f.at("clause"));
        return clauses;
    }

    auto has_clique_cutset_exhaustive(const Graph & g) -> bool
    {
        int n = g.n();
        if (n > 20)
            throw ResourceError{"exhaustive clique cutset check is limited to 20 vertices"};
        auto count = [&](std::uint32_t keep) {
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if (keep >> v & 1)
                    s.insert(v);
            return components(g, s).size();
        };
        std::uint32_t all = (std::uint32_t{1} << n) - 1;
        auto base = count(all);
        for (std::uint32_t q = 0; q < all; ++q) {
            bool clique = true;
            for (int u = 0; u < n && clique; ++u)
                if (q >> u & 1)
                    for (int v = u + 1; v < n && clique; ++v)
                        if ((q >> v & 1) && ! g.adjacent(u, v))
                            clique = false;
            if (clique && count(all & ~q) > base)
                return true;
        }
        return false;
    }

    auto to_json(nlohmann::json & j, const VerificationReport & r) -> void
    {
        j = {{"instances", r.instances},
             {"checked", r.checked},
             {"skipped_membership", r.skipped_membership},
             {"skipped_resource", r.skipped_resource},
             {"bound_violations", r.bound_violations},
             {"exact_checks", r.exact_checks},
             {"atoms", r.atoms},
             {"atom_tags", r.atom_tags},
             {"trichotomy_failures", r.trichotomy_failures},
             {"c5_atoms", r.c5_atoms},
             {"proposition_failures", r.proposition_failures},
             {"proposition_hits", r.proposition_hits},
             {"fallback_checks", r.fallback_checks},
             {"fallback_failures", r.fallback_failures},
             {"decomposition_checks", r.decomposition_checks},
             {"decomposition_failures", r.decomposition_failures},
             {"bug_traps", r.bug_traps},
             {"fixtures", r.fixtures}};
    }
}
