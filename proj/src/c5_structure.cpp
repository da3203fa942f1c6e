#include <p5w4/c5_structure.hpp>
#include <p5w4/detect.hpp>
#include <p5w4/errors.hpp>
#include <p5w4/json.hpp>

#include <functional>

using std::optional;
using std::string;
using std::vector;

namespace p5w4
{
    auto C5Structure::a_all() const -> VertexSet
    {
        return a[0] | a[1] | a[2] | a[3] | a[4];
    }

    auto C5Structure::x_all() const -> VertexSet
    {
        return x[0] | x[1] | x[2] | x[3] | x[4];
    }

    auto C5Structure::y_all() const -> VertexSet
    {
        return y[0] | y[1] | y[2] | y[3] | y[4];
    }

    auto grow_c5_partition(const Graph & g, const std::array<int, 5> & c5) -> Pentagon
    {
        VertexSet seen;
        for (int v : c5) {
            if (v < 0 || v >= g.n() || seen.contains(v))
                throw GraphError{"C5 embedding has a repeated or out-of-range vertex"};
            seen.insert(v);
        }
        for (int i = 0; i < 5; ++i)
            if (! g.adjacent(c5[i], c5[mod5(i + 1)]) || g.adjacent(c5[i], c5[mod5(i + 2)]))
                throw GraphError{"vertices do not induce a C5 in the given order"};

        Pentagon a;
        for (int i = 0; i < 5; ++i)
            a[i].insert(c5[i]);
        for (bool changed = true; changed;) {
            changed = false;
            for (int p = 0; p < g.n(); ++p) {
                if ((a[0] | a[1] | a[2] | a[3] | a[4]).contains(p))
                    continue;
                for (int i = 0; i < 5; ++i) {
                    auto & np = g.neighbors(p);
                    if ((a[mod5(i - 1)] | a[mod5(i + 1)]).subset_of(np) && ! (a[mod5(i - 2)] | a[mod5(i + 2)]).intersects(np)) {
                        a[i].insert(p);
                        changed = true;
                        break;
                    }
                }
            }
        }
        return a;
    }

    auto classify_rest(const Graph & g, const Pentagon & a, const std::array<int, 5> & base) -> C5Structure
    {
        C5Structure s;
        s.base = base;
        s.a = a;
        VertexSet all_a = s.a_all();
        for (int v = 0; v < g.n(); ++v) {
            if (all_a.contains(v))
                continue;
            int mask = 0;
            for (int i = 0; i < 5; ++i)
                if (g.neighbors(v).intersects(a[i]))
                    mask |= 1 << i;
            if (mask == 31) {
                s.z.insert(v);
                continue;
            }
            if (mask == 0) {
                s.t.insert(v);
                continue;
            }
            bool placed = false;
            for (int i = 0; i < 5 && ! placed; ++i) {
                if (mask == (31 & ~(1 << i))) {
                    s.y[i].insert(v);
                    placed = true;
                }
            }
            for (int i = 0; i < 5 && ! placed; ++i) {
                if (mask == ((1 << i) | (1 << mod5(i + 2)) | (1 << mod5(i - 2)))) {
                    s.x[i].insert(v);
                    placed = true;
                }
            }
            if (! placed)
                throw MembershipError{"vertex " + std::to_string(v) + " fits none of X, Y, Z, T around the C5"};
        }
        return s;
    }

    auto build_c5_structure(const Graph & g, const std::array<int, 5> & c5) -> C5Structure
    {
        return classify_rest(g, grow_c5_partition(g, c5), c5);
    }

    namespace
    {
        auto list(const VertexSet & s) -> vector<int> { return s.to_vector(); }

        auto joined(const VertexSet & s, const VertexSet & t) -> vector<int>
        {
            auto r = s.to_vector();
            r.push_back(-1);
            for (int v : t.to_vector())
                r.push_back(v);
            return r;
        }

        auto adj(int u, int v) -> Witness { return {"adjacent", {u, v}, {}}; }
        auto nonadj(int u, int v) -> Witness { return {"nonadjacent", {u, v}, {}}; }
        auto p3(int a, int b, int c) -> Witness { return {"induced_p3", {a, b, c}, {}}; }
        auto complete(const VertexSet & s, const VertexSet & t) -> Witness { return {"complete", joined(s, t), {}}; }
        auto anticomplete(const VertexSet & s, const VertexSet & t) -> Witness { return {"anticomplete", joined(s, t), {}}; }
        auto clique(const VertexSet & s) -> Witness { return {"clique", list(s), {}}; }
        auto all(vector<Witness> parts) -> Witness { return {"all", {}, std::move(parts)}; }

        auto no_common(int u, int v, const VertexSet & s) -> Witness
        {
            vector<int> r{u, v};
            for (int w : s.to_vector())
                r.push_back(w);
            return {"no_common_neighbour", r, {}};
        }

        auto missed(int k, const VertexSet & m, const VertexSet & s) -> Witness
        {
            vector<int> r{k};
            for (int v : joined(m, s))
                r.push_back(v);
            return {"clique_missed", r, {}};
        }

        // first pair (u in s, v in t) with u, v nonadjacent
        auto nonadjacent_pair(const Graph & g, const VertexSet & s, const VertexSet & t) -> optional<std::pair<int, int>>
        {
            for (int u = s.first(); u >= 0; u = s.next(u)) {
                VertexSet miss = t - g.neighbors(u);
                miss.erase(u);
                if (! miss.empty())
                    return std::pair{u, miss.first()};
            }
            return std::nullopt;
        }

        auto adjacent_pair(const Graph & g, const VertexSet & s, const VertexSet & t) -> optional<std::pair<int, int>>
        {
            for (int u = s.first(); u >= 0; u = s.next(u)) {
                VertexSet hit = t & g.neighbors(u);
                if (! hit.empty())
                    return std::pair{u, hit.first()};
            }
            return std::nullopt;
        }

        auto find_p3(const Graph & g, const VertexSet & s) -> optional<Witness>
        {
            for (int b = s.first(); b >= 0; b = s.next(b)) {
                VertexSet nb = g.neighbors(b) & s;
                for (int a = nb.first(); a >= 0; a = nb.next(a)) {
                    VertexSet far = nb - g.neighbors(a);
                    far.erase(a);
                    if (! far.empty())
                        return p3(a, b, far.first());
                }
            }
            return std::nullopt;
        }

        // facts showing which A-parts v sees
        auto membership(const Graph & g, const C5Structure & s, int v) -> Witness
        {
            vector<Witness> parts;
            for (int j = 0; j < 5; ++j) {
                VertexSet hit = g.neighbors(v) & s.a[j];
                if (hit.empty())
                    parts.push_back(anticomplete(VertexSet{v}, s.a[j]));
                else
                    parts.push_back(adj(v, hit.first()));
            }
            return all(std::move(parts));
        }

        // witness that s is not complete to exactly one member of cliques
        auto exactly_one(const Graph & g, const VertexSet & s, const vector<VertexSet> & cliques) -> optional<Witness>
        {
            VertexSet whole;
            for (auto & k : cliques)
                whole |= k;
            vector<Witness> parts;
            for (auto & k : cliques) {
                if (auto p = nonadjacent_pair(g, s, k))
                    parts.push_back(nonadj(p->first, p->second));
                else if (auto q = adjacent_pair(g, s, whole - k))
                    parts.push_back(adj(q->first, q->second));
                else
                    return std::nullopt;
            }
            return all(std::move(parts));
        }

        // u in s mixed on the connected set q: an induced P3 u-a-b with a, b in q
        auto mixed_on(const Graph & g, int u, const VertexSet & q) -> optional<Witness>
        {
            VertexSet in = q & g.neighbors(u), out = q - g.neighbors(u);
            out.erase(u);
            for (int a = in.first(); a >= 0; a = in.next(a)) {
                VertexSet b = out & g.neighbors(a);
                if (! b.empty())
                    return p3(u, a, b.first());
            }
            return std::nullopt;
        }

        using Check = std::function<optional<Witness>(const std::function<void()> &)>;

        auto run(PropositionReport & rep, const string & key, bool applies, const Check & f) -> void
        {
            PropositionResult r;
            r.key = key;
            if (applies) {
                auto w = f([&] { r.vacuous = false; });
                if (w) {
                    r.passed = false;
                    r.vacuous = false;
                    r.witness = std::move(*w);
                }
            }
            rep.results.push_back(std::move(r));
        }

        struct Ctx
        {
            const Graph & g;
            const C5Structure & s;
            int omega;
            std::array<vector<VertexSet>, 5> ac, xc;
            vector<VertexSet> tc;
            VertexSet a, x, y;
            std::array<VertexSet, 5> ra;

            Ctx(const Graph & g_, const C5Structure & s_) : g(g_), s(s_), omega(p5w4::omega(g_))
            {
                for (int i = 0; i < 5; ++i) {
                    ac[i] = components(g, s.a[i]);
                    xc[i] = components(g, s.x[i]);
                    ra[i] = r_set(g, s.a[i]);
                }
                tc = components(g, s.t);
                a = s.a_all();
                x = s.x_all();
                y = s.y_all();
            }

            auto A(int i) const -> const VertexSet & { return s.a[mod5(i)]; }
            auto X(int i) const -> const VertexSet & { return s.x[mod5(i)]; }
            auto Y(int i) const -> const VertexSet & { return s.y[mod5(i)]; }
            auto AC(int i) const -> const vector<VertexSet> & { return ac[mod5(i)]; }
            auto XC(int i) const -> const vector<VertexSet> & { return xc[mod5(i)]; }
            auto RA(int i) const -> const VertexSet & { return ra[mod5(i)]; }
        };

        using Hit = std::function<void()>;

        auto check_partition(PropositionReport & rep, const Ctx & c) -> void
        {
            run(rep, "partition", true, [&](const Hit & hit) -> optional<Witness> {
                hit();
                auto & g = c.g;
                for (int i = 0; i < 5; ++i) {
                    if (auto p = nonadjacent_pair(g, c.A(i), c.A(i + 1)))
                        return nonadj(p->first, p->second);
                    if (auto p = adjacent_pair(g, c.A(i), c.A(i + 2)))
                        return adj(p->first, p->second);
                }
                vector<VertexSet> buckets{c.s.z, c.s.t};
                for (int i = 0; i < 5; ++i) {
                    buckets.push_back(c.s.a[i]);
                    buckets.push_back(c.s.x[i]);
                    buckets.push_back(c.s.y[i]);
                }
                VertexSet covered;
                for (auto & b : buckets) {
                    if (auto v = (covered & b).first(); v >= 0)
                        return membership(g, c.s, v);
                    covered |= b;
                }
                if (auto v = (g.vertices() - covered).first(); v >= 0)
                    return membership(g, c.s, v);
                auto pattern = [&](int v) {
                    int mask = 0;
                    for (int j = 0; j < 5; ++j)
                        if (g.neighbors(v).intersects(c.A(j)))
                            mask |= 1 << j;
                    return mask;
                };
                auto expect = [&](const VertexSet & set, int mask) -> optional<Witness> {
                    for (int v = set.first(); v >= 0; v = set.next(v))
                        if (pattern(v) != mask)
                            return membership(g, c.s, v);
                    return std::nullopt;
                };
                if (auto w = expect(c.s.z, 31))
                    return w;
                if (auto w = expect(c.s.t, 0))
                    return w;
                for (int i = 0; i < 5; ++i) {
                    if (auto w = expect(c.X(i), (1 << i) | (1 << mod5(i + 2)) | (1 << mod5(i - 2))))
                        return w;
                    if (auto w = expect(c.Y(i), 31 & ~(1 << i)))
                        return w;
                }
                VertexSet outside = g.vertices() - c.a;
                for (int v = outside.first(); v >= 0; v = outside.next(v))
                    for (int i = 0; i < 5; ++i)
                        if ((c.A(i - 1) | c.A(i + 1)).subset_of(g.neighbors(v)) && ! (c.A(i - 2) | c.A(i + 2)).intersects(g.neighbors(v)))
                            return all({complete(VertexSet{v}, c.A(i - 1) | c.A(i + 1)), anticomplete(VertexSet{v}, c.A(i - 2) | c.A(i + 2))});
                return std::nullopt;
            });
        }

        auto check_section_facts(PropositionReport & rep, const Ctx & c, const std::array<WFamily, 5> & wf) -> void
        {
            auto & g = c.g;
            const int sides[2] = {2, -2};

            run(rep, "a_parts_p3_free", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    hit();
                    if (auto w = find_p3(g, c.A(i)))
                        return w;
                }
                return std::nullopt;
            });

            run(rep, "x_complete_to_a", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.X(i).first(); u >= 0; u = c.X(i).next(u)) {
                        hit();
                        if (auto p = nonadjacent_pair(g, VertexSet{u}, c.A(i)))
                            return nonadj(u, p->second);
                    }
                return std::nullopt;
            });

            run(rep, "x_pure_on_a_cliques", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.X(i).first(); u >= 0; u = c.X(i).next(u))
                        for (int d : sides)
                            for (auto & k : c.AC(i + d))
                                if (g.neighbors(u).intersects(k)) {
                                    hit();
                                    if (auto w = mixed_on(g, u, k))
                                        return w;
                                }
                return std::nullopt;
            });

            run(rep, "x_good", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.X(i).first(); u >= 0; u = c.X(i).next(u))
                        for (int d : sides) {
                            hit();
                            vector<Witness> none;
                            for (auto & k : c.AC(i + d)) {
                                if (auto w = mixed_on(g, u, k))
                                    return w;
                                if (auto p = nonadjacent_pair(g, VertexSet{u}, k))
                                    none.push_back(nonadj(u, p->second));
                            }
                            if (none.size() == c.AC(i + d).size())
                                return all(std::move(none));
                        }
                return std::nullopt;
            });

            run(rep, "x_complete_to_one_side", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.X(i).first(); u >= 0; u = c.X(i).next(u)) {
                        hit();
                        auto p = nonadjacent_pair(g, VertexSet{u}, c.A(i + 2));
                        auto q = nonadjacent_pair(g, VertexSet{u}, c.A(i - 2));
                        if (p && q)
                            return all({nonadj(u, p->second), nonadj(u, q->second)});
                    }
                return std::nullopt;
            });

            run(rep, "x_nonadjacent_common_neighbours", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.X(i).first(); u >= 0; u = c.X(i).next(u))
                        for (int v = c.X(i).next(u); v >= 0; v = c.X(i).next(v)) {
                            if (g.adjacent(u, v))
                                continue;
                            hit();
                            for (int d : sides)
                                if (! (g.neighbors(u) & g.neighbors(v)).intersects(c.A(i + d)))
                                    return all({nonadj(u, v), no_common(u, v, c.A(i + d))});
                        }
                return std::nullopt;
            });

            run(rep, "two_nonadjacent_x_force_clique", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    VertexSet side = c.A(i + 2) | c.A(i - 2);
                    VertexSet full;
                    c.X(i).for_each([&](int u) {
                        if (side.subset_of(g.neighbors(u)))
                            full.insert(u);
                    });
                    auto p = nonadjacent_pair(g, full, full);
                    if (! p)
                        continue;
                    hit();
                    for (int d : sides)
                        if (auto q = nonadjacent_pair(g, c.A(i + d), c.A(i + d)))
                            return all({nonadj(p->first, p->second), complete(VertexSet{p->first, p->second}, side), nonadj(q->first, q->second)});
                }
                return std::nullopt;
            });

            run(rep, "x_with_t_neighbour_complete", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.X(i).first(); u >= 0; u = c.X(i).next(u)) {
                        VertexSet tn = g.neighbors(u) & c.s.t;
                        if (tn.empty())
                            continue;
                        hit();
                        if (auto p = nonadjacent_pair(g, VertexSet{u}, c.A(i + 2) | c.A(i - 2)))
                            return all({adj(u, tn.first()), nonadj(u, p->second)});
                    }
                return std::nullopt;
            });

            run(rep, "x_p3_free", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    if (c.X(i).empty())
                        continue;
                    hit();
                    if (auto w = find_p3(g, c.X(i)))
                        return w;
                }
                return std::nullopt;
            });

            run(rep, "x_complete_to_adjacent_x", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    if (c.X(i).empty() || c.X(i + 1).empty())
                        continue;
                    hit();
                    if (auto p = nonadjacent_pair(g, c.X(i), c.X(i + 1)))
                        return nonadj(p->first, p->second);
                }
                return std::nullopt;
            });

            run(rep, "x_clique_a_clique_complete", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (auto & k : c.XC(i))
                        for (int d : sides) {
                            // a vertex of X_{i+d} anticomplete to K forces K complete to any touched A_{i-d}-clique
                            VertexSet far = c.X(i + d);
                            for (int u = far.first(); u >= 0; u = far.next(u)) {
                                if (g.neighbors(u).intersects(k))
                                    continue;
                                for (auto & q : c.AC(i - d)) {
                                    auto touch = adjacent_pair(g, k, q);
                                    if (! touch)
                                        continue;
                                    hit();
                                    if (auto p = nonadjacent_pair(g, k, q))
                                        return all({anticomplete(VertexSet{u}, k), adj(touch->first, touch->second), nonadj(p->first, p->second)});
                                }
                            }
                        }
                return std::nullopt;
            });

            run(rep, "x_cliques_complete_structure", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (auto & k : c.XC(i))
                        for (auto & k2 : c.XC(i + 2)) {
                            if (! complete_to(g, k, k2))
                                continue;
                            hit();
                            auto base = complete(k, k2);
                            for (auto [s1, s2] : {std::pair{k, c.X(i + 2) - k2}, std::pair{k2, c.X(i) - k}, std::pair{c.X(i) - k, c.X(i + 2) - k2}})
                                if (auto p = adjacent_pair(g, s1, s2))
                                    return all({base, adj(p->first, p->second)});
                            if (auto w = exactly_one(g, k, c.AC(i + 2)))
                                return all({base, *w});
                            if (auto w = exactly_one(g, k2, c.AC(i)))
                                return all({base, *w});
                            if (auto p = adjacent_pair(g, k, c.X(i - 2)))
                                return all({base, adj(p->first, p->second)});
                            if (auto p = adjacent_pair(g, k2, c.X(i - 1)))
                                return all({base, adj(p->first, p->second)});
                        }
                return std::nullopt;
            });

            run(rep, "x_pairs_complete_to_a_clique", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (auto & k : c.XC(i))
                        for (auto & k2 : c.XC(i - 1))
                            for (auto & q : c.AC(i + 2)) {
                                auto t1 = adjacent_pair(g, k, q), t2 = adjacent_pair(g, k2, q);
                                if (! t1 || ! t2)
                                    continue;
                                hit();
                                if (auto p = nonadjacent_pair(g, k | k2, q))
                                    return all({adj(t1->first, t1->second), adj(t2->first, t2->second), nonadj(p->first, p->second)});
                            }
                return std::nullopt;
            });

            run(rep, "w_pairs_no_common_clique", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (auto & [k, a1] : wf[i])
                        for (auto & [k2, a2] : wf[mod5(i + 1)]) {
                            hit();
                            for (auto & d : c.AC(i - 2))
                                if (is_clique(g, k | k2 | d))
                                    return all({clique(k | a1), clique(k2 | a2), clique(k | k2 | d)});
                        }
                return std::nullopt;
            });

            auto all_or_nothing_on_t = [&](const Hit & hit, const std::function<const VertexSet &(int)> & part) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = part(i).first(); u >= 0; u = part(i).next(u))
                        for (auto & q : c.tc) {
                            if (! g.neighbors(u).intersects(q))
                                continue;
                            hit();
                            if (auto w = mixed_on(g, u, q))
                                return w;
                        }
                return std::nullopt;
            };

            run(rep, "x_all_or_nothing_on_t_components", true, [&](const Hit & hit) {
                return all_or_nothing_on_t(hit, [&](int i) -> const VertexSet & { return c.X(i); });
            });

            run(rep, "y_complete_when_a_not_clique", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int d : {1, -1}) {
                        auto q = nonadjacent_pair(g, c.A(i + d), c.A(i + d));
                        if (! q || c.Y(i).empty())
                            continue;
                        hit();
                        if (auto p = nonadjacent_pair(g, c.Y(i), c.A(i + d)))
                            return all({nonadj(q->first, q->second), nonadj(p->first, p->second)});
                    }
                return std::nullopt;
            });

            run(rep, "y_complete_to_one_side", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.Y(i).first(); u >= 0; u = c.Y(i).next(u)) {
                        hit();
                        auto p = nonadjacent_pair(g, VertexSet{u}, c.A(i + 1));
                        auto q = nonadjacent_pair(g, VertexSet{u}, c.A(i - 1));
                        if (p && q)
                            return all({nonadj(u, p->second), nonadj(u, q->second)});
                    }
                return std::nullopt;
            });

            run(rep, "y_all_or_nothing_on_t_components", true, [&](const Hit & hit) {
                return all_or_nothing_on_t(hit, [&](int i) -> const VertexSet & { return c.Y(i); });
            });

            run(rep, "t_p3_free_without_z", c.s.z.empty(), [&](const Hit & hit) -> optional<Witness> {
                if (c.s.t.empty())
                    return std::nullopt;
                hit();
                return find_p3(g, c.s.t);
            });

            run(rep, "t_x_nonadjacent_forces_edge", true, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    VertexSet others = c.X(i - 2) | c.X(i + 2) | c.Y(i) | c.Y(i + 1) | c.Y(i - 1) | c.s.z;
                    for (auto & k : c.XC(i))
                        for (int u = k.first(); u >= 0; u = k.next(u)) {
                            VertexSet tn = g.neighbors(u) & c.s.t;
                            for (int t = tn.first(); t >= 0; t = tn.next(t)) {
                                VertexSet vs = others - g.neighbors(u);
                                for (int v = vs.first(); v >= 0; v = vs.next(v)) {
                                    hit();
                                    auto base = all({adj(u, t), nonadj(u, v)});
                                    if (! g.adjacent(t, v))
                                        return all({base, nonadj(t, v)});
                                    if (g.neighbors(v).intersects(k))
                                        continue;
                                    VertexSet comp;
                                    for (auto & q : c.tc)
                                        if (q.contains(t))
                                            comp = q;
                                    if (auto p = nonadjacent_pair(g, comp, k))
                                        return all({base, anticomplete(VertexSet{v}, k), nonadj(p->first, p->second)});
                                }
                            }
                        }
                }
                return std::nullopt;
            });
        }

        auto check_wheel_facts(PropositionReport & rep, const Ctx & c, bool applies) -> void
        {
            auto & g = c.g;
            auto & s = c.s;
            const int sides[2] = {2, -2};
            std::array<optional<VertexSet>, 5> star;
            if (applies)
                star = a_star(g, s);

            run(rep, "wheel_z_one_a_clique", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int z = s.z.first(); z >= 0; z = s.z.next(z))
                    for (int i = 0; i < 5; ++i) {
                        hit();
                        if (auto w = exactly_one(g, VertexSet{z}, c.AC(i)))
                            return w;
                    }
                return std::nullopt;
            });

            run(rep, "wheel_three_a_cliques", applies, [&](const Hit & hit) -> optional<Witness> {
                hit();
                vector<Witness> parts;
                for (int j = 0; j < 5; ++j) {
                    optional<std::pair<int, int>> p;
                    for (int d : {0, 2, -2})
                        if (! p)
                            p = nonadjacent_pair(g, c.A(j + d), c.A(j + d));
                    if (! p)
                        return std::nullopt;
                    parts.push_back(nonadj(p->first, p->second));
                }
                return all(std::move(parts));
            });

            run(rep, "wheel_z_clique", applies, [&](const Hit & hit) -> optional<Witness> {
                if (s.z.size() < 2)
                    return std::nullopt;
                hit();
                if (auto p = nonadjacent_pair(g, s.z, s.z))
                    return nonadj(p->first, p->second);
                return std::nullopt;
            });

            run(rep, "wheel_a_star", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    hit();
                    if (auto w = exactly_one(g, s.z, c.AC(i)))
                        return w;
                }
                return std::nullopt;
            });

            run(rep, "wheel_z_a_meets_twice", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    VertexSet r = c.RA(i + 2) | c.RA(i - 2);
                    for (auto & m : maximal_cliques(g, s.z | c.A(i + 2) | c.A(i - 2))) {
                        hit();
                        if ((m & r).size() < 2)
                            return missed(2, m, r);
                    }
                }
                return std::nullopt;
            });

            run(rep, "wheel_x_anticomplete_z", applies, [&](const Hit & hit) -> optional<Witness> {
                if (c.x.empty() || s.z.empty())
                    return std::nullopt;
                hit();
                if (auto p = adjacent_pair(g, c.x, s.z))
                    return adj(p->first, p->second);
                return std::nullopt;
            });

            run(rep, "wheel_x_on_a_star", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int d : sides) {
                        if (c.X(i).empty())
                            continue;
                        hit();
                        auto & st = star[mod5(i + d)];
                        if (! st)
                            return exactly_one(g, s.z, c.AC(i + d));
                        auto base = all({complete(s.z, *st), anticomplete(s.z, c.A(i + d) - *st)});
                        if (auto p = nonadjacent_pair(g, c.X(i), *st))
                            return all({base, nonadj(p->first, p->second)});
                        if (auto p = adjacent_pair(g, c.X(i), c.A(i + d) - *st))
                            return all({base, adj(p->first, p->second)});
                    }
                return std::nullopt;
            });

            run(rep, "wheel_x_a_meets_twice", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    if (c.X(i).empty())
                        continue;
                    VertexSet r = c.RA(i + 2) | c.RA(i - 2);
                    for (auto & m : maximal_cliques(g, c.X(i) | c.A(i + 2) | c.A(i - 2))) {
                        if (m.size() != c.omega)
                            continue;
                        hit();
                        if ((m & r).size() < 2)
                            return missed(2, m, r);
                    }
                }
                return std::nullopt;
            });

            run(rep, "wheel_x_anticomplete_opposite_x", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    if (c.X(i).empty() || c.X(i + 2).empty())
                        continue;
                    hit();
                    if (auto p = adjacent_pair(g, c.X(i), c.X(i + 2)))
                        return adj(p->first, p->second);
                }
                return std::nullopt;
            });

            run(rep, "wheel_y_empty", applies, [&](const Hit & hit) -> optional<Witness> {
                hit();
                if (auto y = c.y.first(); y >= 0)
                    return membership(g, s, y);
                return std::nullopt;
            });

            run(rep, "wheel_x_t_forces_cliques", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.X(i).first(); u >= 0; u = c.X(i).next(u)) {
                        VertexSet tn = g.neighbors(u) & s.t;
                        if (tn.empty())
                            continue;
                        hit();
                        for (int d : sides)
                            if (auto p = nonadjacent_pair(g, c.A(i + d), c.A(i + d)))
                                return all({adj(u, tn.first()), nonadj(p->first, p->second)});
                    }
                return std::nullopt;
            });

            run(rep, "wheel_t_components_see_x", applies, [&](const Hit & hit) -> optional<Witness> {
                for (auto & q : c.tc) {
                    hit();
                    vector<Witness> parts;
                    bool found = false;
                    for (int j = 0; j < 5 && ! found; ++j) {
                        VertexSet seen = neighborhood(g, q) & c.X(j);
                        if (seen.empty())
                            parts.push_back(anticomplete(q, c.X(j)));
                        else if (auto p = nonadjacent_pair(g, seen, q))
                            parts.push_back(nonadj(p->first, p->second));
                        else
                            found = true;
                    }
                    if (! found)
                        return all(std::move(parts));
                }
                return std::nullopt;
            });

            run(rep, "wheel_z_complete_to_t", applies, [&](const Hit & hit) -> optional<Witness> {
                if (s.t.empty())
                    return std::nullopt;
                hit();
                if (auto p = nonadjacent_pair(g, s.z, s.t))
                    return nonadj(p->first, p->second);
                return std::nullopt;
            });

            run(rep, "wheel_t_p3_free", applies, [&](const Hit & hit) -> optional<Witness> {
                if (s.t.empty())
                    return std::nullopt;
                hit();
                return find_p3(g, s.t);
            });
        }

        auto check_wheel_free_facts(PropositionReport & rep, const Ctx & c, bool applies) -> void
        {
            auto & g = c.g;
            auto & s = c.s;
            const int sides[2] = {2, -2};

            run(rep, "wf_z_empty", applies, [&](const Hit & hit) -> optional<Witness> {
                hit();
                if (auto z = s.z.first(); z >= 0)
                    return membership(g, s, z);
                return std::nullopt;
            });

            run(rep, "wf_adjacent_x_clique", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    VertexSet u = c.X(i) | c.X(i + 1);
                    if (c.X(i).empty() || c.X(i + 1).empty())
                        continue;
                    for (int p = c.A(i - 2).first(); p >= 0; p = c.A(i - 2).next(p)) {
                        if (! u.subset_of(g.neighbors(p)))
                            continue;
                        hit();
                        if (auto q = nonadjacent_pair(g, u, u))
                            return all({complete(VertexSet{p}, u), nonadj(q->first, q->second)});
                    }
                }
                return std::nullopt;
            });

            run(rep, "wf_x_cliques_all_or_nothing", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (auto & k : c.XC(i))
                        for (auto & k2 : c.XC(i + 2)) {
                            hit();
                            if (relation(g, k, k2) != Relation::mixed)
                                continue;
                            for (int u = k.first(); u >= 0; u = k.next(u))
                                if (auto w = mixed_on(g, u, k2))
                                    return w;
                            // every vertex of K is complete or anticomplete to K'
                            int full = -1, none = -1;
                            k.for_each([&](int u) {
                                if (k2.subset_of(g.neighbors(u)))
                                    full = u;
                                else
                                    none = u;
                            });
                            return p3(none, full, k2.first());
                        }
                return std::nullopt;
            });

            run(rep, "wf_anticomplete_x_cliques_see_a", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (auto & k : c.XC(i))
                        for (auto & k2 : c.XC(i + 2)) {
                            if (! anticomplete_to(g, k, k2))
                                continue;
                            hit();
                            auto p = nonadjacent_pair(g, k, c.A(i + 2));
                            auto q = nonadjacent_pair(g, k2, c.A(i));
                            if (p && q)
                                return all({anticomplete(k, k2), nonadj(p->first, p->second), nonadj(q->first, q->second)});
                        }
                return std::nullopt;
            });

            run(rep, "wf_middle_x_separates", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    if (c.X(i + 1).empty() || c.X(i).empty() || c.X(i + 2).empty())
                        continue;
                    hit();
                    if (auto p = adjacent_pair(g, c.X(i), c.X(i + 2)))
                        return adj(p->first, p->second);
                }
                return std::nullopt;
            });

            run(rep, "wf_t_three_consecutive_x", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int t = s.t.first(); t >= 0; t = s.t.next(t)) {
                    if (! g.neighbors(t).intersects(c.x))
                        continue;
                    hit();
                    for (int i = 0; i < 5; ++i) {
                        VertexSet n0 = g.neighbors(t) & c.X(i), n1 = g.neighbors(t) & c.X(i + 1), n2 = g.neighbors(t) & c.X(i + 2);
                        if (! n0.empty() && ! n1.empty() && ! n2.empty())
                            return all({adj(t, n0.first()), adj(t, n1.first()), adj(t, n2.first())});
                    }
                }
                return std::nullopt;
            });

            run(rep, "wf_x_a_max_clique_meets_twice", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    auto ms = maximal_cliques(g, c.X(i) | c.A(i + 2) | c.A(i - 2));
                    int h = 0;
                    for (auto & m : ms)
                        h = std::max(h, m.size());
                    VertexSet r = c.RA(i + 2) | c.RA(i - 2);
                    for (auto & m : ms) {
                        if (m.size() != h || ! m.intersects(c.A(i + 2)) || ! m.intersects(c.A(i - 2)))
                            continue;
                        hit();
                        if ((m & r).size() < 2)
                            return missed(2, m, r);
                    }
                }
                return std::nullopt;
            });

            run(rep, "wf_x_a_clique_forced", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int d : sides) {
                        // the hypothesis only gets easier on larger cliques, so X_i-cliques suffice
                        auto & aj = c.A(i + d);
                        auto & ak = c.A(i - d);
                        for (auto & k : c.XC(i)) {
                            vector<Witness> parts;
                            bool holds = true;
                            for (int a = aj.first(); a >= 0 && holds; a = aj.next(a)) {
                                VertexSet miss = k - g.neighbors(a);
                                if (miss.empty())
                                    holds = false;
                                else
                                    parts.push_back(nonadj(a, miss.first()));
                            }
                            if (! holds)
                                continue;
                            hit();
                            if (auto p = nonadjacent_pair(g, ak, ak)) {
                                parts.push_back(clique(k));
                                parts.push_back(nonadj(p->first, p->second));
                                return all(std::move(parts));
                            }
                        }
                    }
                return std::nullopt;
            });

            run(rep, "wf_x_a_missing_side", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    auto ms = maximal_cliques(g, c.X(i) | c.A(i + 2) | c.A(i - 2));
                    int h = 0;
                    for (auto & m : ms)
                        h = std::max(h, m.size());
                    VertexSet r2 = c.RA(i + 2) | c.RA(i - 2);
                    VertexSet r3 = r2 | r_set(g, c.X(i));
                    for (auto & m : ms) {
                        hit();
                        if (! m.intersects(r2))
                            return missed(1, m, r2);
                        if (m.size() != h)
                            continue;
                        if ((m & r3).size() < 2)
                            return missed(2, m, r3);
                        for (int d : sides) {
                            auto & aj = c.A(i + d);
                            auto & ak = c.A(i - d);
                            if (m.intersects(aj))
                                continue;
                            if (! m.intersects(c.X(i)))
                                return all({clique(m), anticomplete(m, c.X(i))});
                            if (auto p = nonadjacent_pair(g, ak, ak))
                                return all({clique(m), nonadj(p->first, p->second)});
                            if (auto a = (ak - m).first(); a >= 0) {
                                if (auto p = nonadjacent_pair(g, VertexSet{a}, m))
                                    return all({clique(m), nonadj(p->first, p->second)});
                                return clique(m | VertexSet{a});
                            }
                        }
                    }
                }
                return std::nullopt;
            });

            run(rep, "wf_y_pure_on_a_cliques", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.Y(i).first(); u >= 0; u = c.Y(i).next(u))
                        for (int d : sides)
                            for (auto & k : c.AC(i + d))
                                if (g.neighbors(u).intersects(k)) {
                                    hit();
                                    if (auto w = mixed_on(g, u, k))
                                        return w;
                                }
                return std::nullopt;
            });

            run(rep, "wf_y_one_a_clique", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.Y(i).first(); u >= 0; u = c.Y(i).next(u))
                        for (int d : sides) {
                            hit();
                            if (auto w = exactly_one(g, VertexSet{u}, c.AC(i + d)))
                                return w;
                        }
                return std::nullopt;
            });

            run(rep, "wf_y_not_complete_forces", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.Y(i).first(); u >= 0; u = c.Y(i).next(u)) {
                        auto miss = nonadjacent_pair(g, VertexSet{u}, c.A(i - 1) | c.A(i + 1));
                        if (! miss)
                            continue;
                        hit();
                        auto base = nonadj(u, miss->second);
                        if (auto p = nonadjacent_pair(g, VertexSet{u}, c.A(i + 2) | c.A(i - 2)))
                            return all({base, nonadj(p->first, p->second)});
                        for (int d : sides)
                            if (auto p = nonadjacent_pair(g, c.A(i + d), c.A(i + d)))
                                return all({base, nonadj(p->first, p->second)});
                    }
                return std::nullopt;
            });

            run(rep, "wf_y_clique", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    if (c.Y(i).size() < 2)
                        continue;
                    hit();
                    if (auto p = nonadjacent_pair(g, c.Y(i), c.Y(i)))
                        return nonadj(p->first, p->second);
                }
                return std::nullopt;
            });

            run(rep, "wf_y_complete_adjacent_y", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    if (c.Y(i).empty() || c.Y(i + 1).empty())
                        continue;
                    hit();
                    if (auto p = nonadjacent_pair(g, c.Y(i), c.Y(i + 1)))
                        return nonadj(p->first, p->second);
                }
                return std::nullopt;
            });

            run(rep, "wf_t_sees_x", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int t = s.t.first(); t >= 0; t = s.t.next(t)) {
                    hit();
                    if (! g.neighbors(t).intersects(c.x))
                        return anticomplete(VertexSet{t}, c.x);
                }
                return std::nullopt;
            });

            run(rep, "wf_y_pair_one_a_clique", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    VertexSet u = c.Y(i) | c.Y(i + 1);
                    if (u.empty())
                        continue;
                    hit();
                    if (auto w = exactly_one(g, u, c.AC(i - 2)))
                        return w;
                }
                return std::nullopt;
            });

            run(rep, "wf_a_cliques_have_y_hub", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    if (c.Y(i).empty())
                        continue;
                    for (int d : {1, -1})
                        for (auto & k : c.AC(i + d)) {
                            hit();
                            vector<Witness> parts;
                            for (int a = k.first(); a >= 0; a = k.next(a)) {
                                auto p = nonadjacent_pair(g, VertexSet{a}, c.Y(i));
                                if (! p)
                                    break;
                                parts.push_back(nonadj(a, p->second));
                            }
                            if (int(parts.size()) == k.size())
                                return all(std::move(parts));
                        }
                }
                return std::nullopt;
            });

            run(rep, "wf_y_anticomplete_x", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    VertexSet xs = c.X(i) | c.X(i + 2);
                    if (c.Y(i + 1).empty() || xs.empty())
                        continue;
                    hit();
                    if (auto p = adjacent_pair(g, c.Y(i + 1), xs))
                        return adj(p->first, p->second);
                }
                return std::nullopt;
            });

            run(rep, "wf_x_or_far_y_empty", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    if (c.X(i).empty())
                        continue;
                    hit();
                    if (auto y = (c.Y(i + 2) | c.Y(i - 2)).first(); y >= 0)
                        return all({membership(g, s, c.X(i).first()), membership(g, s, y)});
                }
                return std::nullopt;
            });

            run(rep, "wf_x_y_common_neighbours", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i)
                    for (int u = c.Y(i + 1).first(); u >= 0; u = c.Y(i + 1).next(u))
                        for (auto [xi, parts] : {std::pair{i, std::array{0, 2, -2}}, std::pair{i + 2, std::array{0, 2, -1}}})
                            for (int v = c.X(xi).first(); v >= 0; v = c.X(xi).next(v)) {
                                hit();
                                for (int d : parts)
                                    if (! (g.neighbors(u) & g.neighbors(v)).intersects(c.A(i + d)))
                                        return no_common(u, v, c.A(i + d));
                            }
                return std::nullopt;
            });

            run(rep, "wf_x_forces_y_complete", applies, [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    VertexSet ys = c.Y(i + 1) | c.Y(i - 1);
                    if (c.X(i).empty() || ys.empty())
                        continue;
                    hit();
                    if (auto p = nonadjacent_pair(g, ys, c.A(i)))
                        return all({membership(g, s, c.X(i).first()), nonadj(p->first, p->second)});
                }
                return std::nullopt;
            });

            run(rep, "wf_x_separates_far_y", applies && ! c.x.empty(), [&](const Hit & hit) -> optional<Witness> {
                for (int i = 0; i < 5; ++i) {
                    if (c.Y(i).empty() || c.Y(i + 2).empty())
                        continue;
                    hit();
                    if (auto p = adjacent_pair(g, c.Y(i), c.Y(i + 2)))
                        return adj(p->first, p->second);
                }
                return std::nullopt;
            });

            run(rep, "wf_t_not_both_y", applies && ! c.x.empty(), [&](const Hit & hit) -> optional<Witness> {
                for (int t = s.t.first(); t >= 0; t = s.t.next(t)) {
                    if (! g.neighbors(t).intersects(c.y))
                        continue;
                    hit();
                    for (int i = 0; i < 5; ++i) {
                        VertexSet n1 = g.neighbors(t) & c.Y(i - 1), n2 = g.neighbors(t) & c.Y(i + 1);
                        if (! n1.empty() && ! n2.empty())
                            return all({adj(t, n1.first()), adj(t, n2.first())});
                    }
                }
                return std::nullopt;
            });

            // outside the 3K1-free branch: of two nonempty Y_i, Y_{i+2}, one is complete to A_{i+1}
            bool graded = true;
            for (int i = 0; i < 5; ++i)
                if (! c.Y(i).empty() && ! c.Y(i + 2).empty())
                    graded = graded && (complete_to(g, c.Y(i), c.A(i + 1)) || complete_to(g, c.Y(i + 2), c.A(i + 1)));
            run(rep, "wf_aa_meets_twice", applies && graded, [&](const Hit & hit) -> optional<Witness> {
                auto aa = aa_sets(g, s);
                for (int i = 0; i < 5; ++i)
                    for (int d : {1, -1}) {
                        VertexSet u = c.A(i - d) | c.A(i - 2 * d) | c.Y(i) | c.Y(i + d);
                        VertexSet r = aa[mod5(i - d)] | aa[mod5(i - 2 * d)];
                        for (auto & m : maximal_cliques(g, u)) {
                            hit();
                            if ((m & r).size() < 2)
                                return missed(2, m, r);
                        }
                    }
                return std::nullopt;
            });
        }
    }

    auto recheck_witness(const Graph & g, const Witness & w) -> bool
    {
        auto & v = w.vertices;
        for (int u : v)
            if (u < -1 || u >= g.n())
                return false;
        auto split = [&](size_t from) {
            std::pair<VertexSet, VertexSet> r;
            bool second = false;
            for (size_t i = from; i < v.size(); ++i) {
                if (v[i] < 0)
                    second = true;
                else
                    (second ? r.second : r.first).insert(v[i]);
            }
            return r;
        };
        if (w.claim == "all") {
            for (auto & p : w.parts)
                if (! recheck_witness(g, p))
                    return false;
            return ! w.parts.empty();
        }
        if (w.claim == "adjacent")
            return v.size() == 2 && v[0] >= 0 && v[1] >= 0 && g.adjacent(v[0], v[1]);
        if (w.claim == "nonadjacent")
            return v.size() == 2 && v[0] >= 0 && v[1] >= 0 && v[0] != v[1] && ! g.adjacent(v[0], v[1]);
        if (w.claim == "induced_p3")
            return v.size() == 3 && v[0] >= 0 && v[1] >= 0 && v[2] >= 0 && v[0] != v[2] && g.adjacent(v[0], v[1]) && g.adjacent(v[1], v[2]) &&
                ! g.adjacent(v[0], v[2]);
        if (w.claim == "complete" || w.claim == "anticomplete") {
            auto [s, t] = split(0);
            if (s.intersects(t))
                return false;
            return w.claim == "complete" ? complete_to(g, s, t) : anticomplete_to(g, s, t);
        }
        if (w.claim == "clique")
            return is_clique(g, split(0).first);
        if (w.claim == "no_common_neighbour") {
            if (v.size() < 2 || v[0] < 0 || v[1] < 0)
                return false;
            auto s = split(2).first;
            return ! (g.neighbors(v[0]) & g.neighbors(v[1])).intersects(s);
        }
        if (w.claim == "clique_missed") {
            if (v.empty() || v[0] < 0)
                return false;
            auto [m, s] = split(1);
            return is_clique(g, m) && (m & s).size() < v[0];
        }
        return false;
    }

    auto PropositionReport::all_passed() const -> bool
    {
        for (auto & r : results)
            if (! r.passed)
                return false;
        return true;
    }

    auto PropositionReport::failures() const -> vector<const PropositionResult *>
    {
        vector<const PropositionResult *> r;
        for (auto & x : results)
            if (! x.passed)
                r.push_back(&x);
        return r;
    }

    auto PropositionReport::find(const string & key) const -> const PropositionResult *
    {
        for (auto & r : results)
            if (r.key == key)
                return &r;
        return nullptr;
    }

    auto proposition_keys() -> const vector<string> &
    {
        static const vector<string> keys = [] {
            // a small in-class graph runs every check, so the key order comes from the checker itself
            auto g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
            vector<string> r;
            for (auto & x : assert_c5_propositions(g, build_c5_structure(g, {0, 1, 2, 3, 4})).results)
                r.push_back(x.key);
            return r;
        }();
        return keys;
    }

    auto a_star(const Graph & g, const C5Structure & s) -> std::array<optional<VertexSet>, 5>
    {
        std::array<optional<VertexSet>, 5> r;
        if (s.z.empty())
            return r;
        for (int i = 0; i < 5; ++i)
            for (auto & k : components(g, s.a[i]))
                if (complete_to(g, s.z, k) && anticomplete_to(g, s.z, s.a[i] - k))
                    r[i] = k;
        return r;
    }

    auto aa_sets(const Graph & g, const C5Structure & s) -> Pentagon
    {
        Pentagon r;
        for (int j = 0; j < 5; ++j) {
            VertexSet ys = s.y[mod5(j - 1)] | s.y[mod5(j + 1)];
            VertexSet picked;
            bool ok = ! ys.empty();
            for (auto & k : components(g, s.a[j])) {
                if (! ok)
                    break;
                VertexSet hub;
                k.for_each([&](int a) {
                    if (ys.subset_of(g.neighbors(a)))
                        hub.insert(a);
                });
                if (hub.empty())
                    ok = false;
                else
                    picked.insert(hub.first());
            }
            r[j] = ok ? picked : r_set(g, s.a[j]);
        }
        return r;
    }

    auto assert_c5_propositions(const Graph & g, const C5Structure & s) -> PropositionReport
    {
        PropositionReport rep;
        Ctx c{g, s};
        auto wf = w_sets(g, s, c.omega);
        check_partition(rep, c);
        check_section_facts(rep, c, wf);

        bool wheel = false;
        VertexSet base;
        for (int v : s.base)
            base.insert(v);
        s.z.for_each([&](int z) { wheel = wheel || base.subset_of(g.neighbors(z)); });
        check_wheel_facts(rep, c, wheel);
        check_wheel_free_facts(rep, c, ! contains(g, Pattern{PatternKind::five_wheel}));
        return rep;
    }

    auto w_sets(const Graph & g, const C5Structure & s, int omega) -> std::array<WFamily, 5>
    {
        std::array<WFamily, 5> w;
        for (int i = 0; i < 5; ++i)
            for (auto & k : components(g, s.x[i]))
                for (auto & q : components(g, s.a[i]))
                    if ((k | q).size() == omega && is_clique(g, k | q))
                        w[i].push_back({k, q});
        return w;
    }

    auto w_sets(const Graph & g, const C5Structure & s) -> std::array<WFamily, 5>
    {
        return w_sets(g, s, omega(g));
    }

    auto to_json(nlohmann::json & j, const C5Structure & s) -> void
    {
        j = {{"base", s.base}, {"a", s.a}, {"x", s.x}, {"y", s.y}, {"z", s.z}, {"t", s.t}};
    }

    auto to_json(nlohmann::json & j, const Witness & w) -> void
    {
        j = {{"claim", w.claim}, {"vertices", w.vertices}};
        if (! w.parts.empty())
            j["parts"] = w.parts;
    }

    auto to_json(nlohmann::json & j, const PropositionReport & r) -> void
    {
        j = nlohmann::json::array();
        for (auto & x : r.results) {
            nlohmann::json e = {{"key", x.key}, {"passed", x.passed}, {"vacuous", x.vacuous}};
            if (x.witness)
                e["witness"] = *x.witness;
            j.push_back(e);
        }
    }
}
