#include "nice_frame.hpp"

#include <p5w4/errors.hpp>
#include <p5w4/json.hpp>

#include <optional>

using std::optional;
using std::vector;

namespace p5w4
{
    using detail::Case;
    using detail::Frame;

    namespace
    {
        auto clique_of(const Graph & g, const VertexSet & u, int v) -> VertexSet
        {
            for (auto & k : components(g, u))
                if (k.contains(v))
                    return k;
            return {};
        }

        // the clique of a P3-free set u that s is complete to, s being anticomplete to the rest
        auto carrier(const Graph & g, const VertexSet & s, const VertexSet & u) -> VertexSet
        {
            for (auto & k : components(g, u))
                if (complete_to(g, s, k) && anticomplete_to(g, s, u - k))
                    return k;
            return {};
        }

        auto has_edge(const Graph & g, const VertexSet & a, const VertexSet & b) -> bool
        {
            return ! anticomplete_to(g, a, b);
        }

        // an X_1-X_3 edge with its two cliques and the A_1-, A_3-cliques they are complete to
        struct XEdge
        {
            VertexSet q1, q3, a1s, a3s;
        };

        auto x_edge(const Frame & f) -> optional<XEdge>
        {
            for (int x = f.X(1).first(); x >= 0; x = f.X(1).next(x)) {
                VertexSet nb = f.g.neighbors(x) & f.X(3);
                if (nb.empty())
                    continue;
                XEdge e;
                e.q1 = clique_of(f.g, f.X(1), x);
                e.q3 = clique_of(f.g, f.X(3), nb.first());
                e.a1s = carrier(f.g, e.q3, f.A(1));
                e.a3s = carrier(f.g, e.q1, f.A(3));
                return e;
            }
            return std::nullopt;
        }

        auto pure_on_cliques(const Graph & g, const VertexSet & s, const VertexSet & u) -> bool
        {
            for (auto & k : components(g, u))
                if (relation(g, s, k) == Relation::mixed)
                    return false;
            return true;
        }
    }

    auto build_wheelfree_workspace(const Graph & g, const C5Structure & s) -> WheelFreeWorkspace
    {
        WheelFreeWorkspace w;
        if (contains(g, Pattern{PatternKind::five_wheel}))
            throw MembershipError{"wheel-free case called on a graph with a 5-wheel"};
        if (! s.z.empty())
            throw BugTrap{"wheel-free case: Z is not empty", {{"graph", g}, {"structure", s}}};
        if (! is_p3_free(g, s.t))
            throw BugTrap{"wheel-free case: G[T] has an induced P3", {{"graph", g}, {"structure", s}}};
        w.omega = omega(g);
        for (int j = 0; j < 5; ++j) {
            VertexSet ys = s.y[mod5(j - 2)] | s.y[mod5(j + 2)];
            if (ys.empty())
                continue;
            if (auto k = carrier(g, ys, s.a[j]); ! k.empty())
                w.b[j] = k;
        }
        w.aa = aa_sets(g, s);
        w.t_cliques = components(g, s.t);
        std::tie(w.l, w.l2) = detail::transversals(w.t_cliques);
        w.w = w_sets(g, s, w.omega);
        for (int i = 0; i < 5; ++i)
            if (! s.x[i].empty())
                w.j.push_back(i);
        return w;
    }

    auto certify_wheelfree_c5_case(const Graph & g, const C5Structure & s, WheelFreeWorkspace & w) -> NiceOrQuasiLine
    {
        if (contains(g, Pattern{PatternKind::five_wheel}))
            throw MembershipError{"wheel-free case called on a graph with a 5-wheel"};
        auto W = [&](const Frame & f, int p) -> const WFamily & { return w.w[f.m.at(p)]; };
        auto AA = [&](const Frame & f, int p) -> const VertexSet & { return w.aa[f.m.at(p)]; };
        auto cert = [](VertexSet a, VertexSet b, VertexSet c) { return NiceCertificate{a, b, c}; };
        VertexSet x = s.x_all(), y = s.y_all();
        bool t_empty = s.t.empty();
        vector<Case> cases;

        if (x.empty() && y.empty()) {
            cases.push_back({"empty_xy", false, [](const Frame &) { return true; },
                             [&](const Frame & f) { return cert(f.RA(1) | f.RA(3), f.RA(2) | f.RA(4), f.RA(5)); }});
        }
        else if (y.empty()) {
            auto edge = [&](const Frame & f) { return x_edge(f); };
            cases.push_back({"x_a_clique_missing_side", false,
                             [&](const Frame & f) { return omega_of(g, f.X(1) | f.A(3)) == w.omega; },
                             [&](const Frame & f) {
                                 return cert(f.RA(2) | f.RA(5) | f.RX(1), f.RA(1) | f.RA(3) | f.RX(2) | w.l, f.RA(4) | w.l2);
                             }});

            // an X_1-X_3 edge, T empty
            auto pure = [&](const Frame & f, const XEdge & e) {
                return pure_on_cliques(g, e.q1, f.A(4)) && pure_on_cliques(g, e.q3, f.A(5));
            };
            auto max_with = [&](const VertexSet & star, const VertexSet & part) {
                for (auto & d : components(g, part))
                    if ((star | d).size() == w.omega && is_clique(g, star | d))
                        return true;
                return false;
            };
            auto w1_avoids_star = [&](const Frame & f, const XEdge & e) {
                for (auto & [k, q] : W(f, 1))
                    if (q == e.a1s)
                        return false;
                return true;
            };
            cases.push_back({"x_edge_a2_maximum", false,
                             [&](const Frame & f) {
                                 auto e = edge(f);
                                 return t_empty && e && pure(f, *e) && max_with(e->a1s, f.A(2));
                             },
                             [&](const Frame & f) {
                                 auto e = *edge(f);
                                 return cert(f.RA(2) | f.R(f.X(1) - e.q1) | f.RX(3), f.RA(3) | f.RA(5) | f.RX(4),
                                             f.RA(1) | f.RA(4) | f.RX(5));
                             }});
            auto settled = [&](const Frame & f, const XEdge & e) {
                return t_empty && pure(f, e) && ! max_with(e.a1s, f.A(2)) && ! max_with(e.a3s, f.A(2)) &&
                       w1_avoids_star(f, e);
            };
            cases.push_back({"x_edge_no_a5_maximum", false,
                             [&](const Frame & f) {
                                 auto e = edge(f);
                                 return e && settled(f, *e) && ! max_with(e->a1s, f.A(5));
                             },
                             [&](const Frame & f) {
                                 auto e = *edge(f);
                                 return cert(f.R(f.A(1) - e.a1s) | f.RA(4) | f.R(e.q3) | f.RX(5),
                                             f.RA(2) | f.RX(1) | f.R(f.X(3) - e.q3), f.RA(3) | f.RA(5) | f.RX(4));
                             }});
            cases.push_back({"x_edge_a5_maximum", false,
                             [&](const Frame & f) {
                                 auto e = edge(f);
                                 return e && settled(f, *e) && max_with(e->a1s, f.A(5));
                             },
                             [&](const Frame & f) {
                                 return cert(f.RA(2) | f.RA(4) | f.RX(3), f.RA(3) | f.RA(5) | f.RX(4), f.RA(1) | f.RX(5));
                             }});
            cases.push_back({"x_edge_mixed", false,
                             [&](const Frame & f) {
                                 auto e = edge(f);
                                 return t_empty && e && ! pure_on_cliques(g, e->q3, f.A(5));
                             },
                             [&](const Frame & f) {
                                 return cert(f.RA(5) | f.RX(1) | f.RX(4), f.RA(2) | f.RA(4) | f.RX(3), f.RA(1) | f.RA(3));
                             }});

            // an X_1-X_3 edge, T nonempty
            auto t_split = [&](const Frame & f) {
                VertexSet t1, t2;
                for (auto & q : w.t_cliques) {
                    if (complete_to(g, q, f.X(1) | f.X(4)) && anticomplete_to(g, q, f.X(3) | f.X(5)))
                        t1 |= q;
                    if (complete_to(g, q, f.X(3) | f.X(5)) && anticomplete_to(g, q, f.X(1) | f.X(4)))
                        t2 |= q;
                }
                return std::pair{t1, t2};
            };
            auto both_far = [&](const Frame & f) {
                return ! t_empty && edge(f) && ! f.X(4).empty() && ! f.X(5).empty();
            };
            cases.push_back({"x_edge_t_w5_empty", false,
                             [&](const Frame & f) { return both_far(f) && W(f, 5).empty(); },
                             [&](const Frame & f) {
                                 auto [t1, t2] = t_split(f);
                                 return cert(f.RA(5) | f.RX(1) | f.RX(4) | (w.l & t2), f.RA(2) | f.RA(4) | f.RX(3) | (w.l & t1),
                                             f.RA(1) | f.RA(3) | (w.l2 & t2));
                             }});
            cases.push_back({"x_edge_t_w4_empty", false,
                             [&](const Frame & f) { return both_far(f) && W(f, 4).empty(); },
                             [&](const Frame & f) {
                                 auto [t1, t2] = t_split(f);
                                 return cert(f.RA(4) | f.RX(3) | f.RX(5) | (w.l & t1), f.RA(2) | f.RA(5) | f.RX(1) | (w.l & t2),
                                             f.RA(1) | f.RA(3) | (w.l2 & t1));
                             }});
            cases.push_back({"x_edge_t_x1_x4_edge", false,
                             [&](const Frame & f) {
                                 return ! t_empty && edge(f) && f.X(5).empty() && has_edge(g, f.X(1), f.X(4)) &&
                                        complete_to(g, s.t, f.X(3));
                             },
                             [&](const Frame & f) {
                                 return cert(f.RA(2) | f.RA(5) | f.RX(1), f.RA(4) | f.RX(3), f.RA(1) | f.RA(3) | f.R(s.t));
                             }});
            cases.push_back({"x_edge_t", false,
                             [&](const Frame & f) {
                                 return ! t_empty && edge(f) && f.X(5).empty() && ! has_edge(g, f.X(1), f.X(4));
                             },
                             [&](const Frame & f) {
                                 return cert(f.RA(5) | f.RX(1) | f.RX(4), f.RA(2) | f.RA(4) | f.RX(3), f.RA(1) | f.RA(3) | f.R(s.t));
                             }});

            cases.push_back({"x_single_part", false,
                             [&](const Frame & f) { return x.subset_of(f.X(1)); },
                             [&](const Frame & f) {
                                 return cert(f.RX(1) | f.RA(2) | f.RA(5), f.RA(1) | f.RA(3) | w.l, f.RA(4) | w.l2);
                             }});
            bool far_free = true;
            for (int i = 0; i < 5; ++i)
                far_free = far_free && ! has_edge(g, s.x[i], s.x[mod5(i + 2)]);
            auto maximum = max_cliques(g);
            // for p = l +- 1, R_{X_p} u R_A meets every maximum clique inside A u X_l u X_p twice
            auto l_side_twice = [&, maximum](const Frame & f) {
                VertexSet a, ra;
                for (int k = 1; k <= 5; ++k) {
                    a |= f.A(k);
                    ra |= f.RA(k);
                }
                for (int p : {2, 5}) {
                    auto region = a | f.X(1) | f.X(p);
                    auto hit = ra | f.RX(p);
                    for (auto & m : maximum)
                        if (m.subset_of(region) && (m & hit).size() < 2)
                            return false;
                }
                return true;
            };
            // l = 1 with W_1 empty and the two-sided meeting condition; with T, X_1 empty and every
            // T-clique complete to X_2 u X_4 u X_5, anticomplete to X_3
            cases.push_back({"x_general", false,
                             [&, l_side_twice](const Frame & f) {
                                 if (w.j.size() < 2 || ! far_free || ! W(f, 1).empty() || ! l_side_twice(f))
                                     return false;
                                 if (t_empty)
                                     return true;
                                 if (! f.X(1).empty())
                                     return false;
                                 for (auto & q : w.t_cliques)
                                     if (! complete_to(g, q, f.X(2) | f.X(4) | f.X(5)) || ! anticomplete_to(g, q, f.X(3)))
                                         return false;
                                 return true;
                             },
                             [&](const Frame & f) {
                                 return cert(f.RX(5) | f.RA(1) | f.RX(2), f.RA(2) | f.RX(3) | f.RA(4) | f.R(s.t),
                                             f.RA(3) | f.RX(4) | f.RA(5));
                             }});
        }
        else if (x.empty()) {
            bool triad_free_route = false;
            for (int i = 0; i < 5; ++i) {
                auto & yi = s.y[i];
                auto & yk = s.y[mod5(i + 2)];
                auto & mid = s.a[mod5(i + 1)];
                if (yi.empty() || yk.empty())
                    continue;
                if (has_edge(g, yi, yk) || (! complete_to(g, yi, mid) && ! complete_to(g, yk, mid)))
                    triad_free_route = true;
            }
            if (triad_free_route) {
                if (! is_3k1_free(g))
                    throw BugTrap{"wheel-free case: the triad-free route fired on a graph with a triad",
                                  {{"graph", g}, {"structure", s}, {"workspace", w}}};
                auto r = certify_3k1_case(g);
                w.record.tag = "y_triad_free";
                return r;
            }
            cases.push_back({"y_only", false, [](const Frame &) { return true; },
                             [&](const Frame & f) { return cert(AA(f, 1) | AA(f, 3), AA(f, 2) | AA(f, 4), AA(f, 5)); }});
        }
        else {
            bool split = true;
            for (int i = 0; i < 5; ++i)
                split = split && (s.x[i].empty() || s.y[i].empty());
            cases.push_back({"xy_split_t_empty", false,
                             [&](const Frame & f) { return split && t_empty && ! f.Y(2).empty() && ! f.X(1).empty(); },
                             [&](const Frame & f) {
                                 return cert(f.RA(2) | f.RA(5) | f.RX(1), f.RA(1) | AA(f, 3), AA(f, 4) | f.RX(3));
                             }});
            cases.push_back({"xy_split_t", false,
                             [&](const Frame & f) {
                                 return split && ! t_empty && ! f.Y(2).empty() && ! (f.X(1) | f.X(3)).empty() && f.clique(f.A(5)) &&
                                        w.b[f.m.at(4)];
                             },
                             [&](const Frame & f) {
                                 return cert(f.RA(2) | f.RA(5) | f.RX(1), f.RA(1) | AA(f, 3) | f.R(s.t),
                                             f.R(f.A(4) - *w.b[f.m.at(4)]) | f.RX(3) | f.RY(2));
                             }});
            cases.push_back({"xy_shared_sparse", false,
                             [&](const Frame & f) {
                                 return ! f.X(1).empty() && ! f.Y(1).empty() && (f.X(2) | f.X(5)).empty();
                             },
                             [&](const Frame & f) {
                                 return cert(AA(f, 2) | AA(f, 5) | f.RX(1), AA(f, 1) | AA(f, 4) | w.l, AA(f, 3) | w.l2);
                             }});
            cases.push_back({"xy_shared", false,
                             [&](const Frame & f) { return ! f.X(1).empty() && ! f.Y(1).empty() && ! f.X(5).empty(); },
                             [&](const Frame & f) {
                                 return cert(AA(f, 2) | AA(f, 5) | f.RX(1) | w.l, f.RA(1) | f.RA(4) | f.RX(5), f.RA(3) | w.l2);
                             }});
        }

        if (auto c = detail::run_cases(g, s, cases, w.record))
            return *c;
        throw BugTrap{"wheel-free case: no construction applies", {{"graph", g}, {"structure", s}, {"workspace", w}}};
    }
}
