#include "nice_frame.hpp"

#include <p5w4/errors.hpp>
#include <p5w4/json.hpp>

using std::vector;

namespace p5w4
{
    using detail::Case;
    using detail::Frame;

    namespace
    {
        auto fact_trap(const std::string & fact, const Graph & g, const C5Structure & s) -> BugTrap
        {
            return BugTrap{"wheel case: " + fact, {{"graph", g}, {"structure", s}}};
        }
    }

    auto build_wheel_workspace(const Graph & g, const C5Structure & s) -> WheelCaseWorkspace
    {
        WheelCaseWorkspace w;
        w.omega = omega(g);
        VertexSet base;
        for (int v : s.base)
            base.insert(v);
        if (s.z.empty() || ! is_clique(g, s.z) || ! complete_to(g, s.z, base))
            throw fact_trap("Z is not a nonempty clique complete to the rim", g, s);
        if (! s.y_all().empty())
            throw fact_trap("Y is not empty", g, s);
        auto star = a_star(g, s);
        for (int i = 0; i < 5; ++i) {
            if (! star[i])
                throw fact_trap("no A_" + std::to_string(i + 1) + "-clique carries Z", g, s);
            w.a_star[i] = *star[i];
        }
        if (! is_p3_free(g, s.t))
            throw fact_trap("G[T] has an induced P3", g, s);
        w.t_cliques = components(g, s.t);
        std::tie(w.l, w.l2) = detail::transversals(w.t_cliques);
        w.w = w_sets(g, s, w.omega);
        return w;
    }

    auto certify_5wheel_case(const Graph & g, const C5Structure & s, WheelCaseWorkspace & w) -> NiceCertificate
    {
        auto W = [&](const Frame & f, int p) -> const WFamily & { return w.w[f.m.at(p)]; };
        auto triple = [](const Frame & f, int j) { return ! f.X(j).empty() && ! f.X(j + 2).empty() && ! f.X(j - 2).empty(); };
        bool t_empty = s.t.empty();
        bool any_triple = false;
        for (int j = 0; j < 5; ++j)
            any_triple = any_triple || triple(Frame{g, s, {}}, j);
        // some T-clique T* with Z u T* a maximum clique
        bool zt = false;
        for (auto & q : w.t_cliques)
            zt = zt || ((s.z | q).size() == w.omega && is_clique(g, s.z | q));
        // X lies in X_1, or in X_5 u X_1 u X_2 meeting both X_5 and X_1 u X_2
        auto spread = [&](const Frame & f) {
            VertexSet x = s.x_all();
            if (! f.X(1).empty() && x.subset_of(f.X(1)))
                return true;
            return ! f.X(5).empty() && ! (f.X(1) | f.X(2)).empty() && x.subset_of(f.X(5) | f.X(1) | f.X(2));
        };

        vector<Case> cases{
            {"t_empty", false,
             [&](const Frame & f) { return t_empty && f.clique(f.A(3)) && W(f, 5).empty(); },
             [&](const Frame & f) {
                 return NiceCertificate{f.RA(1) | f.RA(3) | f.RX(2), f.RA(2) | f.RA(4) | f.RX(3), f.RA(5) | f.RX(1) | f.RX(4)};
             }},
            {"x_triple", false,
             [&](const Frame & f) { return ! t_empty && triple(f, 1) && ! zt; },
             [&](const Frame & f) {
                 int k = 1;
                 for (int i = 5; i >= 1; --i)
                     if (! W(f, i).empty())
                         k = i;
                 VertexSet rt = f.R(s.t);
                 return NiceCertificate{f.RA(k) | f.RA(k + 2) | rt,
                                        f.RA(k + 1) | f.RA(k - 2) | f.RX(k + 2),
                                        f.RA(k - 1) | f.RX(k) | f.RX(k - 2)};
             }},
            {"x_triple_zt_maximum", false,
             [&](const Frame & f) { return ! t_empty && triple(f, 1) && zt; },
             [&](const Frame & f) {
                 return NiceCertificate{f.RA(1) | f.RA(3), f.RA(2) | f.RA(5) | w.l, f.RA(4) | w.l2};
             }},
            {"no_x_triple_w1", false,
             [&](const Frame & f) { return ! t_empty && ! any_triple && spread(f) && f.clique(f.A(3)) && ! W(f, 1).empty(); },
             [&](const Frame & f) {
                 return NiceCertificate{f.RA(2) | f.RA(5) | f.RX(1), f.RA(1) | f.RA(4) | w.l, f.RA(3) | w.l2};
             }},
            {"no_x_triple", false,
             [&](const Frame & f) { return ! t_empty && ! any_triple && spread(f) && f.clique(f.A(3)) && W(f, 1).empty(); },
             [&](const Frame & f) {
                 return NiceCertificate{f.RA(1) | f.RX(2) | f.RX(5), f.RA(2) | f.RA(4) | w.l, f.RA(3) | f.RA(5) | w.l2};
             }},
        };
        if (auto c = detail::run_cases(g, s, cases, w.record))
            return *c;
        throw BugTrap{"wheel case: no construction applies", {{"graph", g}, {"structure", s}, {"workspace", w}}};
    }
}
