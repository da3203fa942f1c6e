#include <p5w4/errors.hpp>
#include <p5w4/json.hpp>
#include <p5w4/nice.hpp>

using std::array;
using std::vector;

namespace p5w4
{
    namespace
    {
        constexpr auto mod7(int i) -> int { return ((i % 7) + 7) % 7; }

        // B_i in the complement h: a neighbour in each of A_i..A_{i+3}, none in A_{i-3}..A_{i-1}
        auto b_sets(const Graph & h, const array<VertexSet, 7> & a, const VertexSet & rest) -> array<VertexSet, 7>
        {
            array<VertexSet, 7> b;
            for (int v = rest.first(); v >= 0; v = rest.next(v))
                for (int i = 0; i < 7; ++i) {
                    bool in = true;
                    for (int k = 0; k < 4; ++k)
                        in = in && h.neighbors(v).intersects(a[mod7(i + k)]);
                    for (int k = 1; k <= 3; ++k)
                        in = in && ! h.neighbors(v).intersects(a[mod7(i - k)]);
                    if (in)
                        b[i].insert(v);
                }
            return b;
        }

        auto trap(const std::string & fact, const Graph & g, const C7Workspace & w) -> BugTrap
        {
            return BugTrap{"C7 complement case: " + fact, {{"graph", g}, {"workspace", w}}};
        }
    }

    auto hstar_graph() -> Graph
    {
        vector<std::pair<int, int>> e;
        for (int i = 0; i < 7; ++i) {
            e.push_back({i, (i + 1) % 7});
            e.push_back({i, (i + 2) % 7});
        }
        for (int v : {0, 1, 4})
            e.push_back({7, v});
        for (int v : {4, 5, 1})
            e.push_back({8, v});
        return Graph::from_edges(9, e);
    }

    auto build_c7_structure(const Graph & g) -> C7Workspace
    {
        auto emb = find_induced(g, Pattern{PatternKind::c7_complement});
        if (! emb)
            throw MembershipError{"graph has no induced C7 complement"};
        auto h = complement(g);
        C7Workspace w;
        for (int i = 0; i < 7; ++i) {
            w.base[i] = (*emb)[i];
            w.a[i] = {(*emb)[i]};
        }

        // grow A to a maximal family: complete to A_{i-1} u A_{i+1}, anticomplete to the others
        for (bool grew = true; grew;) {
            grew = false;
            VertexSet used;
            for (auto & p : w.a)
                used |= p;
            for (int v = 0; v < g.n(); ++v) {
                if (used.contains(v))
                    continue;
                for (int i = 0; i < 7; ++i) {
                    VertexSet far;
                    for (int k = 2; k <= 5; ++k)
                        far |= w.a[mod7(i + k)];
                    if (complete_to(h, {v}, w.a[mod7(i - 1)] | w.a[mod7(i + 1)]) && anticomplete_to(h, {v}, far)) {
                        w.a[i].insert(v);
                        used.insert(v);
                        grew = true;
                        break;
                    }
                }
            }
        }

        VertexSet in_a;
        for (auto & p : w.a)
            in_a |= p;
        VertexSet rest = g.vertices() - in_a;
        for (int v = rest.first(); v >= 0; v = rest.next(v)) {
            bool all = true;
            for (auto & p : w.a)
                all = all && h.neighbors(v).intersects(p);
            if (all)
                w.d.insert(v);
        }
        w.b = b_sets(h, w.a, rest - w.d);
        VertexSet covered = in_a | w.d;
        for (auto & p : w.b)
            covered |= p;
        if (covered != g.vertices())
            throw trap("vertices outside A u B u D: " + (g.vertices() - covered).to_string(), g, w);
        if (! w.d.empty())
            throw trap("D is not empty", g, w);
        for (int i = 0; i < 7; ++i)
            if (! is_stable(h, w.a[i]))
                throw trap("A_" + std::to_string(i + 1) + " is not stable in the complement", g, w);

        // relabel the u's so that only B_5 and B_6 can be nonempty
        bool placed = false;
        for (int k = 0; k < 14 && ! placed; ++k) {
            int r = k % 7;
            bool refl = k >= 7;
            array<VertexSet, 7> a2;
            for (int i = 0; i < 7; ++i)
                a2[mod7(refl ? r - i : r + i)] = w.a[i];
            auto b2 = b_sets(h, a2, rest - w.d);
            bool ok = true;
            for (int i = 0; i < 7; ++i)
                ok = ok && (i == 4 || i == 5 || b2[i].empty());
            if (! ok)
                continue;
            placed = true;
            w.rotation = r;
            w.reflected = refl;
            // v_k sits on u_{2k}
            for (int kk = 1; kk <= 7; ++kk)
                w.parts[kk - 1] = a2[mod7(2 * kk - 1)];
            w.parts[7] = b2[4];
            w.parts[8] = b2[5];
        }
        if (! placed)
            throw trap("B is not confined to two consecutive indices", g, w);

        auto hs = hstar_graph();
        for (int p = 0; p < 9; ++p) {
            if (! is_p3_free(g, w.parts[p]))
                throw trap("part Q_v" + std::to_string(p + 1) + " has an induced P3", g, w);
            for (int q = p + 1; q < 9; ++q) {
                if (w.parts[p].empty() || w.parts[q].empty())
                    continue;
                bool ok = hs.adjacent(p, q) ? complete_to(g, w.parts[p], w.parts[q]) : anticomplete_to(g, w.parts[p], w.parts[q]);
                if (! ok)
                    throw trap("parts Q_v" + std::to_string(p + 1) + " and Q_v" + std::to_string(q + 1) + " do not follow H*", g, w);
            }
        }
        return w;
    }

    auto certify_c7c_case(const Graph & g, const C7Workspace & w) -> NiceCertificate
    {
        auto R = [&](int k) { return r_set(g, w.parts[k - 1]); };
        NiceCertificate c{R(1) | R(4) | R(9), R(2) | R(5), R(3) | R(7) | R(8)};
        if (auto v = verify_nice(g, c); ! v.valid())
            throw BugTrap{"C7 complement certificate failed verification", {{"graph", g}, {"workspace", w}, {"verdict", v}}};
        return c;
    }

    auto to_json(nlohmann::json & j, const C7Workspace & w) -> void
    {
        j = {{"base", w.base},
             {"a", w.a},
             {"b", w.b},
             {"d", w.d},
             {"rotation", w.rotation},
             {"reflected", w.reflected},
             {"parts", w.parts}};
    }
}
