#include <p5w4/detect.hpp>
#include <p5w4/errors.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

using std::function;
using std::nullopt;
using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace p5w4
{
    auto limits() -> Limits &
    {
        static Limits l;
        return l;
    }

    namespace
    {
        auto lower(string s) -> string
        {
            for (auto & c : s)
                c = char(std::tolower(static_cast<unsigned char>(c)));
            return s;
        }

        auto odd_length_from(int param) -> int
        {
            int l = std::max(5, param);
            return l % 2 ? l : l + 1;
        }

        using Rows = vector<VertexSet>;

        auto rows_of(const Graph & g) -> Rows
        {
            Rows r(g.n());
            for (int v = 0; v < g.n(); ++v)
                r[v] = g.neighbors(v);
            return r;
        }

        auto complement_rows(const Graph & g) -> Rows
        {
            Rows r(g.n());
            auto all = g.vertices();
            for (int v = 0; v < g.n(); ++v)
                r[v] = all - g.neighbors(v) - VertexSet{v};
            return r;
        }

        // Branch and bound maximum clique with a greedy colouring bound.
        struct CliqueSearch
        {
            const Rows & adj;
            VertexSet best;
            int best_size = 0;
            VertexSet current;
            int current_size = 0;

            auto expand(VertexSet p) -> void
            {
                int order[max_vertices], bound[max_vertices];
                int count = 0, colour = 0;
                VertexSet q = p;
                while (! q.empty()) {
                    ++colour;
                    VertexSet r = q;
                    while (! r.empty()) {
                        int v = r.pop_first();
                        r -= adj[v];
                        q.erase(v);
                        order[count] = v;
                        bound[count] = colour;
                        ++count;
                    }
                }
                for (int i = count - 1; i >= 0; --i) {
                    if (current_size + bound[i] <= best_size)
                        return;
                    int v = order[i];
                    current.insert(v);
                    ++current_size;
                    VertexSet np = p & adj[v];
                    if (np.empty()) {
                        if (current_size > best_size) {
                            best = current;
                            best_size = current_size;
                        }
                    }
                    else
                        expand(np);
                    current.erase(v);
                    --current_size;
                    p.erase(v);
                }
            }
        };

        auto max_clique_rows(const Rows & adj, const VertexSet & within) -> VertexSet
        {
            CliqueSearch s{adj, {}, 0, {}, 0};
            if (! within.empty())
                s.expand(within);
            return s.best;
        }

        auto check_omega_cap(const Graph & g) -> void
        {
            if (g.n() > limits().omega_cap)
                throw ResourceError{"clique search on " + to_string(g.n()) + " vertices exceeds cap " + to_string(limits().omega_cap)};
        }

        // Bron-Kerbosch with pivoting; reports cliques of size >= min_size
        auto bron_kerbosch(const Rows & adj, VertexSet r, int r_size, VertexSet p, VertexSet x, int min_size, vector<VertexSet> & out) -> void
        {
            if (p.empty() && x.empty()) {
                if (r_size >= min_size)
                    out.push_back(r);
                return;
            }
            if (r_size + p.size() < min_size)
                return;
            int pivot = -1, pivot_count = -1;
            (p | x).for_each([&](int u) {
                int c = (p & adj[u]).size();
                if (c > pivot_count) {
                    pivot_count = c;
                    pivot = u;
                }
            });
            VertexSet todo = p - adj[pivot];
            todo.for_each([&](int v) {
                VertexSet nr = r;
                nr.insert(v);
                bron_kerbosch(adj, nr, r_size + 1, p & adj[v], x & adj[v], min_size, out);
                p.erase(v);
                x.insert(v);
            });
        }

        auto sorted(vector<VertexSet> v) -> vector<VertexSet>
        {
            std::sort(v.begin(), v.end());
            return v;
        }
    }

    auto Pattern::name() const -> string
    {
        switch (kind) {
            case PatternKind::p3: return "P3";
            case PatternKind::p4: return "P4";
            case PatternKind::p5: return "P5";
            case PatternKind::c4: return "C4";
            case PatternKind::c5: return "C5";
            case PatternKind::c6: return "C6";
            case PatternKind::c7: return "C7";
            case PatternKind::two_k2: return "TwoK2";
            case PatternKind::three_k1: return "ThreeK1";
            case PatternKind::four_wheel: return "FourWheel";
            case PatternKind::five_wheel: return "FiveWheel";
            case PatternKind::k_wheel: return "KWheel(" + to_string(param) + ")";
            case PatternKind::c7_complement: return "C7Complement";
            case PatternKind::odd_hole: return "OddHole(" + to_string(odd_length_from(param)) + ")";
            case PatternKind::odd_antihole: return "OddAntihole(" + to_string(odd_length_from(param)) + ")";
        }
        return "?";
    }

    auto Pattern::parse(const string & s) -> Pattern
    {
        auto l = lower(s);
        auto with_arg = [&](const string & prefix, int fallback) -> optional<int> {
            if (l == prefix)
                return fallback;
            if (l.size() > prefix.size() + 2 && l.compare(0, prefix.size() + 1, prefix + "(") == 0 && l.back() == ')') {
                auto inner = l.substr(prefix.size() + 1, l.size() - prefix.size() - 2);
                try {
                    size_t pos = 0;
                    int v = std::stoi(inner, &pos);
                    if (pos == inner.size())
                        return v;
                }
                catch (const std::exception &) {
                }
                throw GraphError{"bad pattern argument in '" + s + "'"};
            }
            return nullopt;
        };

        if (l == "p3") return {PatternKind::p3};
        if (l == "p4") return {PatternKind::p4};
        if (l == "p5") return {PatternKind::p5};
        if (l == "c4") return {PatternKind::c4};
        if (l == "c5") return {PatternKind::c5};
        if (l == "c6") return {PatternKind::c6};
        if (l == "c7") return {PatternKind::c7};
        if (l == "twok2" || l == "2k2") return {PatternKind::two_k2};
        if (l == "threek1" || l == "3k1") return {PatternKind::three_k1};
        if (l == "fourwheel" || l == "w4") return {PatternKind::four_wheel};
        if (l == "fivewheel" || l == "w5") return {PatternKind::five_wheel};
        if (l == "c7complement" || l == "c7c") return {PatternKind::c7_complement};
        if (auto k = with_arg("kwheel", -1)) {
            if (*k < 4)
                throw GraphError{"KWheel needs a rim of at least 4"};
            return Pattern::k_wheel(*k);
        }
        if (auto k = with_arg("oddhole", 5))
            return Pattern::odd_hole(*k);
        if (auto k = with_arg("oddantihole", 5))
            return Pattern::odd_antihole(*k);
        throw GraphError{"unknown pattern '" + s + "'"};
    }

    auto path_graph(int k) -> Graph
    {
        GraphBuilder b{k};
        for (int i = 0; i + 1 < k; ++i)
            b.add_edge(i, i + 1);
        return std::move(b).build();
    }

    auto cycle_graph(int k) -> Graph
    {
        GraphBuilder b{k};
        for (int i = 0; i < k; ++i)
            b.add_edge(i, (i + 1) % k);
        return std::move(b).build();
    }

    auto wheel_graph(int k) -> Graph
    {
        GraphBuilder b{k + 1};
        for (int i = 0; i < k; ++i) {
            b.add_edge(i, (i + 1) % k);
            b.add_edge(i, k);
        }
        return std::move(b).build();
    }

    auto pattern_graph(const Pattern & p, int length) -> Graph
    {
        switch (p.kind) {
            case PatternKind::p3: return path_graph(3);
            case PatternKind::p4: return path_graph(4);
            case PatternKind::p5: return path_graph(5);
            case PatternKind::c4: return cycle_graph(4);
            case PatternKind::c5: return cycle_graph(5);
            case PatternKind::c6: return cycle_graph(6);
            case PatternKind::c7: return cycle_graph(7);
            case PatternKind::two_k2: return Graph::from_edges(4, {{0, 1}, {2, 3}});
            case PatternKind::three_k1: return Graph{3};
            case PatternKind::four_wheel: return wheel_graph(4);
            case PatternKind::five_wheel: return wheel_graph(5);
            case PatternKind::k_wheel: return wheel_graph(p.param);
            case PatternKind::c7_complement: return complement(cycle_graph(7));
            case PatternKind::odd_hole: return cycle_graph(length ? length : odd_length_from(p.param));
            case PatternKind::odd_antihole: return complement(cycle_graph(length ? length : odd_length_from(p.param)));
        }
        throw GraphError{"unknown pattern"};
    }

    namespace
    {
        auto search_embedding(const Rows & adj, int n, const Graph & h, bool vertex_transitive) -> optional<vector<int>>
        {
            int k = h.n();
            if (k > n)
                return nullopt;
            vector<int> e(k);
            VertexSet all = VertexSet::range(n);
            VertexSet used;
            function<bool(int)> place = [&](int i) -> bool {
                if (i == k)
                    return true;
                VertexSet cand = all - used;
                for (int j = 0; j < i; ++j) {
                    if (h.adjacent(i, j))
                        cand &= adj[e[j]];
                    else
                        cand -= adj[e[j]];
                }
                if (vertex_transitive && i > 0)
                    cand -= VertexSet::range(e[0] + 1);
                for (int v = cand.first(); v >= 0; v = cand.next(v)) {
                    e[i] = v;
                    used.insert(v);
                    if (place(i + 1))
                        return true;
                    used.erase(v);
                }
                return false;
            };
            if (place(0))
                return e;
            return nullopt;
        }
    }

    auto find_induced(const Graph & g, const Graph & h, bool vertex_transitive) -> optional<vector<int>>
    {
        return search_embedding(rows_of(g), g.n(), h, vertex_transitive);
    }

    auto find_induced(const Graph & g, const Pattern & p) -> optional<vector<int>>
    {
        switch (p.kind) {
            case PatternKind::odd_hole: {
                auto adj = rows_of(g);
                for (int len = odd_length_from(p.param); len <= g.n(); len += 2)
                    if (auto e = search_embedding(adj, g.n(), cycle_graph(len), true))
                        return e;
                return nullopt;
            }
            case PatternKind::odd_antihole: {
                // an antihole of g is a hole of the complement, with the same embedding
                auto adj = complement_rows(g);
                for (int len = odd_length_from(p.param); len <= g.n(); len += 2)
                    if (auto e = search_embedding(adj, g.n(), cycle_graph(len), true))
                        return e;
                return nullopt;
            }
            case PatternKind::c4:
            case PatternKind::c5:
            case PatternKind::c6:
            case PatternKind::c7:
            case PatternKind::c7_complement:
            case PatternKind::three_k1:
                return find_induced(g, pattern_graph(p), true);
            default:
                return find_induced(g, pattern_graph(p), false);
        }
    }

    auto contains(const Graph & g, const Pattern & p) -> bool
    {
        return find_induced(g, p).has_value();
    }

    auto is_p3_free(const Graph & g, const VertexSet & s) -> bool
    {
        bool ok = true;
        s.for_each([&](int v) {
            if (ok && ! is_clique(g, g.neighbors(v) & s))
                ok = false;
        });
        return ok;
    }

    auto clique_partition(const Graph & g, const VertexSet & s) -> vector<VertexSet>
    {
        if (! is_p3_free(g, s))
            throw GraphError{"clique partition of a set containing an induced P3: " + s.to_string()};
        return components(g, s);
    }

    auto r_set(const Graph & g, const VertexSet & u) -> VertexSet
    {
        if (u.empty())
            return {};
        if (is_p3_free(g, u)) {
            VertexSet r;
            for (auto & c : components(g, u))
                r.insert(c.first());
            return r;
        }
        if (u.size() > limits().omega_cap)
            throw ResourceError{"stable set search on " + to_string(u.size()) + " vertices exceeds cap"};
        auto adjc = complement_rows(g);
        int target = max_clique_rows(adjc, u).size();
        VertexSet chosen, cand = u;
        int got = 0;
        for (int v = cand.first(); v >= 0 && got < target; v = cand.next(v)) {
            VertexSet rest = (cand & adjc[v]) - VertexSet::range(v + 1);
            if (got + 1 + max_clique_rows(adjc, rest).size() == target) {
                chosen.insert(v);
                ++got;
                cand = rest | VertexSet{v};
            }
        }
        return chosen;
    }

    auto max_clique(const Graph & g, const VertexSet & within) -> VertexSet
    {
        check_omega_cap(g);
        return max_clique_rows(rows_of(g), within);
    }

    auto omega_of(const Graph & g, const VertexSet & within) -> int
    {
        return max_clique(g, within).size();
    }

    auto omega(const Graph & g) -> int
    {
        return omega_of(g, g.vertices());
    }

    auto max_cliques(const Graph & g) -> vector<VertexSet>
    {
        check_omega_cap(g);
        auto adj = rows_of(g);
        int w = max_clique_rows(adj, g.vertices()).size();
        vector<VertexSet> out;
        if (w == 0)
            return out;
        bron_kerbosch(adj, {}, 0, g.vertices(), {}, w, out);
        return sorted(out);
    }

    auto maximal_cliques(const Graph & g, const VertexSet & within) -> vector<VertexSet>
    {
        check_omega_cap(g);
        vector<VertexSet> out;
        if (within.empty())
            return out;
        bron_kerbosch(rows_of(g), {}, 0, within, {}, 1, out);
        return sorted(out);
    }

    auto maximal_cliques(const Graph & g) -> vector<VertexSet>
    {
        return maximal_cliques(g, g.vertices());
    }

    auto alpha(const Graph & g) -> int
    {
        check_omega_cap(g);
        return max_clique_rows(complement_rows(g), g.vertices()).size();
    }

    auto max_stable(const Graph & g) -> VertexSet
    {
        return r_set(g, g.vertices());
    }

    auto check_proper(const Graph & g, const vector<int> & colors) -> bool
    {
        if (int(colors.size()) != g.n())
            return false;
        for (int c : colors)
            if (c < 0)
                return false;
        for (auto [u, v] : g.edges())
            if (colors[u] == colors[v])
                return false;
        return true;
    }

    auto color_count(const vector<int> & colors) -> int
    {
        vector<int> c = colors;
        std::sort(c.begin(), c.end());
        return int(std::unique(c.begin(), c.end()) - c.begin());
    }

    namespace
    {
        // graphs without a stable set of size 3: colour classes are complement edges
        auto chi_by_matching(const Graph & g) -> ChiResult
        {
            using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
            BG bg(g.n());
            for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v)
                    if (! g.adjacent(u, v))
                        boost::add_edge(u, v, bg);
            vector<boost::graph_traits<BG>::vertex_descriptor> mate(g.n());
            boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
            ChiResult r;
            r.coloring.assign(g.n(), -1);
            for (int v = 0; v < g.n(); ++v) {
                if (r.coloring[v] >= 0)
                    continue;
                r.coloring[v] = r.chi;
                auto m = mate[v];
                if (m != boost::graph_traits<BG>::null_vertex())
                    r.coloring[int(m)] = r.chi;
                ++r.chi;
            }
            return r;
        }

        struct Dsatur
        {
            const Graph & g;
            int n;
            int lower_bound;
            int best;
            vector<int> best_coloring;
            vector<int> col;
            vector<vector<int>> neighbour_colour_count;
            vector<int> saturation;

            Dsatur(const Graph & graph, int lb) :
                g(graph),
                n(graph.n()),
                lower_bound(lb),
                best(graph.n() + 1),
                col(graph.n(), -1),
                neighbour_colour_count(graph.n(), vector<int>(graph.n() + 1, 0)),
                saturation(graph.n(), 0)
            {
            }

            auto assign(int v, int c) -> void
            {
                col[v] = c;
                g.neighbors(v).for_each([&](int u) {
                    if (neighbour_colour_count[u][c]++ == 0)
                        ++saturation[u];
                });
            }

            auto unassign(int v) -> void
            {
                int c = col[v];
                col[v] = -1;
                g.neighbors(v).for_each([&](int u) {
                    if (--neighbour_colour_count[u][c] == 0)
                        --saturation[u];
                });
            }

            auto pick() -> int
            {
                int best_v = -1, best_sat = -1, best_deg = -1;
                for (int v = 0; v < n; ++v) {
                    if (col[v] >= 0)
                        continue;
                    int deg = 0;
                    g.neighbors(v).for_each([&](int u) {
                        if (col[u] < 0)
                            ++deg;
                    });
                    if (saturation[v] > best_sat || (saturation[v] == best_sat && deg > best_deg)) {
                        best_v = v;
                        best_sat = saturation[v];
                        best_deg = deg;
                    }
                }
                return best_v;
            }

            auto search(int coloured, int used) -> void
            {
                if (best <= lower_bound)
                    return;
                if (coloured == n) {
                    if (used < best) {
                        best = used;
                        best_coloring = col;
                    }
                    return;
                }
                int v = pick();
                for (int c = 0; c < used; ++c) {
                    if (neighbour_colour_count[v][c])
                        continue;
                    assign(v, c);
                    search(coloured + 1, used);
                    unassign(v);
                    if (best <= lower_bound)
                        return;
                }
                if (used + 1 < best) {
                    assign(v, used);
                    search(coloured + 1, used + 1);
                    unassign(v);
                }
            }
        };
    }

    auto chi_exact(const Graph & g) -> ChiResult
    {
        if (g.n() == 0)
            return {};
        if (is_3k1_free(g))
            return chi_by_matching(g);
        if (g.n() > limits().chi_cap)
            throw ResourceError{"exact colouring of " + to_string(g.n()) + " vertices exceeds cap " + to_string(limits().chi_cap)};
        auto clique = max_clique(g, g.vertices());
        int a = alpha(g);
        int lb = std::max(clique.size(), (g.n() + a - 1) / a);
        Dsatur d{g, lb};
        int c = 0;
        int coloured = 0;
        clique.for_each([&](int v) {
            d.assign(v, c++);
            ++coloured;
        });
        d.search(coloured, c);
        return {d.best, d.best_coloring};
    }

    auto quasi_line_witness(const Graph & g) -> optional<QuasiLineWitness>
    {
        QuasiLineWitness w;
        for (int v = 0; v < g.n(); ++v) {
            VertexSet nb = g.neighbors(v);
            VertexSet side[2];
            VertexSet seen;
            for (int s = nb.first(); s >= 0; s = nb.next(s)) {
                if (seen.contains(s))
                    continue;
                // two-colour the complement of g[N(v)] from s
                vector<pair<int, int>> stack{{s, 0}};
                seen.insert(s);
                side[0].insert(s);
                while (! stack.empty()) {
                    auto [u, c] = stack.back();
                    stack.pop_back();
                    VertexSet non = nb - g.neighbors(u) - VertexSet{u};
                    for (int x = non.first(); x >= 0; x = non.next(x)) {
                        if (side[c].contains(x))
                            return nullopt;
                        if (! seen.contains(x)) {
                            seen.insert(x);
                            side[1 - c].insert(x);
                            stack.emplace_back(x, 1 - c);
                        }
                    }
                }
            }
            w.cliques.emplace_back(side[0], side[1]);
        }
        return w;
    }

    auto is_quasi_line(const Graph & g) -> bool
    {
        return quasi_line_witness(g).has_value();
    }

    auto check_quasi_line_witness(const Graph & g, const QuasiLineWitness & w) -> bool
    {
        if (int(w.cliques.size()) != g.n())
            return false;
        for (int v = 0; v < g.n(); ++v) {
            auto & [a, b] = w.cliques[v];
            if (! is_clique(g, a) || ! is_clique(g, b))
                return false;
            if ((a | b) != g.neighbors(v))
                return false;
        }
        return true;
    }

    auto is_chordal(const Graph & g) -> bool
    {
        // maximum cardinality search; every vertex's earlier-visited neighbours must be a clique
        int n = g.n();
        vector<int> weight(n, 0);
        VertexSet visited;
        for (int step = 0; step < n; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (! visited.contains(v) && (pick < 0 || weight[v] > weight[pick]))
                    pick = v;
            if (! is_clique(g, g.neighbors(pick) & visited))
                return false;
            visited.insert(pick);
            g.neighbors(pick).for_each([&](int u) {
                if (! visited.contains(u))
                    ++weight[u];
            });
        }
        return true;
    }

    auto is_perfect(const Graph & g) -> bool
    {
        check_omega_cap(g);
        return ! contains(g, Pattern::odd_hole(5)) && ! contains(g, Pattern::odd_antihole(7));
    }

    auto is_3k1_free(const Graph & g) -> bool
    {
        for (int u = 0; u < g.n(); ++u) {
            VertexSet non = g.vertices() - g.neighbors(u) - VertexSet::range(u + 1);
            if (! is_clique(g, non))
                return false;
        }
        return true;
    }

    auto in_class(const Graph & g) -> bool
    {
        return ! contains(g, Pattern{PatternKind::p5}) && ! contains(g, Pattern{PatternKind::four_wheel});
    }

    auto is_good_wrt(const Graph & g, int v, const VertexSet & x) -> bool
    {
        if (x.contains(v))
            throw GraphError{"vertex " + to_string(v) + " lies in the set it is tested against"};
        bool complete_to_one = false;
        for (auto & part : clique_partition(g, x)) {
            VertexSet hit = part & g.neighbors(v);
            if (! hit.empty() && hit != part)
                return false;
            if (hit == part)
                complete_to_one = true;
        }
        return complete_to_one;
    }
}
