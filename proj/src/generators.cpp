#include <p5w4/errors.hpp>
#include <p5w4/harness.hpp>

#include <algorithm>
#include <numeric>

using std::vector;

namespace p5w4
{
    namespace
    {
        constexpr int draw_budget = 10000;

        // relabel g by a uniformly random permutation
        auto shuffled(const Graph & g, std::mt19937_64 & rng) -> Graph
        {
            vector<int> perm(g.n());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            GraphBuilder b{g.n()};
            for (auto [u, v] : g.edges())
                b.add_edge(perm[u], perm[v]);
            return std::move(b).build();
        }

        // disjoint union of cliques on s vertices, each extra clique split off with probability p
        auto p3_free_part(int s, double p, std::mt19937_64 & rng) -> Graph
        {
            std::bernoulli_distribution cut(p);
            GraphBuilder b{s};
            int start = 0;
            for (int v = 1; v <= s; ++v) {
                if (v < s && ! cut(rng))
                    continue;
                for (int a = start; a < v; ++a)
                    for (int c = a + 1; c < v; ++c)
                        b.add_edge(a, c);
                start = v;
            }
            return std::move(b).build();
        }

        // adds one vertex at a time with a random neighbourhood, keeping only in-class graphs
        auto grow(Graph g, int n, std::mt19937_64 & rng) -> std::optional<Graph>
        {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            for (int tries = 0; g.n() < n; ++tries) {
                if (tries == 50 * n)
                    return std::nullopt;
                double q = 0.2 + 0.7 * unit(rng);
                GraphBuilder b{g.n() + 1};
                for (auto [u, v] : g.edges())
                    b.add_edge(u, v);
                for (int u = 0; u < g.n(); ++u)
                    if (unit(rng) < q)
                        b.add_edge(u, g.n());
                auto h = std::move(b).build();
                if (in_class(h))
                    g = std::move(h);
            }
            return g;
        }

        // C5 blown up to A = {0,1}, {2,3}, {4}, {5,6} (stable), {7}, with an X_1-clique {8,9} and
        // an X_2-clique {10,11} that each reach omega 4 with their own A-clique
        auto paired_x_graph() -> Graph
        {
            return Graph::from_edges(12, {{0, 1},  {0, 2},  {0, 3}, {0, 7}, {0, 8},  {0, 9},  {1, 2},  {1, 3},  {1, 7},
                                          {1, 8},  {1, 9},  {2, 3}, {2, 4}, {2, 10}, {2, 11}, {3, 4},  {3, 10}, {3, 11},
                                          {4, 5},  {4, 6},  {4, 8}, {4, 9}, {5, 7},  {5, 8},  {5, 9},  {6, 7},  {6, 10},
                                          {6, 11}, {7, 10}, {7, 11}, {8, 9}, {8, 10}, {8, 11}, {9, 10}, {9, 11}, {10, 11}});
        }

        // A blowup of an induced subgraph of C5, the 5-wheel, H*, G* or the paired-X graph with
        // P3-free parts; half the time the blowup stops short of n and random vertices are grown onto it.
        auto structured_draw(int n, double p, std::mt19937_64 & rng, std::string & source) -> std::optional<Graph>
        {
            static const vector<std::pair<std::string, Graph>> bases{
                {"c5", cycle_graph(5)}, {"five_wheel", wheel_graph(5)}, {"hstar", hstar_graph()}, {"gstar", gstar_graph()},
                {"paired_x", paired_x_graph()}};
            auto & [name, whole] = bases[std::uniform_int_distribution<size_t>{0, bases.size() - 1}(rng)];
            bool grown = std::bernoulli_distribution{0.5}(rng);
            int target = grown ? std::uniform_int_distribution<int>{std::min(n, 5), n}(rng) : n;
            vector<int> keep(whole.n());
            std::iota(keep.begin(), keep.end(), 0);
            std::shuffle(keep.begin(), keep.end(), rng);
            int m = std::uniform_int_distribution<int>{std::min(target, 5), std::min(target, whole.n())}(rng);
            // the whole base is worth keeping more often than a uniform size would
            if (whole.n() <= target && std::bernoulli_distribution{0.5}(rng))
                m = whole.n();
            keep.resize(m);
            auto base = induced_subgraph(whole, VertexSet::from_vector(keep)).graph;

            vector<int> sizes(m, 1);
            std::uniform_int_distribution<int> pick{0, m - 1};
            for (int extra = target - m; extra > 0; --extra)
                ++sizes[pick(rng)];
            BlowupSpec spec{base, {}};
            for (int s : sizes)
                spec.parts.push_back(p3_free_part(s, p, rng));
            std::optional<Graph> g = blowup(spec).graph;
            source = "blowup:" + name;
            if (grown) {
                source += "+grown";
                if (! in_class(*g) || ! (g = grow(std::move(*g), n, rng)))
                    return std::nullopt;
            }
            return shuffled(*g, rng);
        }
    }

    auto gstar_graph() -> Graph
    {
        // complement of the Andrasfai graph on Z_20 whose connection set is {x = 1 mod 3}
        GraphBuilder b{20};
        for (int i = 0; i < 20; ++i)
            for (int j = i + 1; j < 20; ++j)
                if ((j - i) % 3 != 1)
                    b.add_edge(i, j);
        return std::move(b).build();
    }

    auto gen_gstar(int k) -> Graph
    {
        if (k < 1)
            throw GraphError{"gstar needs k >= 1"};
        if (20 * k > max_vertices)
            throw ResourceError{"gstar with k = " + std::to_string(k) + " exceeds the vertex cap"};
        return clique_blowup(gstar_graph(), vector<int>(20, k)).graph;
    }

    auto gen_hstar_blowup(const vector<int> & sizes) -> Graph
    {
        if (sizes.size() != 9)
            throw GraphError{"hstar blowup needs nine part sizes"};
        for (int i = 0; i < 7; ++i)
            if (sizes[i] < 1)
                throw GraphError{"hstar blowup needs parts v1..v7 nonempty"};
        if (std::accumulate(sizes.begin(), sizes.end(), 0) > max_vertices)
            throw ResourceError{"hstar blowup exceeds the vertex cap"};
        return clique_blowup(hstar_graph(), sizes).graph;
    }

    auto gen_random_in_class(int n, double p, std::uint64_t seed, bool structured) -> std::optional<RandomDraw>
    {
        if (n < 0 || n > max_vertices)
            throw ResourceError{"random graph size out of range"};
        std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(n), std::uint32_t(structured),
                          std::uint32_t(p * 1e6)};
        std::mt19937_64 rng{seq};
        std::bernoulli_distribution edge(std::clamp(p, 0.0, 1.0));
        for (int t = 1; t <= draw_budget; ++t) {
            std::string source = "er";
            std::optional<Graph> g;
            if (structured && n >= 5) {
                g = structured_draw(n, p, rng, source);
                if (! g)
                    continue;
            }
            else {
                GraphBuilder b{n};
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (edge(rng))
                            b.add_edge(u, v);
                g = std::move(b).build();
            }
            if (in_class(*g))
                return RandomDraw{std::move(*g), source, t};
        }
        return std::nullopt;
    }

    auto graph_from_mask(int n, std::uint64_t mask) -> Graph
    {
        GraphBuilder b{n};
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1)
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    auto enumerate_small(int n, bool connected_only, bool in_class_only, const std::function<void(const Graph &)> & sink)
        -> std::uint64_t
    {
        if (n < 0 || n > 7)
            throw ResourceError{"enumeration is limited to n <= 7"};
        int pairs = n * (n - 1) / 2;
        std::uint64_t passed = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
            auto g = graph_from_mask(n, m);
            if (connected_only && ! is_connected(g))
                continue;
            if (in_class_only && ! in_class(g))
                continue;
            sink(g);
            ++passed;
        }
        return passed;
    }
}
