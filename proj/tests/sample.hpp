#pragma once

// Random in-class graphs for property tests: start from a seed graph and add vertices with
// random neighbourhoods, keeping each one only if the graph stays (P5, 4-wheel)-free.

#include <p5w4/decompose.hpp>
#include <p5w4/detect.hpp>

#include <random>

namespace sample
{
    inline auto extend(const p5w4::Graph & g, const p5w4::VertexSet & nbrs) -> p5w4::Graph
    {
        p5w4::GraphBuilder b{g.n() + 1};
        for (auto [u, v] : g.edges())
            b.add_edge(u, v);
        nbrs.for_each([&](int u) { b.add_edge(u, g.n()); });
        return std::move(b).build();
    }

    inline auto grow_in_class(p5w4::Graph g, int target_n, std::mt19937_64 & rng, int tries = 200) -> p5w4::Graph
    {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int t = 0; t < tries && g.n() < target_n; ++t) {
            double p = 0.2 + 0.7 * unit(rng);
            p5w4::VertexSet nbrs;
            for (int u = 0; u < g.n(); ++u)
                if (unit(rng) < p)
                    nbrs.insert(u);
            if (nbrs.empty())
                continue;
            auto h = extend(g, nbrs);
            if (p5w4::in_class(h))
                g = std::move(h);
        }
        return g;
    }

    inline auto is_atom(const p5w4::Graph & g) -> bool
    {
        return p5w4::is_connected(g) && ! p5w4::find_clique_cutset(g);
    }
}
