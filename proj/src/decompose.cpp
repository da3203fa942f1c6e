#include <p5w4/decompose.hpp>
#include <p5w4/errors.hpp>
#include <p5w4/json.hpp>

#include <algorithm>

using std::optional;
using std::vector;

namespace p5w4
{
    auto mcs_m(const Graph & g) -> EliminationOrder
    {
        int n = g.n();
        vector<int> weight(n, 0), number(n, -1);
        vector<VertexSet> filled(n);
        VertexSet unnumbered = g.vertices();

        for (int i = n - 1; i >= 0; --i) {
            int v = -1;
            unnumbered.for_each([&](int u) {
                if (v < 0 || weight[u] > weight[v])
                    v = u;
            });
            number[v] = i;
            unnumbered.erase(v);

            // u gains a fill edge to v if some path v..u runs through unnumbered vertices
            // all lighter than u
            vector<int> levels;
            unnumbered.for_each([&](int u) { levels.push_back(weight[u]); });
            std::sort(levels.begin(), levels.end());
            levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
            VertexSet gained;
            for (int t : levels) {
                VertexSet lighter;
                unnumbered.for_each([&](int u) {
                    if (weight[u] < t)
                        lighter.insert(u);
                });
                VertexSet reached, frontier = g.neighbors(v) & lighter;
                while (! frontier.empty()) {
                    reached |= frontier;
                    VertexSet grown;
                    frontier.for_each([&](int u) { grown |= g.neighbors(u); });
                    frontier = (grown & lighter) - reached;
                }
                VertexSet touched = g.neighbors(v);
                reached.for_each([&](int u) { touched |= g.neighbors(u); });
                unnumbered.for_each([&](int u) {
                    if (weight[u] == t && touched.contains(u))
                        gained.insert(u);
                });
            }
            gained.for_each([&](int u) {
                ++weight[u];
                filled[u].insert(v);
                filled[v].insert(u);
            });
        }

        EliminationOrder r;
        r.order.assign(n, -1);
        r.madj.resize(n);
        for (int v = 0; v < n; ++v)
            r.order[number[v]] = v;
        for (int v = 0; v < n; ++v)
            filled[v].for_each([&](int u) {
                if (number[u] > number[v])
                    r.madj[v].insert(u);
            });
        return r;
    }

    auto find_clique_cutset(const Graph & g) -> optional<CutsetSplit>
    {
        if (! is_connected(g))
            throw GraphError{"clique cutset search needs a connected graph"};
        auto elim = mcs_m(g);
        for (int x : elim.order) {
            auto & s = elim.madj[x];
            if (s.empty() || ! is_clique(g, s))
                continue;
            auto comps = components(g, g.vertices() - s);
            if (comps.size() < 2)
                continue;
            // a minimal separator has two components seeing all of it
            int full = 0;
            for (auto & comp : comps)
                if (neighborhood(g, comp) == s)
                    ++full;
            if (full < 2)
                continue;
            VertexSet c;
            for (auto & comp : comps)
                if (comp.contains(x))
                    c = comp;
            VertexSet rest = g.vertices() - s - c;
            if (c.first() < rest.first())
                return CutsetSplit{s, c, rest};
            return CutsetSplit{s, rest, c};
        }
        return std::nullopt;
    }

    auto AtomTree::leaves() const -> vector<int>
    {
        vector<int> r;
        for (int i = 0; i < int(nodes.size()); ++i)
            if (! nodes[i].split)
                r.push_back(i);
        return r;
    }

    auto atom_tree(const Graph & g) -> AtomTree
    {
        AtomTree t;
        vector<int> identity(g.n());
        for (int i = 0; i < g.n(); ++i)
            identity[i] = i;
        t.nodes.push_back({g, identity, std::nullopt, -1, -1});

        for (int i = 0; i < int(t.nodes.size()); ++i) {
            auto split = find_clique_cutset(t.nodes[i].graph);
            if (! split)
                continue;
            t.nodes[i].split = split;
            for (auto part : {split->v1, split->v2}) {
                auto sub = induced_subgraph(t.nodes[i].graph, split->q | part);
                vector<int> to_root;
                for (int v : sub.to_parent)
                    to_root.push_back(t.nodes[i].to_root[v]);
                int child = int(t.nodes.size());
                if (t.nodes[i].left < 0)
                    t.nodes[i].left = child;
                else
                    t.nodes[i].right = child;
                t.nodes.push_back({std::move(sub.graph), std::move(to_root), std::nullopt, -1, -1});
            }
        }
        return t;
    }

    auto to_json(nlohmann::json & j, const AtomTree & t) -> void
    {
        j = nlohmann::json::array();
        for (auto & node : t.nodes) {
            auto up = [&](const VertexSet & local) {
                vector<int> r;
                for (int v : local.to_vector())
                    r.push_back(node.to_root[v]);
                return r;
            };
            nlohmann::json split = nullptr;
            if (node.split)
                split = {{"q", up(node.split->q)}, {"v1", up(node.split->v1)}, {"v2", up(node.split->v2)}};
            j.push_back({{"vertices", node.to_root}, {"split", split}, {"left", node.left}, {"right", node.right}});
        }
    }
}
