#include <p5w4/errors.hpp>
#include <p5w4/graph.hpp>

#include <string>

using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace p5w4
{
    Graph::Graph(int n) :
        _n(n)
    {
        if (n < 0)
            throw GraphError{"negative vertex count"};
        if (n > max_vertices)
            throw ResourceError{"graph has " + to_string(n) + " vertices, cap is " + to_string(max_vertices)};
        _rows.resize(n);
    }

    auto Graph::from_edges(int n, const vector<pair<int, int>> & edges) -> Graph
    {
        GraphBuilder b{n};
        for (auto [u, v] : edges)
            b.add_edge(u, v);
        return std::move(b).build();
    }

    auto Graph::edge_count() const -> int
    {
        int c = 0;
        for (auto & r : _rows)
            c += r.size();
        return c / 2;
    }

    auto Graph::edges() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> r;
        for (int u = 0; u < _n; ++u)
            for (int v = _rows[u].next(u); v >= 0; v = _rows[u].next(v))
                r.emplace_back(u, v);
        return r;
    }

    GraphBuilder::GraphBuilder(int n) :
        _g(n)
    {
    }

    auto GraphBuilder::check(int u, int v) const -> void
    {
        if (u < 0 || v < 0 || u >= _g._n || v >= _g._n)
            throw GraphError{"edge {" + to_string(u) + "," + to_string(v) + "} out of range for n=" + to_string(_g._n)};
        if (u == v)
            throw GraphError{"self-loop at vertex " + to_string(u)};
    }

    auto GraphBuilder::add_edge(int u, int v) -> void
    {
        check(u, v);
        if (_g._rows[u].contains(v))
            throw GraphError{"repeated edge {" + to_string(u) + "," + to_string(v) + "}"};
        _g._rows[u].insert(v);
        _g._rows[v].insert(u);
    }

    auto GraphBuilder::ensure_edge(int u, int v) -> void
    {
        check(u, v);
        _g._rows[u].insert(v);
        _g._rows[v].insert(u);
    }

    auto InducedSubgraph::lift(const VertexSet & local) const -> VertexSet
    {
        VertexSet r;
        local.for_each([&](int v) { r.insert(to_parent[v]); });
        return r;
    }

    auto InducedSubgraph::lower(const VertexSet & parent) const -> VertexSet
    {
        VertexSet r;
        parent.for_each([&](int v) {
            if (v < int(from_parent.size()) && from_parent[v] >= 0)
                r.insert(from_parent[v]);
        });
        return r;
    }

    auto complement(const Graph & g) -> Graph
    {
        GraphBuilder b{g.n()};
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (! g.adjacent(u, v))
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph
    {
        InducedSubgraph r;
        if (! s.subset_of(g.vertices()))
            throw GraphError{"vertex set " + s.to_string() + " not inside graph on " + to_string(g.n()) + " vertices"};
        r.to_parent = s.to_vector();
        r.from_parent.assign(g.n(), -1);
        for (int i = 0; i < int(r.to_parent.size()); ++i)
            r.from_parent[r.to_parent[i]] = i;
        GraphBuilder b{int(r.to_parent.size())};
        for (int i = 0; i < int(r.to_parent.size()); ++i)
            for (int j = i + 1; j < int(r.to_parent.size()); ++j)
                if (g.adjacent(r.to_parent[i], r.to_parent[j]))
                    b.add_edge(i, j);
        r.graph = std::move(b).build();
        return r;
    }

    auto relation(const Graph & g, const VertexSet & x, const VertexSet & y) -> Relation
    {
        if (x.intersects(y))
            throw GraphError{"relation called on overlapping sets " + x.to_string() + " and " + y.to_string()};
        if (complete_to(g, x, y))
            return Relation::complete;
        if (anticomplete_to(g, x, y))
            return Relation::anticomplete;
        return Relation::mixed;
    }

    auto is_clique(const Graph & g, const VertexSet & s) -> bool
    {
        bool ok = true;
        s.for_each([&](int v) {
            if (ok && ! (s - VertexSet{v}).subset_of(g.neighbors(v)))
                ok = false;
        });
        return ok;
    }

    auto is_stable(const Graph & g, const VertexSet & s) -> bool
    {
        bool ok = true;
        s.for_each([&](int v) {
            if (ok && g.neighbors(v).intersects(s))
                ok = false;
        });
        return ok;
    }

    auto complete_to(const Graph & g, const VertexSet & x, const VertexSet & y) -> bool
    {
        bool ok = true;
        x.for_each([&](int v) {
            if (ok && ! (y - VertexSet{v}).subset_of(g.neighbors(v)))
                ok = false;
        });
        return ok;
    }

    auto anticomplete_to(const Graph & g, const VertexSet & x, const VertexSet & y) -> bool
    {
        bool ok = true;
        x.for_each([&](int v) {
            if (ok && g.neighbors(v).intersects(y))
                ok = false;
        });
        return ok;
    }

    auto neighborhood(const Graph & g, const VertexSet & s) -> VertexSet
    {
        VertexSet r;
        s.for_each([&](int v) { r |= g.neighbors(v); });
        return r - s;
    }

    auto common_neighbors(const Graph & g, const VertexSet & s) -> VertexSet
    {
        VertexSet r = g.vertices();
        s.for_each([&](int v) { r &= g.neighbors(v); });
        return r - s;
    }

    auto components(const Graph & g, const VertexSet & s) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        VertexSet left = s;
        while (! left.empty()) {
            VertexSet comp, frontier;
            frontier.insert(left.first());
            while (! frontier.empty()) {
                comp |= frontier;
                VertexSet grown;
                frontier.for_each([&](int v) { grown |= g.neighbors(v); });
                frontier = (grown & left) - comp;
            }
            result.push_back(comp);
            left -= comp;
        }
        return result;
    }

    auto components(const Graph & g) -> vector<VertexSet>
    {
        return components(g, g.vertices());
    }

    auto is_connected(const Graph & g) -> bool
    {
        return components(g).size() <= 1;
    }

    auto blowup(const BlowupSpec & spec) -> Blowup
    {
        if (int(spec.parts.size()) != spec.base.n())
            throw GraphError{"blowup needs one part per base vertex"};
        int total = 0;
        vector<int> offset;
        for (auto & p : spec.parts) {
            offset.push_back(total);
            total += p.n();
        }
        Blowup r;
        GraphBuilder b{total};
        for (int u = 0; u < spec.base.n(); ++u) {
            auto & part = spec.parts[u];
            for (int a = 0; a < part.n(); ++a) {
                r.part_of.push_back(u);
                for (int c = a + 1; c < part.n(); ++c)
                    if (part.adjacent(a, c))
                        b.add_edge(offset[u] + a, offset[u] + c);
            }
            // a P3 is a middle vertex with two non-adjacent neighbours
            for (int c = 0; c < part.n(); ++c)
                for (int a = part.neighbors(c).first(); a >= 0; a = part.neighbors(c).next(a))
                    for (int d = part.neighbors(c).next(a); d >= 0; d = part.neighbors(c).next(d))
                        if (! part.adjacent(a, d))
                            throw GraphError{"blowup part " + to_string(u) + " contains an induced P3"};
        }
        for (auto [u, v] : spec.base.edges())
            for (int a = 0; a < spec.parts[u].n(); ++a)
                for (int c = 0; c < spec.parts[v].n(); ++c)
                    b.add_edge(offset[u] + a, offset[v] + c);
        r.graph = std::move(b).build();
        return r;
    }

    auto complete_graph(int n) -> Graph
    {
        GraphBuilder b{n};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                b.add_edge(u, v);
        return std::move(b).build();
    }

    auto clique_blowup(const Graph & base, const vector<int> & sizes) -> Blowup
    {
        if (int(sizes.size()) != base.n())
            throw GraphError{"clique blowup needs one size per base vertex"};
        BlowupSpec spec{base, {}};
        for (int s : sizes) {
            if (s < 0)
                throw GraphError{"negative part size"};
            spec.parts.push_back(complete_graph(s));
        }
        return blowup(spec);
    }
}
