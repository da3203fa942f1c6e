#pragma once

#include <p5w4/vertex_set.hpp>

#include <utility>
#include <vector>

namespace p5w4
{
    // Simple undirected graph on vertices 0..n-1 with bit-packed adjacency rows.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);

        static auto from_edges(int n, const std::vector<std::pair<int, int>> & edges) -> Graph;

        auto n() const -> int { return _n; }
        auto adjacent(int u, int v) const -> bool { return _rows[u].contains(v); }
        auto neighbors(int v) const -> const VertexSet & { return _rows[v]; }
        auto degree(int v) const -> int { return _rows[v].size(); }
        auto vertices() const -> VertexSet { return VertexSet::range(_n); }
        auto edge_count() const -> int;
        auto edges() const -> std::vector<std::pair<int, int>>;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        friend class GraphBuilder;
        int _n = 0;
        std::vector<VertexSet> _rows;
    };

    // Accumulates edges; rejects loops, repeated edges and out-of-range endpoints.
    class GraphBuilder
    {
    public:
        explicit GraphBuilder(int n);

        auto add_edge(int u, int v) -> void;
        // as add_edge, but a repeated edge is ignored
        auto ensure_edge(int u, int v) -> void;
        auto has_edge(int u, int v) const -> bool { return _g._rows[u].contains(v); }
        auto build() && -> Graph { return std::move(_g); }
        auto build() const & -> Graph { return _g; }

    private:
        auto check(int u, int v) const -> void;
        Graph _g;
    };

    struct InducedSubgraph
    {
        Graph graph;
        std::vector<int> to_parent;
        // parent vertex -> local index, -1 when absent
        std::vector<int> from_parent;

        auto lift(const VertexSet & local) const -> VertexSet;
        auto lower(const VertexSet & parent) const -> VertexSet;
    };

    enum class Relation
    {
        complete,
        anticomplete,
        mixed
    };

    auto complement(const Graph & g) -> Graph;
    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph;
    auto relation(const Graph & g, const VertexSet & x, const VertexSet & y) -> Relation;

    auto is_clique(const Graph & g, const VertexSet & s) -> bool;
    auto is_stable(const Graph & g, const VertexSet & s) -> bool;
    auto complete_to(const Graph & g, const VertexSet & x, const VertexSet & y) -> bool;
    auto anticomplete_to(const Graph & g, const VertexSet & x, const VertexSet & y) -> bool;
    // vertices of g outside s with a neighbour in s
    auto neighborhood(const Graph & g, const VertexSet & s) -> VertexSet;
    // vertices adjacent to every member of s (excluding s)
    auto common_neighbors(const Graph & g, const VertexSet & s) -> VertexSet;

    // connected components of g[s], ordered by least member
    auto components(const Graph & g, const VertexSet & s) -> std::vector<VertexSet>;
    auto components(const Graph & g) -> std::vector<VertexSet>;
    auto is_connected(const Graph & g) -> bool;

    struct BlowupSpec
    {
        Graph base;
        std::vector<Graph> parts;
    };

    struct Blowup
    {
        Graph graph;
        // base vertex each blown-up vertex came from
        std::vector<int> part_of;
    };

    // throws GraphError if a part contains an induced P3
    auto blowup(const BlowupSpec & spec) -> Blowup;
    auto clique_blowup(const Graph & base, const std::vector<int> & sizes) -> Blowup;
    auto complete_graph(int n) -> Graph;
}
