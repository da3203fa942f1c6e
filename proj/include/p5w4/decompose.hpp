#pragma once

#include <p5w4/graph.hpp>

#include <json.hpp>

#include <optional>
#include <vector>

namespace p5w4
{
    struct CutsetSplit
    {
        VertexSet q;
        VertexSet v1;
        VertexSet v2;
    };

    // MCS-M minimal elimination ordering (first element eliminated first) and the
    // higher-numbered neighbours of each vertex in the resulting minimal triangulation.
    struct EliminationOrder
    {
        std::vector<int> order;
        std::vector<VertexSet> madj;
    };

    auto mcs_m(const Graph & g) -> EliminationOrder;

    // throws GraphError on a disconnected graph; v1 holds the least vertex outside q
    auto find_clique_cutset(const Graph & g) -> std::optional<CutsetSplit>;

    struct AtomTree
    {
        struct Node
        {
            Graph graph;
            // local vertex -> root vertex
            std::vector<int> to_root;
            // local indices, present on internal nodes
            std::optional<CutsetSplit> split;
            int left = -1;
            int right = -1;
        };

        std::vector<Node> nodes;

        auto leaves() const -> std::vector<int>;
    };

    auto atom_tree(const Graph & g) -> AtomTree;

    // nodes with root labels: {vertices, split {q, v1, v2} or null, left, right}
    auto to_json(nlohmann::json & j, const AtomTree & t) -> void;
}
