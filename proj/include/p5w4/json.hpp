#pragma once

#include <p5w4/graph.hpp>

#include <json.hpp>

namespace p5w4
{
    inline auto to_json(nlohmann::json & j, const VertexSet & s) -> void { j = s.to_vector(); }

    inline auto from_json(const nlohmann::json & j, VertexSet & s) -> void
    {
        s = VertexSet::from_vector(j.get<std::vector<int>>());
    }

    inline auto to_json(nlohmann::json & j, const Graph & g) -> void
    {
        auto edges = nlohmann::json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        j = {{"n", g.n()}, {"edges", edges}};
    }

    inline auto from_json(const nlohmann::json & j, Graph & g) -> void
    {
        g = Graph::from_edges(j.at("n").get<int>(), j.at("edges").get<std::vector<std::pair<int, int>>>());
    }
}
