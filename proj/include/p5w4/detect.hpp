#pragma once

#include <p5w4/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace p5w4
{
    // Size caps for the exponential searches; exceeding one raises ResourceError.
    struct Limits
    {
        int omega_cap = 64;
        int chi_cap = 48;
        int fallback_cap = 16;
    };

    auto limits() -> Limits &;

    enum class PatternKind
    {
        p3,
        p4,
        p5,
        c4,
        c5,
        c6,
        c7,
        two_k2,
        three_k1,
        four_wheel,
        five_wheel,
        k_wheel,
        c7_complement,
        odd_hole,
        odd_antihole
    };

    struct Pattern
    {
        PatternKind kind;
        // rim length for k_wheel, minimum length for odd_hole / odd_antihole
        int param = 0;

        static auto k_wheel(int k) -> Pattern { return {PatternKind::k_wheel, k}; }
        static auto odd_hole(int min_len = 5) -> Pattern { return {PatternKind::odd_hole, min_len}; }
        static auto odd_antihole(int min_len = 5) -> Pattern { return {PatternKind::odd_antihole, min_len}; }

        auto name() const -> std::string;
        // accepts e.g. "P5", "FourWheel", "KWheel(6)", "OddHole(7)"
        static auto parse(const std::string & s) -> Pattern;
    };

    // Canonical realization. Paths and cycles follow index order, wheels have rim 0..k-1 and
    // hub k, antiholes are complements of cycles. Odd holes/antiholes use the given length.
    auto pattern_graph(const Pattern & p, int length = 0) -> Graph;
    auto path_graph(int k) -> Graph;
    auto cycle_graph(int k) -> Graph;
    auto wheel_graph(int k) -> Graph;

    // Lexicographically least embedding of h as an induced subgraph: result[i] is the image of
    // pattern vertex i.
    auto find_induced(const Graph & g, const Graph & h, bool vertex_transitive = false) -> std::optional<std::vector<int>>;
    auto find_induced(const Graph & g, const Pattern & p) -> std::optional<std::vector<int>>;
    auto contains(const Graph & g, const Pattern & p) -> bool;

    auto is_p3_free(const Graph & g, const VertexSet & s) -> bool;
    // components of g[s], each a clique; throws GraphError if g[s] has an induced P3
    auto clique_partition(const Graph & g, const VertexSet & s) -> std::vector<VertexSet>;
    // lexicographically least maximum stable set of g[u]
    auto r_set(const Graph & g, const VertexSet & u) -> VertexSet;

    auto omega(const Graph & g) -> int;
    auto max_clique(const Graph & g, const VertexSet & within) -> VertexSet;
    auto omega_of(const Graph & g, const VertexSet & within) -> int;
    // every clique of size omega(g)
    auto max_cliques(const Graph & g) -> std::vector<VertexSet>;
    auto maximal_cliques(const Graph & g) -> std::vector<VertexSet>;
    auto maximal_cliques(const Graph & g, const VertexSet & within) -> std::vector<VertexSet>;
    auto alpha(const Graph & g) -> int;
    auto max_stable(const Graph & g) -> VertexSet;

    struct ChiResult
    {
        int chi = 0;
        std::vector<int> coloring;
    };

    auto chi_exact(const Graph & g) -> ChiResult;
    auto check_proper(const Graph & g, const std::vector<int> & colors) -> bool;
    auto color_count(const std::vector<int> & colors) -> int;

    struct QuasiLineWitness
    {
        // per vertex, two cliques whose union is its neighbourhood
        std::vector<std::pair<VertexSet, VertexSet>> cliques;
    };

    auto quasi_line_witness(const Graph & g) -> std::optional<QuasiLineWitness>;
    auto is_quasi_line(const Graph & g) -> bool;
    auto check_quasi_line_witness(const Graph & g, const QuasiLineWitness & w) -> bool;

    auto is_chordal(const Graph & g) -> bool;
    auto is_perfect(const Graph & g) -> bool;
    auto is_3k1_free(const Graph & g) -> bool;
    auto in_class(const Graph & g) -> bool;
    auto is_good_wrt(const Graph & g, int v, const VertexSet & x) -> bool;
}
