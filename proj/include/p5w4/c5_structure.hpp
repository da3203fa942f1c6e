#pragma once

#include <p5w4/graph.hpp>

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace p5w4
{
    using Pentagon = std::array<VertexSet, 5>;

    // Decomposition around an induced C5. Index i stands for A_{i+1}; all index arithmetic is
    // modulo 5.
    struct C5Structure
    {
        std::array<int, 5> base{};
        Pentagon a;
        Pentagon x;
        Pentagon y;
        VertexSet z;
        VertexSet t;

        auto a_all() const -> VertexSet;
        auto x_all() const -> VertexSet;
        auto y_all() const -> VertexSet;
    };

    constexpr auto mod5(int i) -> int { return ((i % 5) + 5) % 5; }

    // Grows A_i = {v_i} to a maximal A-partition; scans candidates in ascending order, indices
    // 0..4, until a pass changes nothing. Throws GraphError if c5 is not an induced C5.
    auto grow_c5_partition(const Graph & g, const std::array<int, 5> & c5) -> Pentagon;

    // Buckets every vertex outside A. An unclassifiable vertex raises MembershipError naming it.
    auto classify_rest(const Graph & g, const Pentagon & a, const std::array<int, 5> & base) -> C5Structure;

    auto build_c5_structure(const Graph & g, const std::array<int, 5> & c5) -> C5Structure;

    // Raw graph facts backing a failed check. Claims and their vertex lists:
    //   adjacent u v | nonadjacent u v | induced_p3 a b c (a-b-c with a, c nonadjacent)
    //   complete s... -1 t... | anticomplete s... -1 t... | clique s...
    //   no_common_neighbour u v s... (no member of s is adjacent to both u and v)
    //   clique_missed k m... -1 s... (m is a clique meeting s in fewer than k vertices)
    //   all (every entry of parts holds)
    struct Witness
    {
        std::string claim;
        std::vector<int> vertices;
        std::vector<Witness> parts;
    };

    auto recheck_witness(const Graph & g, const Witness & w) -> bool;

    struct PropositionResult
    {
        std::string key;
        bool passed = true;
        // the statement's hypothesis or quantifier domain was empty on this structure
        bool vacuous = true;
        std::optional<Witness> witness;
    };

    struct PropositionReport
    {
        std::vector<PropositionResult> results;

        auto all_passed() const -> bool;
        auto failures() const -> std::vector<const PropositionResult *>;
        auto find(const std::string & key) const -> const PropositionResult *;
    };

    // Keys of the structural facts checked on every C5 structure, then of the facts that only
    // apply around a 5-wheel, then of those that only apply to wheel-free graphs.
    auto proposition_keys() -> const std::vector<std::string> &;

    auto assert_c5_propositions(const Graph & g, const C5Structure & s) -> PropositionReport;

    // per index, the pairs (X_i-clique, A_i-clique) whose union has size omega
    using WFamily = std::vector<std::pair<VertexSet, VertexSet>>;
    auto w_sets(const Graph & g, const C5Structure & s, int omega) -> std::array<WFamily, 5>;
    auto w_sets(const Graph & g, const C5Structure & s) -> std::array<WFamily, 5>;

    // the A_i-clique that Z is complete to, Z being anticomplete to the rest of A_i; absent when
    // Z is empty or no such clique exists
    auto a_star(const Graph & g, const C5Structure & s) -> std::array<std::optional<VertexSet>, 5>;

    // AA_j: when Y_{j-1} u Y_{j+1} is nonempty and every A_j-clique has a vertex complete to it,
    // the least such vertex of each A_j-clique; otherwise R_{A_j}
    auto aa_sets(const Graph & g, const C5Structure & s) -> Pentagon;

    auto to_json(nlohmann::json & j, const C5Structure & s) -> void;
    auto to_json(nlohmann::json & j, const Witness & w) -> void;
    auto to_json(nlohmann::json & j, const PropositionReport & r) -> void;
}
