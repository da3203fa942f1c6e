#pragma once

#include <p5w4/c5_structure.hpp>
#include <p5w4/detect.hpp>
#include <p5w4/graph.hpp>

#include <json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace p5w4
{
    struct NiceCertificate
    {
        VertexSet s1;
        VertexSet s2;
        VertexSet s3;

        auto all() const -> VertexSet { return s1 | s2 | s3; }
    };

    struct NiceVerdict
    {
        int omega_before = 0;
        int omega_after = 0;
        // |M n S| for every maximum clique M, in the order of max_cliques
        std::vector<int> max_clique_hits;
        // one line per violated clause, naming the vertices involved
        std::vector<std::string> violations;

        auto valid() const -> bool { return violations.empty(); }
    };

    // Disjointness, stability, omega(G - S) <= omega(G) - 2 and |M n S| >= 2 for every maximum
    // clique M.
    auto verify_nice(const Graph & g, const NiceCertificate & c) -> NiceVerdict;

    // Exhaustive search over triples of maximal stable sets; nullopt means g is not nice.
    // Throws ResourceError above the fallback cap.
    auto nice_search_fallback(const Graph & g) -> std::optional<NiceCertificate>;

    using QuasiLineCertificate = QuasiLineWitness;
    using NiceOrQuasiLine = std::variant<NiceCertificate, QuasiLineCertificate>;

    // Pentagon relabelling: logical index p (1-based) sits at actual index (r + p - 1) mod 5, or
    // (r - p + 1) mod 5 when reflected. Maps are tried as rotations 0..4, then reflections.
    struct Relabel
    {
        int rotation = 0;
        bool reflected = false;

        auto at(int p) const -> int { return mod5(reflected ? rotation - (p - 1) : rotation + (p - 1)); }
        static auto nth(int m) -> Relabel { return {m % 5, m >= 5}; }
    };

    // a case whose hypothesis held but whose certificate failed verification
    struct RejectedAttempt
    {
        std::string tag;
        Relabel map;
        std::vector<std::string> violations;
    };

    struct CaseRecord
    {
        std::string tag;
        Relabel map;
        std::vector<RejectedAttempt> rejected;
    };

    // Opt-in instrumentation of the case constructions: while installed, every case whose
    // hypothesis holds is built and verified, not only the first success, so cases shadowed by
    // earlier ones are still exercised. Results are unchanged. Not thread-safe.
    struct CaseProbe
    {
        struct Counts
        {
            std::uint64_t applied = 0;
            std::uint64_t valid = 0;
        };
        // per case tag, over all maps tried
        std::map<std::string, Counts> counts;
        // graphs on which an applicable case built an invalid certificate, up to max_examples
        std::vector<std::pair<std::string, Graph>> invalid;
        std::size_t max_examples = 5;
    };

    // installs p (nullptr removes it) and returns the previous probe
    auto set_case_probe(CaseProbe * p) -> CaseProbe *;
    auto case_probe() -> CaseProbe *;

    // 3K1-free case: quasi-line if every neighbourhood splits into two cliques, otherwise g is
    // recognised as a clique-blowup of the 5-wheel. Throws MembershipError if g has a triad and
    // BugTrap if the blowup recognition fails.
    auto certify_3k1_case(const Graph & g) -> NiceOrQuasiLine;

    struct WheelCaseWorkspace
    {
        // the A_i-clique Z is complete to
        Pentagon a_star;
        std::vector<VertexSet> t_cliques;
        // least vertex of each T-clique; least remaining vertex of each nontrivial T-clique
        VertexSet l;
        VertexSet l2;
        std::array<WFamily, 5> w;
        int omega = 0;
        CaseRecord record;
    };

    // Checks the wheel-case facts (Z a clique complete to the base, A_i^* exists, Y empty,
    // G[T] P3-free) and fills the static fields; a violated fact raises BugTrap.
    auto build_wheel_workspace(const Graph & g, const C5Structure & s) -> WheelCaseWorkspace;
    auto certify_5wheel_case(const Graph & g, const C5Structure & s, WheelCaseWorkspace & w) -> NiceCertificate;

    struct WheelFreeWorkspace
    {
        // B_j: the A_j-clique complete to Y_{j-2} u Y_{j+2}, when that union is nonempty
        std::array<std::optional<VertexSet>, 5> b;
        Pentagon aa;
        std::vector<VertexSet> t_cliques;
        VertexSet l;
        VertexSet l2;
        std::array<WFamily, 5> w;
        // indices with X_i nonempty
        std::vector<int> j;
        int omega = 0;
        CaseRecord record;
    };

    auto build_wheelfree_workspace(const Graph & g, const C5Structure & s) -> WheelFreeWorkspace;
    auto certify_wheelfree_c5_case(const Graph & g, const C5Structure & s, WheelFreeWorkspace & w) -> NiceOrQuasiLine;

    // C7^c plus v8 ~ v1, v2, v5 and v9 ~ v5, v6, v2; v_k is vertex k - 1
    auto hstar_graph() -> Graph;

    struct C7Workspace
    {
        // induced C7 u_1..u_7 of the complement
        std::array<int, 7> base{};
        // complement-side partition
        std::array<VertexSet, 7> a;
        std::array<VertexSet, 7> b;
        VertexSet d;
        // dihedral map of the u-labels that leaves only B_5, B_6 possibly nonempty
        int rotation = 0;
        bool reflected = false;
        // Q_{v_1}..Q_{v_9}
        std::array<VertexSet, 9> parts;
    };

    // Throws MembershipError when g has no C7^c, BugTrap when a structural fact fails.
    auto build_c7_structure(const Graph & g) -> C7Workspace;
    auto certify_c7c_case(const Graph & g, const C7Workspace & w) -> NiceCertificate;

    auto to_json(nlohmann::json & j, const NiceCertificate & c) -> void;
    auto from_json(const nlohmann::json & j, NiceCertificate & c) -> void;
    auto to_json(nlohmann::json & j, const NiceVerdict & v) -> void;
    auto to_json(nlohmann::json & j, const QuasiLineCertificate & q) -> void;
    auto to_json(nlohmann::json & j, const Relabel & r) -> void;
    auto to_json(nlohmann::json & j, const CaseRecord & r) -> void;
    auto to_json(nlohmann::json & j, const WheelCaseWorkspace & w) -> void;
    auto to_json(nlohmann::json & j, const WheelFreeWorkspace & w) -> void;
    auto to_json(nlohmann::json & j, const C7Workspace & w) -> void;
}
