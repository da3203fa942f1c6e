#pragma once

#include <p5w4/colorer.hpp>

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace p5w4
{
    // ---- generators

    // The 20-vertex extremal graph: omega 7, chi 10, no stable set of size 3.
    auto gstar_graph() -> Graph;
    // clique-blowup of G* with every part of size k
    auto gen_gstar(int k) -> Graph;
    // clique-blowup of H* with the given nine part sizes; v_1..v_7 need at least one vertex
    auto gen_hstar_blowup(const std::vector<int> & sizes) -> Graph;

    struct RandomDraw
    {
        Graph graph;
        // which sampler produced it, e.g. "er" or "blowup:five_wheel"
        std::string source;
        int attempts = 0;
    };

    // Rejection sampling with a budget of 10^4 draws. Plain mode draws G(n, p); structured mode
    // draws blowups of induced subgraphs of C5, the 5-wheel, H*, G* or a C5 with two adjacent
    // X-cliques reaching omega, with random P3-free parts
    // (p is the chance of splitting a part), half of them grown further by random in-class
    // vertex additions. Absent when the budget runs out. Deterministic per (n, p, seed, structured).
    auto gen_random_in_class(int n, double p, std::uint64_t seed, bool structured = false) -> std::optional<RandomDraw>;

    // labeled graph whose edge bits follow the pairs (0,1), (0,2), .., (1,2), ..
    auto graph_from_mask(int n, std::uint64_t mask) -> Graph;

    // Every labeled graph on n <= 7 vertices in mask order, optionally only connected and/or
    // in-class ones. Returns the number of graphs passed to `sink`.
    auto enumerate_small(int n, bool connected_only, bool in_class_only, const std::function<void(const Graph &)> & sink)
        -> std::uint64_t;

    // ---- file formats

    // DIMACS: "c" comments, "p edge <n> <m>", "e <u> <v>" 1-indexed
    auto read_dimacs(std::istream & in) -> Graph;
    auto write_dimacs(std::ostream & out, const Graph & g) -> void;
    // edge list: "<n>" then "<u> <v>" per line, 0-indexed
    auto read_edge_list(std::istream & in) -> Graph;
    auto write_edge_list(std::ostream & out, const Graph & g) -> void;
    // by extension: .col is DIMACS, .json a {n, edges} object, anything else an edge list
    auto read_graph_file(const std::string & path) -> Graph;
    auto write_graph_file(const std::string & path, const Graph & g) -> void;

    // ---- verification

    struct InstanceRecord
    {
        Graph graph;
        // generator and seed, or the file it came from
        std::string provenance;
        int n = 0;
        int m = 0;
        int omega = 0;
        std::optional<int> chi;
        bool in_class = false;
    };

    // fills the cached invariants; chi only when n <= max_exact_n
    auto make_instance(Graph g, std::string provenance, int max_exact_n = -1) -> InstanceRecord;

    struct VerifyOptions
    {
        bool bound = true;
        bool trichotomy = true;
        bool propositions = true;
        // nice atoms up to this size are cross-checked against the exhaustive search
        int fallback_max_n = 14;
        // graphs up to this size get the decomposition soundness check
        int decomposition_max_n = 9;
        // chi_exact runs up to this size
        int max_exact_n = 16;
        // C5 atoms get their propositions checked on up to this many induced C5s (5-wheel rims
        // when a 5-wheel is present)
        int rims_per_atom = 4;
        // keep up to this many failure fixtures
        int max_fixtures = 20;
    };

    struct VerificationReport
    {
        std::uint64_t instances = 0;
        std::uint64_t checked = 0;
        std::uint64_t skipped_membership = 0;
        std::uint64_t skipped_resource = 0;
        std::uint64_t bound_violations = 0;
        std::uint64_t exact_checks = 0;
        std::uint64_t atoms = 0;
        std::map<std::string, std::uint64_t> atom_tags;
        std::uint64_t trichotomy_failures = 0;
        std::uint64_t c5_atoms = 0;
        std::uint64_t proposition_failures = 0;
        // per proposition key, the structures on which it held non-vacuously
        std::map<std::string, std::uint64_t> proposition_hits;
        std::uint64_t fallback_checks = 0;
        std::uint64_t fallback_failures = 0;
        std::uint64_t decomposition_checks = 0;
        std::uint64_t decomposition_failures = 0;
        std::uint64_t bug_traps = 0;
        // {provenance, clause, graph}
        std::vector<nlohmann::json> fixtures;

        auto failures() const -> std::uint64_t;
        auto merge(const VerificationReport & other, int max_fixtures) -> void;
    };

    class Verifier
    {
    public:
        explicit Verifier(VerifyOptions options = {});

        auto add(const Graph & g, const std::string & provenance) -> void;
        auto report() const -> const VerificationReport & { return _report; }

        // called on every nice atom that passed the fallback check, in its own labels
        std::function<void(const Graph &, const NiceCertificate &, const NiceCertificate &)> on_fallback;

    private:
        auto fail(const Graph & g, const std::string & provenance, const std::string & clause) -> void;
        auto check_atoms(const Graph & g, const ColoringResult & r, const std::string & provenance) -> void;
        auto check_decomposition(const Graph & g, const std::string & provenance) -> void;

        VerifyOptions _options;
        VerificationReport _report;
    };

    // Single-purpose sweeps: each runs the colouring driver and the named family of checks.
    auto verify_theorem1(const std::vector<InstanceRecord> & instances, VerifyOptions options = {}) -> VerificationReport;
    auto verify_trichotomy(const std::vector<InstanceRecord> & instances, VerifyOptions options = {}) -> VerificationReport;
    auto verify_propositions(const std::vector<InstanceRecord> & instances, VerifyOptions options = {}) -> VerificationReport;

    // Feeds `count` in-class instances with min_n <= n <= max_n to the verifier: three structured
    // draws to one plain draw, sizes cycling through the range. Returns the number of draws that
    // exhausted their budget and were replaced.
    auto random_sweep(Verifier & v, int count, int min_n, int max_n, std::uint64_t seed) -> int;

    // re-runs a fixture's graph and returns the failure clauses it produces now
    auto rerun_fixture(const nlohmann::json & fixture, VerifyOptions options = {}) -> std::vector<std::string>;

    // brute-force test for a clique cutset: every clique is tried, for graphs up to 20 vertices
    auto has_clique_cutset_exhaustive(const Graph & g) -> bool;

    auto to_json(nlohmann::json & j, const VerificationReport & r) -> void;
}
