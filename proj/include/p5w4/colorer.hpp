#pragma once

#include <p5w4/c5_structure.hpp>
#include <p5w4/decompose.hpp>
#include <p5w4/nice.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace p5w4
{
    enum class AtomTag
    {
        perfect,
        nice,
        quasi_line
    };

    // which structural hypothesis fired, tried in this order
    enum class Trigger
    {
        five_wheel,
        c5,
        c7_complement,
        none
    };

    struct AtomClassification
    {
        AtomTag tag = AtomTag::perfect;
        Trigger trigger = Trigger::none;
        std::optional<NiceCertificate> nice;
        std::optional<QuasiLineCertificate> quasi_line;
        // the C5 structure the wheel or wheel-free construction ran on
        std::optional<C5Structure> structure;
        // construction case that produced the certificate, empty for the perfect and C7^c routes
        CaseRecord record;
    };

    // Throws MembershipError on a 4-wheel or P5 met along the way and BugTrap when the
    // outcome contradicts an independent recognizer.
    auto classify_atom(const Graph & g) -> AtomClassification;

    // One node of the colouring recursion. Vertex sets are in the input's labels.
    struct ColoringStep
    {
        enum class Kind
        {
            empty,
            components,
            cutset,
            perfect,
            quasi_line,
            nice
        };

        Kind kind = Kind::empty;
        VertexSet vertices;
        std::vector<int> children;
        std::optional<CutsetSplit> split;
        std::optional<AtomClassification> atom;
        // exact colouring of a perfect or quasi-line atom, one entry per member of `vertices`
        std::vector<int> leaf_colors;
        int omega = 0;
        int count = 0;
    };

    struct ColoringAudit
    {
        // children precede parents; the last step is the root
        std::vector<ColoringStep> steps;
    };

    struct ColoringResult
    {
        std::vector<int> colors;
        int count = 0;
        int omega = 0;
        ColoringAudit audit;
    };

    // Certified (3/2)omega colouring. Throws MembershipError when g is outside the class,
    // ResourceError when an exact search exceeds its cap, BugTrap when a check fails.
    auto color(const Graph & g) -> ColoringResult;

    // Rebuilds the colouring from the audit alone: stored leaf colourings, certificates and
    // the same palette merges.
    auto replay(const Graph & g, const ColoringAudit & audit) -> std::vector<int>;

    auto to_string(AtomTag t) -> std::string;
    auto to_string(Trigger t) -> std::string;
    auto to_string(ColoringStep::Kind k) -> std::string;

    auto to_json(nlohmann::json & j, const AtomClassification & c) -> void;
    auto to_json(nlohmann::json & j, const ColoringStep & s) -> void;
    // the audit document: schema_version, graph, decomposition, classifications, certificates,
    // coloring, checks
    auto audit_json(const Graph & g, const ColoringResult & r) -> nlohmann::json;
}
