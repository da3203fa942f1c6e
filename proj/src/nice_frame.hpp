#pragma once

// Shared machinery for the case constructions: a relabelled view of a C5 structure and the
// loop that tries each case under the ten pentagon maps.

#include <p5w4/nice.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace p5w4::detail
{
    struct Frame
    {
        const Graph & g;
        const C5Structure & s;
        Relabel m;

        auto A(int p) const -> const VertexSet & { return s.a[m.at(p)]; }
        auto X(int p) const -> const VertexSet & { return s.x[m.at(p)]; }
        auto Y(int p) const -> const VertexSet & { return s.y[m.at(p)]; }
        auto R(const VertexSet & u) const -> VertexSet { return r_set(g, u); }
        auto RA(int p) const -> VertexSet { return R(A(p)); }
        auto RX(int p) const -> VertexSet { return R(X(p)); }
        auto RY(int p) const -> VertexSet { return R(Y(p)); }
        auto clique(const VertexSet & u) const -> bool { return is_clique(g, u); }
    };

    struct Case
    {
        std::string tag;
        // true when neither hypothesis nor construction depends on the labelling
        bool symmetric = false;
        std::function<bool(const Frame &)> hyp;
        std::function<NiceCertificate(const Frame &)> build;
    };

    // Cases in textual order, each under the identity first and then the other nine maps; the
    // first certificate that verifies is returned and recorded.
    inline auto run_cases(const Graph & g, const C5Structure & s, const std::vector<Case> & cases, CaseRecord & rec)
        -> std::optional<NiceCertificate>
    {
        auto probe = case_probe();
        if (probe)
            for (auto & c : cases)
                for (int k = 0; k < (c.symmetric ? 1 : 10); ++k) {
                    Frame f{g, s, Relabel::nth(k)};
                    if (! c.hyp(f))
                        continue;
                    auto & n = probe->counts[c.tag];
                    ++n.applied;
                    if (verify_nice(g, c.build(f)).valid())
                        ++n.valid;
                    else if (probe->invalid.size() < probe->max_examples)
                        probe->invalid.push_back({c.tag, g});
                }

        for (auto & c : cases)
            for (int k = 0; k < (c.symmetric ? 1 : 10); ++k) {
                Frame f{g, s, Relabel::nth(k)};
                if (! c.hyp(f))
                    continue;
                auto cert = c.build(f);
                auto v = verify_nice(g, cert);
                if (v.valid()) {
                    rec.tag = c.tag;
                    rec.map = f.m;
                    return cert;
                }
                rec.rejected.push_back({c.tag, f.m, v.violations});
            }
        return std::nullopt;
    }

    // least vertex of each clique, then least remaining vertex of each nontrivial clique
    inline auto transversals(const std::vector<VertexSet> & cliques) -> std::pair<VertexSet, VertexSet>
    {
        VertexSet l, l2;
        for (auto q : cliques) {
            l.insert(q.pop_first());
            if (! q.empty())
                l2.insert(q.first());
        }
        return {l, l2};
    }
}
