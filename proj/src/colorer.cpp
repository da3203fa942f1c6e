#include <p5w4/colorer.hpp>
#include <p5w4/detect.hpp>
#include <p5w4/errors.hpp>
#include <p5w4/json.hpp>

#include <algorithm>

using std::vector;

namespace p5w4
{
    namespace
    {
        auto rim_of(const vector<int> & v) -> std::array<int, 5>
        {
            return {v[0], v[1], v[2], v[3], v[4]};
        }

        auto lift(const InducedSubgraph & sub, const NiceCertificate & c) -> NiceCertificate
        {
            return {sub.lift(c.s1), sub.lift(c.s2), sub.lift(c.s3)};
        }

        auto lift(const InducedSubgraph & sub, const CutsetSplit & c) -> CutsetSplit
        {
            return {sub.lift(c.q), sub.lift(c.v1), sub.lift(c.v2)};
        }

        // palette size of a partial colouring, -1 marking absent vertices
        auto palette(const vector<int> & colors) -> int
        {
            return colors.empty() ? 0 : std::max(0, *std::max_element(colors.begin(), colors.end()) + 1);
        }

        auto bound(int omega) -> int
        {
            return 3 * omega / 2;
        }

        // Recolour `right` so it agrees with `left` on the clique q; its other colours take the
        // least indices not used on q. Both sides are root-indexed, -1 outside.
        auto merge_across(const vector<int> & left, const vector<int> & right, const VertexSet & q) -> vector<int>
        {
            int k = std::max(palette(left), palette(right));
            vector<int> perm(k, -1);
            vector<bool> taken(k, false);
            q.for_each([&](int u) {
                perm[right[u]] = left[u];
                taken[left[u]] = true;
            });
            int next = 0;
            for (int c = 0; c < k; ++c) {
                if (perm[c] >= 0)
                    continue;
                while (taken[next])
                    ++next;
                perm[c] = next++;
            }
            vector<int> out = left;
            for (size_t v = 0; v < right.size(); ++v)
                if (right[v] >= 0 && left[v] < 0)
                    out[v] = perm[right[v]];
            return out;
        }

        auto add_fresh(vector<int> colors, const NiceCertificate & c) -> vector<int>
        {
            int next = palette(colors);
            for (auto * s : {&c.s1, &c.s2, &c.s3})
                if (! s->empty()) {
                    s->for_each([&](int v) { colors[v] = next; });
                    ++next;
                }
            return colors;
        }

        struct Driver
        {
            const Graph & root;
            ColoringAudit audit;

            auto run(const VertexSet & vs) -> std::pair<int, vector<int>>
            {
                ColoringStep st;
                st.vertices = vs;
                vector<int> colors(root.n(), -1);
                if (vs.empty())
                    return push(std::move(st), colors);

                auto sub = induced_subgraph(root, vs);
                auto & h = sub.graph;
                st.omega = omega(h);
                auto comps = components(h);
                if (comps.size() > 1) {
                    st.kind = ColoringStep::Kind::components;
                    for (auto & k : comps) {
                        auto [i, c] = run(sub.lift(k));
                        st.children.push_back(i);
                        for (int v = 0; v < root.n(); ++v)
                            if (c[v] >= 0)
                                colors[v] = c[v];
                    }
                    return push(std::move(st), colors);
                }

                if (auto cut = find_clique_cutset(h)) {
                    st.kind = ColoringStep::Kind::cutset;
                    st.split = lift(sub, *cut);
                    auto [l, left] = run(st.split->q | st.split->v1);
                    auto [r, right] = run(st.split->q | st.split->v2);
                    st.children = {l, r};
                    return push(std::move(st), merge_across(left, right, st.split->q));
                }

                auto cls = classify_atom(h);
                if (cls.nice)
                    cls.nice = lift(sub, *cls.nice);
                if (cls.structure) {
                    auto & s = *cls.structure;
                    for (auto & v : s.base)
                        v = sub.to_parent[v];
                    for (auto * fam : {&s.a, &s.x, &s.y})
                        for (auto & p : *fam)
                            p = sub.lift(p);
                    s.z = sub.lift(s.z);
                    s.t = sub.lift(s.t);
                }
                if (cls.tag == AtomTag::nice) {
                    st.kind = ColoringStep::Kind::nice;
                    auto [i, rest] = run(vs - cls.nice->all());
                    st.children = {i};
                    colors = add_fresh(std::move(rest), *cls.nice);
                }
                else {
                    st.kind = cls.tag == AtomTag::perfect ? ColoringStep::Kind::perfect : ColoringStep::Kind::quasi_line;
                    auto chi = chi_exact(h);
                    if (cls.tag == AtomTag::perfect && chi.chi != st.omega)
                        throw BugTrap{"perfect atom with chi " + std::to_string(chi.chi) + " above omega " + std::to_string(st.omega),
                                      {{"graph", h}}};
                    st.leaf_colors = chi.coloring;
                    for (int v = 0; v < h.n(); ++v)
                        colors[sub.to_parent[v]] = chi.coloring[v];
                }
                st.atom = std::move(cls);
                return push(std::move(st), colors);
            }

            auto push(ColoringStep st, const vector<int> & colors) -> std::pair<int, vector<int>>
            {
                st.count = palette(colors);
                if (st.count > bound(st.omega))
                    throw BugTrap{to_string(st.kind) + " step uses " + std::to_string(st.count) + " colours with omega " +
                                      std::to_string(st.omega),
                                  {{"vertices", st.vertices}, {"graph", root}}};
                audit.steps.push_back(std::move(st));
                return {int(audit.steps.size()) - 1, colors};
            }
        };

        auto replay_step(const Graph & g, const ColoringAudit & a, int i) -> vector<int>
        {
            auto & st = a.steps.at(i);
            vector<int> colors(g.n(), -1);
            switch (st.kind) {
            case ColoringStep::Kind::empty:
                break;
            case ColoringStep::Kind::components:
                for (int c : st.children) {
                    auto part = replay_step(g, a, c);
                    for (int v = 0; v < g.n(); ++v)
                        if (part[v] >= 0)
                            colors[v] = part[v];
                }
                break;
            case ColoringStep::Kind::cutset:
                colors = merge_across(replay_step(g, a, st.children.at(0)), replay_step(g, a, st.children.at(1)), st.split->q);
                break;
            case ColoringStep::Kind::nice:
                colors = add_fresh(replay_step(g, a, st.children.at(0)), *st.atom->nice);
                break;
            case ColoringStep::Kind::perfect:
            case ColoringStep::Kind::quasi_line: {
                auto vs = st.vertices.to_vector();
                if (vs.size() != st.leaf_colors.size())
                    throw GraphError{"audit leaf colouring does not match its vertex set"};
                for (size_t k = 0; k < vs.size(); ++k)
                    colors[vs[k]] = st.leaf_colors[k];
                break;
            }
            }
            return colors;
        }
    }

    auto classify_atom(const Graph & g) -> AtomClassification
    {
        AtomClassification c;
        auto require_nice = [&](const NiceCertificate & cert) {
            if (auto v = verify_nice(g, cert); ! v.valid())
                throw BugTrap{"atom certificate failed verification", {{"graph", g}, {"certificate", cert}, {"verdict", v}}};
        };
        if (auto w5 = find_induced(g, Pattern{PatternKind::five_wheel})) {
            c.trigger = Trigger::five_wheel;
            auto s = build_c5_structure(g, rim_of(*w5));
            auto w = build_wheel_workspace(g, s);
            c.nice = certify_5wheel_case(g, s, w);
            c.tag = AtomTag::nice;
            c.structure = s;
            c.record = w.record;
        }
        else if (auto c5 = find_induced(g, Pattern{PatternKind::c5})) {
            c.trigger = Trigger::c5;
            auto s = build_c5_structure(g, rim_of(*c5));
            auto w = build_wheelfree_workspace(g, s);
            auto r = certify_wheelfree_c5_case(g, s, w);
            if (auto * n = std::get_if<NiceCertificate>(&r)) {
                c.tag = AtomTag::nice;
                c.nice = *n;
            }
            else {
                c.tag = AtomTag::quasi_line;
                c.quasi_line = std::get<QuasiLineCertificate>(r);
            }
            c.structure = s;
            c.record = w.record;
        }
        else if (contains(g, Pattern{PatternKind::c7_complement})) {
            c.trigger = Trigger::c7_complement;
            c.nice = certify_c7c_case(g, build_c7_structure(g));
            c.tag = AtomTag::nice;
        }
        else if (! is_perfect(g)) {
            throw BugTrap{"atom has no 5-wheel, C5 or C7 complement but is not perfect", {{"graph", g}}};
        }

        if (c.nice)
            require_nice(*c.nice);
        if (c.quasi_line && ! check_quasi_line_witness(g, *c.quasi_line))
            throw BugTrap{"quasi-line witness failed its check", {{"graph", g}}};
        return c;
    }

    auto color(const Graph & g) -> ColoringResult
    {
        if (! in_class(g))
            throw MembershipError{"graph is not (P5, 4-wheel)-free"};
        Driver d{g, {}};
        auto [root, colors] = d.run(g.vertices());
        ColoringResult r;
        r.colors = std::move(colors);
        r.count = color_count(r.colors);
        r.omega = d.audit.steps[root].omega;
        r.audit = std::move(d.audit);
        if (! check_proper(g, r.colors))
            throw BugTrap{"colouring is not proper", {{"graph", g}, {"colors", r.colors}}};
        return r;
    }

    auto replay(const Graph & g, const ColoringAudit & audit) -> vector<int>
    {
        if (audit.steps.empty())
            throw GraphError{"empty audit"};
        return replay_step(g, audit, int(audit.steps.size()) - 1);
    }

    auto to_string(AtomTag t) -> std::string
    {
        switch (t) {
        case AtomTag::perfect:
            return "perfect";
        case AtomTag::nice:
            return "nice";
        case AtomTag::quasi_line:
            return "quasi_line";
        }
        return "";
    }

    auto to_string(Trigger t) -> std::string
    {
        switch (t) {
        case Trigger::five_wheel:
            return "five_wheel";
        case Trigger::c5:
            return "c5";
        case Trigger::c7_complement:
            return "c7_complement";
        case Trigger::none:
            return "none";
        }
        return "";
    }

    auto to_string(ColoringStep::Kind k) -> std::string
    {
        switch (k) {
        case ColoringStep::Kind::empty:
            return "empty";
        case ColoringStep::Kind::components:
            return "components";
        case ColoringStep::Kind::cutset:
            return "cutset";
        case ColoringStep::Kind::perfect:
            return "perfect";
        case ColoringStep::Kind::quasi_line:
            return "quasi_line";
        case ColoringStep::Kind::nice:
            return "nice";
        }
        return "";
    }

    auto to_json(nlohmann::json & j, const AtomClassification & c) -> void
    {
        j = {{"tag", to_string(c.tag)}, {"trigger", to_string(c.trigger)}};
        if (c.nice)
            j["certificate"] = *c.nice;
        if (c.quasi_line)
            j["quasi_line"] = *c.quasi_line;
        if (c.structure)
            j["structure"] = *c.structure;
        if (! c.record.tag.empty())
            j["case"] = c.record;
    }

    auto to_json(nlohmann::json & j, const ColoringStep & s) -> void
    {
        j = {{"kind", to_string(s.kind)}, {"vertices", s.vertices}, {"children", s.children}, {"omega", s.omega}, {"count", s.count}};
        if (s.split)
            j["cutset"] = {{"q", s.split->q}, {"v1", s.split->v1}, {"v2", s.split->v2}};
        if (s.atom)
            j["classification"] = *s.atom;
        if (! s.leaf_colors.empty())
            j["leaf_colors"] = s.leaf_colors;
    }

    auto audit_json(const Graph & g, const ColoringResult & r) -> nlohmann::json
    {
        auto classifications = nlohmann::json::array();
        auto certificates = nlohmann::json::array();
        for (size_t i = 0; i < r.audit.steps.size(); ++i) {
            auto & s = r.audit.steps[i];
            if (! s.atom)
                continue;
            classifications.push_back({{"step", i}, {"vertices", s.vertices}, {"classification", *s.atom}});
            if (auto & c = s.atom->nice) {
                auto sub = induced_subgraph(g, s.vertices);
                auto v = verify_nice(sub.graph, {sub.lower(c->s1), sub.lower(c->s2), sub.lower(c->s3)});
                certificates.push_back({{"step", i}, {"certificate", *c}, {"verdict", v}});
            }
        }
        bool proper = check_proper(g, r.colors);
        bool within = r.count <= 3 * r.omega / 2;
        bool replays = replay(g, r.audit) == r.colors;
        return {{"schema_version", 1},
                {"graph", g},
                {"decomposition", r.audit.steps},
                {"classifications", classifications},
                {"certificates", certificates},
                {"coloring", {{"colors", r.colors}, {"count", r.count}, {"omega", r.omega}, {"bound", 3 * r.omega / 2}}},
                {"checks",
                 {{{"name", "proper"}, {"passed", proper}},
                  {{"name", "bound"}, {"passed", within}},
                  {{"name", "replay"}, {"passed", replays}}}}};
    }
}
