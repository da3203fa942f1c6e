#include <p5w4/errors.hpp>
#include <p5w4/harness.hpp>
#include <p5w4/json.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace p5w4;
using std::string;
using std::vector;

namespace
{
    enum Exit
    {
        ok = 0,
        bad_input = 2,
        not_in_class = 3,
        resource_cap = 4,
        bug_trap = 5,
        verification_failed = 6
    };

    // raised when a self-check inside a subcommand fails
    struct CheckFailed : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto default_seed() -> std::uint64_t
    {
        if (auto s = std::getenv("P5W4_SEED")) {
            try {
                return std::stoull(s);
            }
            catch (const std::exception &) {
                throw GraphError{string{"P5W4_SEED is not a number: "} + s};
            }
        }
        return 1;
    }

    auto print(const nlohmann::json & j) -> void
    {
        std::cout << j.dump(2) << '\n';
    }

    auto require_class(const Graph & g) -> void
    {
        if (auto p5 = find_induced(g, Pattern{PatternKind::p5}))
            throw MembershipError{"graph has an induced P5 on " + nlohmann::json(*p5).dump()};
        if (auto w4 = find_induced(g, Pattern{PatternKind::four_wheel}))
            throw MembershipError{"graph has an induced 4-wheel on " + nlohmann::json(*w4).dump()};
    }

    auto write_graph(const Graph & g, const string & path, const string & format) -> void
    {
        if (! path.empty()) {
            write_graph_file(path, g);
            return;
        }
        if (format == "col")
            write_dimacs(std::cout, g);
        else if (format == "json")
            std::cout << nlohmann::json(g).dump() << '\n';
        else
            write_edge_list(std::cout, g);
    }

    auto cmd_recognize(const string & file, const string & pattern) -> int
    {
        auto g = read_graph_file(file);
        if (pattern.empty()) {
            auto p5 = find_induced(g, Pattern{PatternKind::p5});
            auto w4 = find_induced(g, Pattern{PatternKind::four_wheel});
            print({{"n", g.n()}, {"in_class", ! p5 && ! w4}, {"p5", p5 ? nlohmann::json(*p5) : nullptr},
                   {"four_wheel", w4 ? nlohmann::json(*w4) : nullptr}});
            return ok;
        }
        auto p = Pattern::parse(pattern);
        auto hit = find_induced(g, p);
        print({{"pattern", p.name()}, {"found", hit.has_value()}, {"vertices", hit ? nlohmann::json(*hit) : nullptr}});
        return ok;
    }

    auto cmd_color(const string & file, const string & audit_path, bool exact_check, int max_exact_n) -> int
    {
        auto g = read_graph_file(file);
        require_class(g);
        auto r = color(g);
        int bound = 3 * r.omega / 2;
        nlohmann::json out = {{"n", g.n()}, {"omega", r.omega}, {"colors_used", r.count}, {"bound", bound},
                              {"coloring", r.colors}};
        bool good = check_proper(g, r.colors) && r.count <= bound && replay(g, r.audit) == r.colors;
        if (exact_check) {
            if (g.n() > max_exact_n)
                throw ResourceError{"exact check needs n <= " + std::to_string(max_exact_n) + ", graph has " +
                                    std::to_string(g.n())};
            int chi = chi_exact(g).chi;
            out["chi"] = chi;
            good = good && chi <= r.count && chi <= bound;
        }
        out["valid"] = good;
        if (! audit_path.empty()) {
            std::ofstream a{audit_path};
            if (! a)
                throw GraphError{"cannot write " + audit_path};
            a << audit_json(g, r).dump(2) << '\n';
        }
        print(out);
        if (! good)
            throw CheckFailed{"colouring failed its own checks"};
        return ok;
    }

    auto cmd_decompose(const string & file) -> int
    {
        auto g = read_graph_file(file);
        auto out = nlohmann::json::array();
        for (auto & comp : components(g)) {
            auto sub = induced_subgraph(g, comp);
            auto tree = atom_tree(sub.graph);
            nlohmann::json nodes = tree;
            // node labels are relative to the component; lift them to the input graph
            auto lift = [&](nlohmann::json & vs) {
                for (auto & v : vs)
                    v = sub.to_parent[v.get<int>()];
            };
            for (auto & node : nodes) {
                lift(node["vertices"]);
                if (! node["split"].is_null())
                    for (auto key : {"q", "v1", "v2"})
                        lift(node["split"][key]);
            }
            out.push_back({{"component", comp}, {"leaves", tree.leaves()}, {"nodes", nodes}});
        }
        print({{"n", g.n()}, {"components", out}});
        return ok;
    }

    auto cmd_classify(const string & file) -> int
    {
        auto g = read_graph_file(file);
        require_class(g);
        auto r = color(g);
        auto atoms = nlohmann::json::array();
        for (auto & step : r.audit.steps) {
            if (! step.atom)
                continue;
            auto & cls = *step.atom;
            nlohmann::json entry = {{"vertices", step.vertices}, {"tag", to_string(cls.tag)},
                                    {"trigger", to_string(cls.trigger)}};
            if (cls.nice) {
                auto sub = induced_subgraph(g, step.vertices);
                entry["certificate"] = *cls.nice;
                entry["verdict"] = verify_nice(sub.graph, {sub.lower(cls.nice->s1), sub.lower(cls.nice->s2),
                                                           sub.lower(cls.nice->s3)});
            }
            if (! cls.record.tag.empty())
                entry["case"] = cls.record.tag;
            atoms.push_back(entry);
        }
        print({{"n", g.n()}, {"atoms", atoms}});
        return ok;
    }

    auto report_exit(const VerificationReport & r, const string & report_path) -> int
    {
        nlohmann::json j = r;
        if (! report_path.empty()) {
            std::ofstream out{report_path};
            if (! out)
                throw GraphError{"cannot write " + report_path};
            out << j.dump(2) << '\n';
        }
        j.erase("fixtures");
        j["fixture_count"] = r.fixtures.size();
        j["failures"] = r.failures();
        print(j);
        return r.failures() == 0 ? ok : verification_failed;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Certified colouring of (P5, 4-wheel)-free graphs"};
    app.require_subcommand(1);
    int max_exact_n = 16;
    app.add_option("--max-exact-n", max_exact_n, "largest n for exact chromatic number checks")
        ->check(CLI::Range(0, 48));

    string file, pattern, audit_path, out_path, format = "col", report_path, corpus;
    bool exact_check = false, structured = false;

    auto recognize = app.add_subcommand("recognize", "find an induced pattern, or test class membership");
    recognize->add_option("file", file, "graph file (.col, .json or edge list)")->required();
    recognize->add_option("--pattern", pattern, "e.g. P5, FourWheel, KWheel(6), OddHole(7)");

    auto colour = app.add_subcommand("color", "colour with at most 3w/2 colours");
    colour->add_option("file", file)->required();
    colour->add_option("--audit", audit_path, "write the JSON audit here");
    colour->add_flag("--exact-check", exact_check, "compare against the exact chromatic number");

    auto decompose = app.add_subcommand("decompose", "clique cutset decomposition tree");
    decompose->add_option("file", file)->required();

    auto classify = app.add_subcommand("classify", "classify every atom as perfect, nice or quasi-line");
    classify->add_option("file", file)->required();

    auto gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    gen->add_option("-o,--out", out_path, "output file; the extension picks the format");
    gen->add_option("--format", format, "stdout format")->check(CLI::IsMember({"col", "edges", "json"}));
    int k = 1;
    auto gstar = gen->add_subcommand("gstar", "clique-blowup of G* with parts of size k");
    gstar->add_option("--k", k)->check(CLI::PositiveNumber);
    vector<int> sizes;
    auto hstar = gen->add_subcommand("hstar", "clique-blowup of H*");
    hstar->add_option("--sizes", sizes, "nine part sizes")->delimiter(',')->required();
    int n = 10;
    double p = 0.5;
    std::optional<std::uint64_t> seed;
    auto random = gen->add_subcommand("random", "random in-class graph");
    random->add_option("--n", n)->check(CLI::NonNegativeNumber);
    random->add_option("--p", p)->check(CLI::Range(0.0, 1.0));
    random->add_option("--seed", seed, "defaults to P5W4_SEED or 1");
    random->add_flag("--structured", structured, "sample blowups of known class members");

    auto verify = app.add_subcommand("verify", "check the colouring bound and certificates over a sweep");
    int exhaustive_n = -1, random_count = -1, min_n = 8, max_n = 16;
    auto ex = verify->add_option("--exhaustive-n", exhaustive_n, "all connected graphs on n <= N vertices")
                  ->check(CLI::Range(1, 7));
    auto cp = verify->add_option("--corpus", corpus, "directory of graph files");
    auto rc = verify->add_option("--random", random_count, "number of random in-class instances")
                  ->check(CLI::PositiveNumber);
    verify->add_option("--min-n", min_n);
    verify->add_option("--max-n", max_n);
    verify->add_option("--seed", seed, "defaults to P5W4_SEED or 1");
    verify->add_option("--report", report_path, "write the full report with fixtures here");
    ex->excludes(cp)->excludes(rc);
    cp->excludes(rc);

    // global and gen options may follow the subcommand
    for (auto sub : {recognize, colour, decompose, classify, gen, gstar, hstar, random, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (*recognize)
            return cmd_recognize(file, pattern);
        if (*colour)
            return cmd_color(file, audit_path, exact_check, max_exact_n);
        if (*decompose)
            return cmd_decompose(file);
        if (*classify)
            return cmd_classify(file);
        if (*gen) {
            if (*gstar)
                write_graph(gen_gstar(k), out_path, format);
            else if (*hstar)
                write_graph(gen_hstar_blowup(sizes), out_path, format);
            else {
                auto d = gen_random_in_class(n, p, seed.value_or(default_seed()), structured);
                if (! d) {
                    std::cerr << "no in-class graph within the draw budget\n";
                    return resource_cap;
                }
                write_graph(d->graph, out_path, format);
            }
            return ok;
        }
        if (*verify) {
            VerifyOptions options;
            options.max_exact_n = max_exact_n;
            Verifier v{options};
            if (exhaustive_n > 0) {
                for (int size = 1; size <= exhaustive_n; ++size)
                    enumerate_small(size, true, false, [&](const Graph & g) { v.add(g, "exhaustive n=" + std::to_string(size)); });
            }
            else if (! corpus.empty()) {
                if (! std::filesystem::is_directory(corpus))
                    throw GraphError{corpus + " is not a directory"};
                vector<std::filesystem::path> files;
                for (auto & e : std::filesystem::directory_iterator{corpus})
                    if (e.is_regular_file())
                        files.push_back(e.path());
                std::sort(files.begin(), files.end());
                for (auto & f : files)
                    v.add(read_graph_file(f.string()), f.string());
            }
            else if (random_count > 0)
                random_sweep(v, random_count, min_n, max_n, seed.value_or(default_seed()));
            else
                throw GraphError{"verify needs one of --exhaustive-n, --corpus or --random"};
            return report_exit(v.report(), report_path);
        }
    }
    catch (const GraphError & e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return bad_input;
    }
    catch (const MembershipError & e) {
        std::cerr << "not (P5, 4-wheel)-free: " << e.what() << '\n';
        return not_in_class;
    }
    catch (const ResourceError & e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return resource_cap;
    }
    catch (const BugTrap & e) {
        std::cerr << "bug trap: " << e.what() << '\n';
        return bug_trap;
    }
    catch (const CheckFailed & e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return verification_failed;
    }
    return ok;
}
