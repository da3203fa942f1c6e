#include <p5w4/errors.hpp>
#include <p5w4/harness.hpp>
#include <p5w4/json.hpp>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace p5w4
{
    namespace
    {
        auto ends_with(const string & s, const string & suffix) -> bool
        {
            return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
        }

        auto bad(int line, const string & what) -> GraphError
        {
            return GraphError{"line " + std::to_string(line) + ": " + what};
        }
    }

    auto read_dimacs(std::istream & in) -> Graph
    {
        int n = -1, m = -1, line_no = 0;
        vector<std::pair<int, int>> edges;
        string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls{line};
            string tag;
            if (! (ls >> tag) || tag == "c")
                continue;
            if (tag == "p") {
                string format;
                if (n >= 0)
                    throw bad(line_no, "second problem line");
                if (! (ls >> format >> n >> m) || (format != "edge" && format != "col") || n < 0 || m < 0)
                    throw bad(line_no, "expected 'p edge <n> <m>'");
            }
            else if (tag == "e") {
                int u, v;
                if (n < 0)
                    throw bad(line_no, "edge before the problem line");
                if (! (ls >> u >> v))
                    throw bad(line_no, "expected 'e <u> <v>'");
                if (u < 1 || v < 1 || u > n || v > n)
                    throw bad(line_no, "vertex out of range 1.." + std::to_string(n));
                edges.push_back({u - 1, v - 1});
            }
            else
                throw bad(line_no, "unknown line type '" + tag + "'");
            string extra;
            if (ls >> extra)
                throw bad(line_no, "trailing text '" + extra + "'");
        }
        if (n < 0)
            throw GraphError{"missing problem line"};
        if (int(edges.size()) != m)
            throw GraphError{"problem line announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size())};
        return Graph::from_edges(n, edges);
    }

    auto write_dimacs(std::ostream & out, const Graph & g) -> void
    {
        auto edges = g.edges();
        out << "p edge " << g.n() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges)
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }

    auto read_edge_list(std::istream & in) -> Graph
    {
        int n;
        if (! (in >> n) || n < 0)
            throw GraphError{"edge list must start with the vertex count"};
        vector<std::pair<int, int>> edges;
        int u, v;
        while (in >> u) {
            if (! (in >> v))
                throw GraphError{"edge list ends inside an edge"};
            edges.push_back({u, v});
        }
        if (! in.eof())
            throw GraphError{"edge list has a non-numeric token"};
        return Graph::from_edges(n, edges);
    }

    auto write_edge_list(std::ostream & out, const Graph & g) -> void
    {
        out << g.n() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
    }

    auto read_graph_file(const string & path) -> Graph
    {
        std::ifstream in{path};
        if (! in)
            throw GraphError{"cannot open " + path};
        if (ends_with(path, ".col"))
            return read_dimacs(in);
        if (ends_with(path, ".json")) {
            try {
                return nlohmann::json::parse(in).get<Graph>();
            }
            catch (const nlohmann::json::exception & e) {
                throw GraphError{path + ": " + e.what()};
            }
        }
        return read_edge_list(in);
    }

    auto write_graph_file(const string & path, const Graph & g) -> void
    {
        std::ofstream out{path};
        if (! out)
            throw GraphError{"cannot write " + path};
        if (ends_with(path, ".col"))
            write_dimacs(out, g);
        else if (ends_with(path, ".json"))
            out << nlohmann::json(g).dump() << '\n';
        else
            write_edge_list(out, g);
    }
}
