#include "core/dimacs.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace maxpi {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg, line);
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    long long declared_m = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail(lineno, "duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> declared_m) || kind != "edge" || n < 0 || declared_m < 0)
                fail(lineno, "malformed problem line, expected 'p edge <n> <m>'");
            continue;
        }
        if (tag == "e") {
            if (n < 0) fail(lineno, "edge before problem line");
            long long u, v;
            if (!(ls >> u >> v)) fail(lineno, "malformed edge line, expected 'e <u> <v>'");
            std::string extra;
            if (ls >> extra) fail(lineno, "trailing tokens on edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "edge endpoint out of range [1," + std::to_string(n) + "]");
            if (u == v) fail(lineno, "self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        fail(lineno, "unknown line tag '" + tag + "'");
    }
    if (n < 0) fail(lineno == 0 ? 1 : lineno, "missing problem line");
    return Graph(n, edges);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

}  // namespace maxpi
