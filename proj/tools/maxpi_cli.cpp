// maxpi command-line front end. Batch use only: read a graph, pick a class
// and mode, print the solution and instrumentation. Talks to the solver
// exclusively through the C API in maxpi.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxpi.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitConstants = 2;
constexpr int kExitParse = 3;
constexpr int kExitOracleMismatch = 4;

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    ok = true;
    return buf.str();
}

void trace_to_stderr(const char* line, void*) { std::fprintf(stderr, "%s\n", line); }

struct GraphHandle {
    maxpi_graph* g = nullptr;
    ~GraphHandle() { maxpi_graph_free(g); }
};

struct ClassHandle {
    maxpi_class* c = nullptr;
    ~ClassHandle() { maxpi_class_free(c); }
};

struct ResultHandle {
    maxpi_result* r = nullptr;
    ~ResultHandle() { maxpi_result_free(r); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maxpi: exact maximum induced chordal/interval subgraph solver"};

    std::string input_path, class_name = "chordal", mode = "auto", constants_path;
    std::vector<std::string> overlay_paths;
    bool json_output = false, trace = false, oracle_check = false;
    int threads = 1;
    unsigned long long seed = 0;

    app.add_option("--input", input_path, "graph file, DIMACS-like edge format")->required();
    app.add_option("--class", class_name, "chordal | interval | chordal+F | interval+F");
    app.add_option("--overlay", overlay_paths, "extra forbidden induced subgraph, edge-list file (repeatable)");
    app.add_option("--mode", mode, "auto | structured | brute | forced-B1 | forced-B2");
    app.add_option("--constants", constants_path, "constant schedule file, key=value lines");
    app.add_flag("--json", json_output, "machine-readable output");
    app.add_flag("--trace", trace, "branch events as JSON lines on stderr");
    app.add_flag("--oracle-check", oracle_check, "verify against brute force when n is under the cap");
    app.add_option("--threads", threads, "worker threads for subset scans");
    app.add_option("--seed", seed, "seed for randomized workflows (reserved)");

    CLI11_PARSE(app, argc, argv);
    (void)seed;

    bool ok = false;
    std::string graph_text = read_file(input_path, ok);
    if (!ok) {
        std::fprintf(stderr, "error: cannot read %s\n", input_path.c_str());
        return kExitUsage;
    }

    GraphHandle graph;
    if (maxpi_graph_parse(graph_text.c_str(), &graph.g) != MAXPI_OK) {
        std::fprintf(stderr, "parse error: %s\n", maxpi_last_error());
        return kExitParse;
    }

    // class: an explicit +F suffix requires overlay files; overlay files imply it
    std::string base_name = class_name;
    bool wants_overlay = false;
    if (base_name.size() > 2 && base_name.substr(base_name.size() - 2) == "+F") {
        base_name = base_name.substr(0, base_name.size() - 2);
        wants_overlay = true;
    }
    if (wants_overlay && overlay_paths.empty()) {
        std::fprintf(stderr, "error: class '%s' needs at least one --overlay file\n", class_name.c_str());
        return kExitUsage;
    }

    ClassHandle base;
    if (maxpi_class_create(base_name.c_str(), &base.c) != MAXPI_OK) {
        std::fprintf(stderr, "error: %s\n", maxpi_last_error());
        return kExitUsage;
    }

    std::vector<GraphHandle> overlay_graphs(overlay_paths.size());
    ClassHandle overlaid;
    maxpi_class* cls = base.c;
    if (!overlay_paths.empty()) {
        std::vector<const maxpi_graph*> members;
        for (std::size_t i = 0; i < overlay_paths.size(); ++i) {
            std::string text = read_file(overlay_paths[i], ok);
            if (!ok) {
                std::fprintf(stderr, "error: cannot read %s\n", overlay_paths[i].c_str());
                return kExitUsage;
            }
            if (maxpi_graph_parse(text.c_str(), &overlay_graphs[i].g) != MAXPI_OK) {
                std::fprintf(stderr, "parse error in %s: %s\n", overlay_paths[i].c_str(), maxpi_last_error());
                return kExitParse;
            }
            members.push_back(overlay_graphs[i].g);
        }
        if (maxpi_class_with_overlay(base.c, members.data(), static_cast<int>(members.size()), &overlaid.c) !=
            MAXPI_OK) {
            std::fprintf(stderr, "error: %s\n", maxpi_last_error());
            return kExitUsage;
        }
        cls = overlaid.c;
        char* warnings = nullptr;
        if (maxpi_class_warnings(cls, &warnings) == MAXPI_OK) {
            if (warnings && warnings[0]) std::fprintf(stderr, "warning: %s", warnings);
            maxpi_string_free(warnings);
        }
    }

    std::string constants_text;
    if (!constants_path.empty()) {
        constants_text = read_file(constants_path, ok);
        if (!ok) {
            std::fprintf(stderr, "error: cannot read %s\n", constants_path.c_str());
            return kExitUsage;
        }
    }
    if (mode != "brute") {
        maxpi_status st = maxpi_constants_validate(constants_text.empty() ? nullptr : constants_text.c_str());
        if (st == MAXPI_ERR_CONSTANTS) {
            std::fprintf(stderr, "constants error: %s\n", maxpi_last_error());
            return kExitConstants;
        }
        if (st != MAXPI_OK) {
            std::fprintf(stderr, "error: %s\n", maxpi_last_error());
            return kExitUsage;
        }
    }

    maxpi_solve_options opts;
    maxpi_solve_options_init(&opts);
    opts.mode = mode.c_str();
    if (!constants_text.empty()) opts.constants_text = constants_text.c_str();
    opts.threads = threads;
    if (trace) opts.trace = trace_to_stderr;

    ResultHandle result;
    maxpi_status st = maxpi_solve(graph.g, cls, &opts, &result.r);
    if (st == MAXPI_ERR_CONSTANTS) {
        std::fprintf(stderr, "constants error: %s\n", maxpi_last_error());
        return kExitConstants;
    }
    if (st != MAXPI_OK) {
        std::fprintf(stderr, "error: %s\n", maxpi_last_error());
        return kExitUsage;
    }

    const int* ids = nullptr;
    int count = 0;
    maxpi_result_vertices(result.r, &ids, &count);

    std::string verdict;
    int exit_code = 0;
    if (oracle_check) {
        int cap = 22;
        if (const char* env = std::getenv("MAXPI_ORACLE_CAP")) cap = std::atoi(env);
        ResultHandle oracle;
        maxpi_status ost = maxpi_oracle_solve(graph.g, cls, cap, &oracle.r);
        if (ost == MAXPI_ERR_CAP_EXCEEDED) {
            verdict = "skipped";
        } else if (ost != MAXPI_OK) {
            std::fprintf(stderr, "error: %s\n", maxpi_last_error());
            return kExitUsage;
        } else if (maxpi_result_size(oracle.r) == count) {
            verdict = "agree";
        } else {
            verdict = "disagree";
            exit_code = kExitOracleMismatch;
        }
    }

    if (json_output) {
        char* stats = nullptr;
        if (maxpi_result_stats_json(result.r, &stats) != MAXPI_OK) {
            std::fprintf(stderr, "error: %s\n", maxpi_last_error());
            return kExitUsage;
        }
        nlohmann::json j = nlohmann::json::parse(stats);
        maxpi_string_free(stats);
        // external ids are 1-indexed
        for (auto& v : j["vertices"]) v = v.get<int>() + 1;
        if (!verdict.empty()) j["oracle_check"] = verdict;
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("size %d\n", count);
        std::string verts;
        for (int i = 0; i < count; ++i) {
            if (i) verts += ' ';
            verts += std::to_string(ids[i] + 1);
        }
        std::printf("vertices %s\n", verts.c_str());
        if (!verdict.empty()) std::printf("oracle %s\n", verdict.c_str());
    }
    return exit_code;
}
