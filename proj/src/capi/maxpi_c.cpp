#include "maxpi.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "core/constants.hpp"
#include "core/dimacs.hpp"
#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "core/pi_class.hpp"
#include "core/solver.hpp"

using maxpi::Error;
using maxpi::ErrorCode;

struct maxpi_graph {
    maxpi::Graph g;
};

struct maxpi_class {
    maxpi::PiClass pi;
};

struct maxpi_result {
    maxpi::Solution sol;
    std::string mode;
    std::string class_name;
    int n = 0, m = 0;
    std::vector<int> vertices;
};

namespace {

thread_local std::string g_last_error;
thread_local int g_last_error_line = 0;

maxpi_status set_error(const Error& e) {
    g_last_error = e.what();
    g_last_error_line = e.line();
    switch (e.code()) {
        case ErrorCode::invalid_argument: return MAXPI_ERR_INVALID_ARGUMENT;
        case ErrorCode::parse: return MAXPI_ERR_PARSE;
        case ErrorCode::constants: return MAXPI_ERR_CONSTANTS;
        case ErrorCode::cap_exceeded: return MAXPI_ERR_CAP_EXCEEDED;
        case ErrorCode::unsupported: return MAXPI_ERR_UNSUPPORTED;
    }
    return MAXPI_ERR_INTERNAL;
}

maxpi_status set_error_message(maxpi_status st, const std::string& msg) {
    g_last_error = msg;
    g_last_error_line = 0;
    return st;
}

void clear_error() {
    g_last_error.clear();
    g_last_error_line = 0;
}

template <typename Fn>
maxpi_status guarded(Fn&& fn) {
    try {
        clear_error();
        return fn();
    } catch (const Error& e) {
        return set_error(e);
    } catch (const std::invalid_argument& e) {
        return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return set_error_message(MAXPI_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error_message(MAXPI_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

nlohmann::json stats_json(const maxpi_result& r) {
    const maxpi::SolveStats& st = r.sol.stats;
    nlohmann::json j;
    j["mode"] = r.mode;
    j["class"] = r.class_name;
    j["n"] = r.n;
    j["m"] = r.m;
    j["optimum_size"] = static_cast<int>(r.vertices.size());
    j["vertices"] = r.vertices;
    j["branches"] = {{"step1", st.branches.step1}, {"step2", st.branches.step2},
                     {"step3", st.branches.step3}, {"step4", st.branches.step4},
                     {"step5", st.branches.step5}, {"caseA", st.branches.case_a},
                     {"b11", st.branches.b11},     {"b12", st.branches.b12},
                     {"b13", st.branches.b13},     {"b2", st.branches.b2}};
    j["candidates_enumerated"] = st.candidates_enumerated;
    j["two_table_columns"] = st.two_table_columns;
    j["elapsed_ms"] = st.elapsed_ms;
    return j;
}

maxpi_result* make_result(maxpi::Solution sol, const std::string& mode, const maxpi_class* c,
                          const maxpi_graph* g) {
    auto* r = new maxpi_result;
    r->sol = std::move(sol);
    r->mode = mode;
    r->class_name = c->pi.name;
    r->n = g->g.vertex_count();
    r->m = g->g.edge_count();
    r->vertices = r->sol.vertices.members();
    return r;
}

}  // namespace

extern "C" {

const char* maxpi_version(void) { return "1.0.0"; }

const char* maxpi_last_error(void) { return g_last_error.c_str(); }

int maxpi_last_error_line(void) { return g_last_error_line; }

maxpi_status maxpi_graph_parse(const char* text, maxpi_graph** out) {
    if (!text || !out) return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new maxpi_graph{maxpi::parse_graph(text)};
        return MAXPI_OK;
    });
}

maxpi_status maxpi_graph_create(int n, const int* edge_pairs, int m, maxpi_graph** out) {
    if (!out || (m > 0 && !edge_pairs)) return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) edges.emplace_back(edge_pairs[2 * i], edge_pairs[2 * i + 1]);
        *out = new maxpi_graph{maxpi::Graph(n, edges)};
        return MAXPI_OK;
    });
}

void maxpi_graph_free(maxpi_graph* g) { delete g; }

int maxpi_graph_vertex_count(const maxpi_graph* g) { return g ? g->g.vertex_count() : -1; }

int maxpi_graph_edge_count(const maxpi_graph* g) { return g ? g->g.edge_count() : -1; }

maxpi_status maxpi_graph_format(const maxpi_graph* g, char** out_text) {
    if (!g || !out_text) return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_text = dup_string(maxpi::format_graph(g->g));
        return MAXPI_OK;
    });
}

maxpi_status maxpi_class_create(const char* name, maxpi_class** out) {
    if (!name || !out) return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> maxpi_status {
        std::string s(name);
        if (s == "chordal") *out = new maxpi_class{maxpi::make_chordal_class()};
        else if (s == "interval") *out = new maxpi_class{maxpi::make_interval_class()};
        else
            return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "unknown class '" + s + "'");
        return MAXPI_OK;
    });
}

maxpi_status maxpi_class_with_overlay(const maxpi_class* base, const maxpi_graph* const* members,
                                      int count, maxpi_class** out) {
    if (!base || !out || (count > 0 && !members))
        return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<maxpi::Graph> fam;
        fam.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) fam.push_back(members[i]->g);
        *out = new maxpi_class{maxpi::overlay_finite_family(base->pi, fam)};
        return MAXPI_OK;
    });
}

void maxpi_class_free(maxpi_class* c) { delete c; }

const char* maxpi_class_name(const maxpi_class* c) { return c ? c->pi.name.c_str() : ""; }

int maxpi_class_membership(const maxpi_class* c, const maxpi_graph* g) {
    if (!c || !g) return -static_cast<int>(MAXPI_ERR_INVALID_ARGUMENT);
    int result = -1;
    maxpi_status st = guarded([&] {
        result = c->pi.membership(g->g) ? 1 : 0;
        return MAXPI_OK;
    });
    if (st != MAXPI_OK) return -static_cast<int>(st);
    return result;
}

maxpi_status maxpi_class_warnings(const maxpi_class* c, char** out_text) {
    if (!c || !out_text) return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "null argument");
    std::string all;
    for (const auto& w : c->pi.warnings) {
        all += w;
        all += '\n';
    }
    *out_text = dup_string(all);
    return MAXPI_OK;
}

void maxpi_solve_options_init(maxpi_solve_options* opts) {
    if (!opts) return;
    opts->mode = "auto";
    opts->constants_text = nullptr;
    opts->threads = 1;
    opts->trace = nullptr;
    opts->trace_user = nullptr;
}

maxpi_status maxpi_constants_validate(const char* constants_text) {
    return guarded([&]() -> maxpi_status {
        maxpi::ConstantSchedule c =
            constants_text ? maxpi::ConstantSchedule::parse(constants_text) : maxpi::ConstantSchedule::defaults();
        auto violations = maxpi::validate_constants(c, 0);
        if (violations.empty()) return MAXPI_OK;
        std::string msg = "invalid constant schedule:";
        for (const auto& v : violations) msg += " [" + v + "]";
        return set_error_message(MAXPI_ERR_CONSTANTS, msg);
    });
}

maxpi_status maxpi_solve(const maxpi_graph* g, const maxpi_class* c, const maxpi_solve_options* opts,
                         maxpi_result** out) {
    if (!g || !c || !out) return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> maxpi_status {
        maxpi_solve_options defaults;
        maxpi_solve_options_init(&defaults);
        const maxpi_solve_options& o = opts ? *opts : defaults;

        auto mode = maxpi::parse_mode(o.mode ? o.mode : "auto");
        if (!mode) return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, std::string("unknown mode '") + o.mode + "'");
        maxpi::ConstantSchedule sched =
            o.constants_text ? maxpi::ConstantSchedule::parse(o.constants_text) : maxpi::ConstantSchedule::defaults();

        maxpi::SolveOptions sopts;
        sopts.threads = o.threads > 0 ? o.threads : 1;
        if (o.trace) {
            maxpi_trace_fn fn = o.trace;
            void* user = o.trace_user;
            sopts.trace = [fn, user](const std::string& line) { fn(line.c_str(), user); };
        }
        maxpi::Solution sol = maxpi::solve(g->g, c->pi, sched, *mode, sopts);
        *out = make_result(std::move(sol), maxpi::mode_name(*mode), c, g);
        return MAXPI_OK;
    });
}

maxpi_status maxpi_oracle_solve(const maxpi_graph* g, const maxpi_class* c, int cap, maxpi_result** out) {
    if (!g || !c || !out) return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        maxpi::Solution sol{maxpi::brute_force_max_induced(g->g, c->pi, cap), {}};
        sol.stats.oracle_calls = 1;
        *out = make_result(std::move(sol), "oracle", c, g);
        return MAXPI_OK;
    });
}

int maxpi_result_size(const maxpi_result* r) { return r ? static_cast<int>(r->vertices.size()) : -1; }

maxpi_status maxpi_result_vertices(const maxpi_result* r, const int** ids, int* count) {
    if (!r || !ids || !count) return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "null argument");
    *ids = r->vertices.data();
    *count = static_cast<int>(r->vertices.size());
    return MAXPI_OK;
}

maxpi_status maxpi_result_stats_json(const maxpi_result* r, char** out_json) {
    if (!r || !out_json) return set_error_message(MAXPI_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_json = dup_string(stats_json(*r).dump());
        return MAXPI_OK;
    });
}

void maxpi_result_free(maxpi_result* r) { delete r; }

void maxpi_string_free(char* s) { delete[] s; }

}  // extern "C"
