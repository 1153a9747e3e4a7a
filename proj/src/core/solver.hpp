#pragma once

#include <functional>
#include <optional>
#include <string>

#include "core/constants.hpp"
#include "core/graph.hpp"
#include "core/pi_class.hpp"

namespace maxpi {

enum class SolveMode { automatic, structured, brute, forced_b1, forced_b2 };

std::optional<SolveMode> parse_mode(const std::string& name);
std::string mode_name(SolveMode mode);

struct BranchCounters {
    long long step1 = 0, step2 = 0, step3 = 0, step4 = 0, step5 = 0;
    long long case_a = 0, b11 = 0, b12 = 0, b13 = 0, b2 = 0;
};

struct SolveStats {
    BranchCounters branches;
    long long candidates_enumerated = 0;
    long long two_table_columns = 0;
    long long oracle_calls = 0;
    double elapsed_ms = 0;
};

struct Solution {
    VertexSet vertices;
    SolveStats stats;
};

struct SolveOptions {
    std::function<void(const std::string&)> trace;  // one JSON line per branch event
    int threads = 1;
};

// Maximum induced Pi-subgraph. auto: membership shortcut, then the structured
// pipeline; structured: finite-deletion wrapper around Step 1 / Case A /
// Case B; brute: descending subset scan; forced-B1/forced-B2 run one branch
// family with the separator loop over all cliques (validation is waived).
Solution solve(const Graph& g, const PiClass& pi, const ConstantSchedule& c, SolveMode mode,
               const SolveOptions& opts = {});

// Exposed pipeline pieces.
VertexSet brute_force_inner(const Graph& g, const PiClass& pi);

Solution solve_case_a(const Graph& g, const PiClass& pi, const VertexSet& k);

struct BandResult {
    bool terminal = false;
    VertexSet best;
};

// Step 2: scan subset sizes outside the beta-band around n/2. Terminal when
// the optimum is provably outside the open band, otherwise `best` carries the
// largest set found so far.
BandResult solve_step2_band(const Graph& g, const PiClass& pi, double beta);

std::optional<Solution> solve_branch_b1(const Graph& g, const PiClass& pi, const VertexSet& s,
                                        const ConstantSchedule& c, std::pair<int, int> sizes);

std::optional<Solution> solve_branch_b2(const Graph& g, const PiClass& pi, const VertexSet& s,
                                        const ConstantSchedule& c);

}  // namespace maxpi
