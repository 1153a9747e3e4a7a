#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace maxpi {

// All connected sets B with v in B, |B| = b+1 and |N(B)| = f, enumerated by
// include/exclude frontier branching; at most C(b+f, b) sets. Output sorted.
std::vector<VertexSet> enumerate_connected_sets(const Graph& g, int v, int b, int f);

// All sets B with P subseteq B, |B| = size, |N(B)| = nbr_size, and every
// component of G[B] meeting P. Realized by adding an apex adjacent to P and
// enumerating connected sets around it.
std::vector<VertexSet> enumerate_connected_supersets(const Graph& g, const VertexSet& p, int size,
                                                     int nbr_size);

// 2-Table instance: find one column of each table summing to the target.
struct TableInstance {
    int k = 0;
    std::vector<std::vector<std::uint8_t>> cols1;
    std::vector<std::vector<std::uint8_t>> cols2;
    std::vector<std::uint8_t> target;
};

struct TwoTableStats {
    long long vector_comparisons = 0;
    long long element_comparisons = 0;
};

// Sort + binary search; smallest (i, j) lexicographically when several pairs
// match.
std::optional<std::pair<int, int>> two_table_solve(const TableInstance& inst,
                                                   TwoTableStats* stats = nullptr);

}  // namespace maxpi
