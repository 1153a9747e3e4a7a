#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace maxpi {

struct ChordalityResult {
    bool chordal = false;
    // On failure, a vertex set inducing a chordless cycle of length >= 4.
    std::optional<VertexSet> hole;
};

ChordalityResult is_chordal(const Graph& g);

// Clique tree of a chordal graph: bags are the maximal cliques, and for every
// vertex the bags containing it form a subtree.
struct CliqueTree {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> edges;
};

CliqueTree clique_tree(const Graph& g);

struct SeparatorSplit {
    VertexSet s;
    VertexSet x1;
    VertexSet x2;
};

// 2/3-balanced clique separator of a chordal graph: S a clique, X1/X2 a
// partition of the rest with no cross edges and each side at most 2n/3.
SeparatorSplit balanced_clique_separator(const Graph& h);

bool is_interval(const Graph& g);

// Clique-separator compatibility tests (the polynomial algorithm that
// composes under gluing along equal-size cliques).
bool separator_test_chordal(const Graph& g, const VertexSet& s);
bool separator_test_interval(const Graph& g, const VertexSet& s);

// Chordless cycle of minimum length among those with length in [4, max_len].
std::optional<VertexSet> shortest_hole(const Graph& g, int max_len);

// Minimum-length hole of length at most ell.
std::optional<VertexSet> find_forbidden_chordal(const Graph& g, int ell);

// Smallest induced member of the Lekkerkerker-Boland family (bipartite claw,
// umbrella, k-net, k-tent, C_k) with at most ell vertices.
std::optional<VertexSet> find_forbidden_interval(const Graph& g, int ell);

// Test helper: running-intersection and maximality checks for a clique tree.
bool valid_clique_tree(const Graph& g, const CliqueTree& t);

}  // namespace maxpi
