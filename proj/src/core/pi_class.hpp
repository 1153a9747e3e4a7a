#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace maxpi {

// A target graph class packaged as the four properties the solver relies on:
// hereditary subclass of chordal graphs, clique bound aleph on minimal
// forbidden subgraphs, polynomial membership, and the clique-separator
// compatibility test.
struct PiClass {
    std::string name;
    int aleph = 0;
    std::function<bool(const Graph&)> membership;
    std::function<bool(const Graph&, const VertexSet&)> separator_test;
    std::function<std::optional<VertexSet>(const Graph&, int)> forbidden_finder;
    std::vector<Graph> overlay_family;
    std::vector<std::string> warnings;

    // Largest overlay member, 0 when no overlay.
    int overlay_bound() const;
};

PiClass make_chordal_class();
PiClass make_interval_class();

// Restricts `base` by a finite family of additional forbidden induced
// subgraphs. Membership, and the forbidden finder, are extended; aleph and
// the separator test are inherited.
PiClass overlay_finite_family(const PiClass& base, const std::vector<Graph>& family);

// Backtracking induced-subgraph-isomorphism test: does g contain an induced
// copy of pattern? Returns the image when found.
std::optional<VertexSet> find_induced_copy(const Graph& g, const Graph& pattern);

}  // namespace maxpi
