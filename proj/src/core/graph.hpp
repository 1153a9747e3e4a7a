#pragma once

#include <utility>
#include <vector>

#include "core/vertex_set.hpp"

namespace maxpi {

// Immutable undirected simple graph over vertices 0..n-1 with bit-matrix
// adjacency. Graphs obtained by induced() remember the ids they had in the
// graph they were cut from, so solutions can be lifted back.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }

    VertexSet vertex_set() const { return VertexSet::full(n_); }
    std::vector<std::pair<int, int>> edges() const;

    // Subgraph induced by W; vertex i of the result is member i of W.
    Graph induced(const VertexSet& w) const;
    Graph without(const VertexSet& d) const { return induced(d.complement()); }

    // Ids the vertices carried in the graph this one was induced from.
    const std::vector<int>& parent_ids() const { return parent_ids_; }
    VertexSet lift(const VertexSet& sub, int parent_universe) const;

    VertexSet open_neighborhood(const VertexSet& w) const;
    VertexSet closed_neighborhood(const VertexSet& w) const;
    std::vector<VertexSet> components(const VertexSet& w) const;
    std::vector<VertexSet> components() const { return components(vertex_set()); }
    bool is_connected_set(const VertexSet& w) const;
    bool is_clique(const VertexSet& s) const;

    bool operator==(const Graph& o) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<int> parent_ids_;
};

// Exact maximum clique via branch and bound with greedy colouring bounds.
// Among all maximum cliques, returns the lexicographically smallest.
VertexSet maximum_clique(const Graph& g);

}  // namespace maxpi
