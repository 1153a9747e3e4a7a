#pragma once

#include <cstdint>
#include <vector>

#include "core/graph.hpp"
#include "core/pi_class.hpp"

namespace maxpi {

// Independent reference implementations: everything here is written against
// the definitions directly and stays apart from the solver code paths it is
// used to check.

// Exact maximum induced Pi-subgraph by descending-size subset enumeration.
// Refuses graphs above the cap.
VertexSet brute_force_max_induced(const Graph& g, const PiClass& pi, int cap = 22);

// All subsets B with v in B, G[B] connected, |B| = b+1, |N(B)| = f, by
// filtering every subset. Refuses graphs above the cap.
std::vector<VertexSet> brute_force_connected_sets(const Graph& g, int v, int b, int f, int cap = 16);

// Deterministic generators.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
Graph random_gnp(int n, double p, std::uint64_t seed);
// Intersection graph of random subtrees of a random tree; always chordal.
Graph random_chordal(int n, std::uint64_t seed);
// Intersection graph of random segments; always interval.
Graph random_interval(int n, std::uint64_t seed);

struct B2InstanceSpec {
    int edge_components = 5;    // disjoint path components of size component_size
    int component_size = 2;
    int apex_clique = 1;        // clique adjacent to all component vertices
    int distractors = 0;        // pendant vertices that each force one deletion
    std::uint64_t seed = 0;
};

struct PlantedInstance {
    Graph graph;
    int optimum = 0;  // oracle-verified before emission
};

// Apex clique over small components plus optional distractors; the planted
// optimum is checked against brute force before the instance is returned.
PlantedInstance generate_planted_b2_instance(const B2InstanceSpec& spec, const PiClass& pi);

// Two Pi-blobs glued on a shared clique; the whole graph is a Pi-member.
PlantedInstance generate_planted_separator_instance(int side_n, int clique_size, std::uint64_t seed,
                                                    const PiClass& pi);

}  // namespace maxpi
