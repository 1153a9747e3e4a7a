#pragma once

#include <functional>
#include <vector>

#include "core/graph.hpp"
#include "core/pi_class.hpp"

namespace maxpi {

// Branching exponents. sigma_prime comes from the bound "subsets of size at
// most n/3 number at most 1.89^n"; sigma is the smallest exponent with
// 2^sigma (2^sigma - 1) >= 1.89, and rho = (3 + sigma) / 4.
struct SigmaConstants {
    double sigma_prime;
    double sigma;
    double rho;

    static SigmaConstants standard();
};

// A branch leaf: vertices assumed in / assumed out of the candidate set.
struct BranchPair {
    VertexSet assumed_in;
    VertexSet assumed_out;
};

double branch_pair_potential(const BranchPair& pair, int host_size, const SigmaConstants& sc);

// Degree reduction of the residual graph R: produces pairs (A, D) such that
// every vertex of R minus D has degree below 3C there, and for every Y whose
// R[Y]-components have at most C vertices some pair has A inside Y and D
// disjoint from it. Total potential at most 2^(sigma |V(R)|).
std::vector<BranchPair> degree_reduction_branch(const Graph& r, double component_cap,
                                                const SigmaConstants& sc);

// Candidate small-side sets assembled from the degree-reduction pairs: pairs
// with |A|+|D| >= |V(R)|/4 contribute A plus every subset of the undecided
// part; the remaining pairs contribute only subsets covering at least two
// thirds of it. Deduplicated; at most 2 * 2^(rho |V(R)|) candidates.
std::vector<VertexSet> enumerate_small_side_candidates(const Graph& r, double component_cap,
                                                       const SigmaConstants& sc);

// Branching on small forbidden subgraphs: reduces the search to graphs with no
// forbidden subgraph of at most ell vertices, then calls `inner` on them.
// Returns a maximum-cardinality W inducing a Pi-member with no forbidden
// subgraph of size at most ell. `trace` receives one JSON line per branch
// event when set.
VertexSet finite_deletion_solve(const Graph& g, const PiClass& pi, int ell,
                                const std::function<VertexSet(const Graph&)>& inner, double epsilon,
                                const std::function<void(const std::string&)>& trace = {});

// Largest X inside the clique K with G[P + X] in Pi, found by colouring the
// small subsets of K and branching on non-red ones. Returns P + X.
VertexSet max_clique_extension(const Graph& g, const VertexSet& p, const VertexSet& k, const PiClass& pi);

}  // namespace maxpi
