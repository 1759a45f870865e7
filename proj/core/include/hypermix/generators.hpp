#pragma once

#include <cstdint>

#include "hypermix/hypergraph.hpp"

namespace hypermix {

/// m-uniform random hypergraph with every vertex degree <= max_degree.
/// Rejection-samples m-subsets of the vertices that still have degree budget;
/// duplicate edges are rejected. Deterministic for a fixed seed. May stop
/// short of edge_target when the degree budget (or the supply of fresh
/// subsets) runs out; callers compare edge_count() against their target.
Hypergraph gen_random_uniform(int n, int m, int max_degree, int edge_target,
                              std::uint64_t seed);

/// The frozen construction: q groups of m-1 vertices; every edge is one
/// vertex joined with a foreign group, {v} u V_j for v not in V_j. Colouring
/// each group a distinct colour yields a proper colouring from which no
/// single-vertex recolouring is valid. Every vertex has degree (q-1)*m.
Hypergraph gen_frozen(int q, int m);

struct Blowup {
    Hypergraph hypergraph;
    int block_size; // k = ceil(m/2)
};

/// Blow-up of a graph: each vertex becomes a block of k = ceil(m/2) fresh
/// vertices, each graph edge {u,v} the hyperedge W_u u W_v of size 2k. The
/// number of independent sets of the result equals
/// (2^k - 1)^n * Z_G(1/(2^k - 1)) for the hard-core partition function Z_G.
Blowup gen_blowup(const Hypergraph& graph, int m);

} // namespace hypermix
