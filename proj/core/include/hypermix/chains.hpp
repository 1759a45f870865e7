#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypermix/hypergraph.hpp"
#include "hypermix/rng.hpp"

namespace hypermix {

/// Occupied-vertex set of the independent-set chain.
using IndSetState = boost::dynamic_bitset<>;

/// Per-vertex colours, values 1..q.
using ColouringState = std::vector<int>;

enum class ChainKind { IndependentSet, Colouring };

struct ChainParams {
    ChainKind kind = ChainKind::IndependentSet;
    double lambda = 1.0; // fugacity, independent-set kind
    int q = 0;           // colour count, colouring kind

    void check() const;
};

IndSetState empty_indset(int n);

/// True iff no edge lies entirely inside s.
bool is_independent(const Hypergraph& h, const IndSetState& s);

/// True iff no edge is monochromatic and all colours are in 1..q.
bool is_proper(const Hypergraph& h, const ColouringState& c, int q);

/// True iff s + v would contain some edge, i.e. v is critical for an edge.
bool insertion_blocked(const Hypergraph& h, const IndSetState& s, int v);

// A single Glauber proposal. The coin / colour is drawn before feasibility is
// checked so both halves of a coupled pair consume the identical stream.
struct IndSetMove {
    int vertex;
    bool occupy; // drawn with probability lambda/(1+lambda)
};
struct ColouringMove {
    int vertex;
    int colour; // uniform in 1..q
};

IndSetMove draw_indset_move(int n, double lambda, Rng& rng);
ColouringMove draw_colouring_move(int n, int q, Rng& rng);

/// Applies the move; returns true iff the state changed. occupy inserts the
/// vertex when the result stays independent, !occupy removes it when present.
bool apply_indset_move(const Hypergraph& h, IndSetState& s, const IndSetMove& mv);

/// Recolours iff the result stays proper; returns true iff the state changed.
bool apply_colouring_move(const Hypergraph& h, ColouringState& c, const ColouringMove& mv);

bool indset_step(const Hypergraph& h, IndSetState& s, double lambda, Rng& rng);
bool colouring_step(const Hypergraph& h, ColouringState& c, int q, Rng& rng);

long hamming(const IndSetState& a, const IndSetState& b);
long hamming(const ColouringState& a, const ColouringState& b);

struct IndSetTrajectory {
    IndSetState final_state;
    std::vector<IndSetState> samples;
    long accepted = 0;
};
struct ColouringTrajectory {
    ColouringState final_state;
    std::vector<ColouringState> samples;
    long accepted = 0;
};

/// Runs t_max steps from x0 (throws std::invalid_argument if x0 infeasible).
/// When sample_stride > 0 the state is recorded every sample_stride steps.
IndSetTrajectory run_indset_chain(const Hypergraph& h, IndSetState x0, double lambda,
                                  long t_max, std::uint64_t seed, long sample_stride = 0);
ColouringTrajectory run_colouring_chain(const Hypergraph& h, ColouringState x0, int q,
                                        long t_max, std::uint64_t seed, long sample_stride = 0);

/// Enumerates all n*q proposals and counts how many would change the state.
/// Zero means the chain is frozen at c.
int frozen_check(const Hypergraph& h, const ColouringState& c, int q);

/// First-fit proper colouring, or nullopt when the greedy order gets stuck.
std::optional<ColouringState> greedy_proper_colouring(const Hypergraph& h, int q);

} // namespace hypermix
