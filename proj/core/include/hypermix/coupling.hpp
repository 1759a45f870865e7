#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypermix/chains.hpp"
#include "hypermix/hypergraph.hpp"
#include "hypermix/rng.hpp"

namespace hypermix {

// Identity coupling: each step draws one (vertex, coin/colour) proposal and
// applies it to both copies. Once the copies agree they agree forever.

struct IndSetPair {
    IndSetState x, y;
    long hamming = 0;
    long steps = 0;
};
struct ColouringPair {
    ColouringState x, y;
    long hamming = 0;
    long steps = 0;
};

IndSetPair make_indset_pair(const Hypergraph& h, IndSetState x, IndSetState y);
ColouringPair make_colouring_pair(const Hypergraph& h, ColouringState x, ColouringState y, int q);

void coupled_indset_step(const Hypergraph& h, IndSetPair& pair, double lambda, Rng& rng);
void coupled_colouring_step(const Hypergraph& h, ColouringPair& pair, int q, Rng& rng);

/// Worst-case-leaning adjacent pair for the independent-set chain: starting
/// from the empty set, greedily occupy the other vertices of every edge
/// through w subject to X and Y = X + w staying independent. That leaves one
/// free non-w vertex per edge through w, i.e. the edges start critical.
IndSetPair adversarial_indset_pair(const Hypergraph& h, int w);

enum class WPolicy { RandomMaxDegree, Adversarial, Fixed };

struct StoppingOptions {
    ChainParams params;
    WPolicy w_policy = WPolicy::RandomMaxDegree;
    int fixed_w = -1;    // used by WPolicy::Fixed
    long replicates = 0;
    long t_max = 0;      // 0 -> 40 * max_degree * n
    std::uint64_t seed = 0;
    int jobs = 1;
    bool keep_outcomes = true; // per-replicate rows for CSV emission
};

struct ReplicateOutcome {
    long t = 0;        // steps taken (stop step, or t_max when censored)
    int distance = 1;  // Hamming distance when the run ended
    bool censored = false;
};

struct StoppingStats {
    long replicates = 0;
    long coupled = 0;   // stopped with distance 0
    long diverged = 0;  // stopped with distance >= 2
    long censored = 0;  // hit t_max at distance 1 (excluded from alpha_hat)
    long total_steps = 0;
    int change_vertex = -1;
    double alpha_hat = 0.0; // mean stop distance over non-censored replicates
    double alpha_se = 0.0;
    double p_hat = 0.0;     // stops / total steps: conditional per-step stop frequency
    double p_se = 0.0;
    std::map<long, long> t_histogram;
    std::vector<ReplicateOutcome> outcomes; // replicate order, when kept
};

/// Runs the identity coupling from an adjacent pair (distance 1) until the
/// distance changes, once per replicate. The initial pair is built once from
/// the base seed; replicate r uses the stream seed ^ (r+1), so results do not
/// depend on the number of jobs.
StoppingStats stopping_experiment(const Hypergraph& h, const StoppingOptions& opt);

/// Exact one-step expected distance: enumerates all n*q proposals applied to
/// both copies. Kept as an integer total over n*q equiprobable proposals so
/// bound checks need no tolerance.
struct DriftExact {
    long long distance_sum = 0;
    long long proposals = 0;
    double value() const { return static_cast<double>(distance_sum) / static_cast<double>(proposals); }
};
DriftExact colouring_drift_exact(const Hypergraph& h, const ColouringState& x,
                                 const ColouringState& y, int q);

/// Exact one-step expected distance for the independent-set chain: n vertex
/// choices, each with an occupy branch (weight lambda/(1+lambda)) and a
/// vacate branch (weight 1/(1+lambda)).
double indset_drift_exact(const Hypergraph& h, const IndSetState& x,
                          const IndSetState& y, double lambda);

struct CoalescenceResult {
    bool coalesced = false;
    long t = 0; // first step with X == Y, or t_max when not coalesced
};
CoalescenceResult coalescence_time(const Hypergraph& h, const IndSetState& x0,
                                   const IndSetState& y0, double lambda, long t_max,
                                   std::uint64_t seed);
CoalescenceResult coalescence_time(const Hypergraph& h, const ColouringState& x0,
                                   const ColouringState& y0, int q, long t_max,
                                   std::uint64_t seed);

} // namespace hypermix
