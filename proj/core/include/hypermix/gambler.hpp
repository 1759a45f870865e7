#pragma once

#include <cstdint>
#include <vector>

namespace hypermix {

/// Branching process behind the stopping-time mixing bound. Each active game
/// completes in a step with probability p; a completed game wins (spawning
/// nothing) or loses and spawns loss_l follow-up games. The win probability
/// is 1 - alpha/loss_l, the two-point law with expected spawn count exactly
/// alpha -- the extremal case for the tail bound.
struct GamblerParams {
    double p = 0.5;      // per-step completion probability, (0, 1]
    double alpha = 0.5;  // expected spawn count per completed game, [0, 1)
    int loss_l = 2;      // games spawned by a loss
    int d2 = 2;          // maximum distance jump; loss_l <= d2
    long t_max = 0;
    long replicates = 0;

    void check() const;
};

struct GamblerResult {
    std::vector<double> mean_active; // index t = 0..t_max, E[N(t)] estimate
    std::vector<double> se_active;   // standard error of each mean
};

GamblerResult gambler_game(const GamblerParams& gp, std::uint64_t seed);

} // namespace hypermix
