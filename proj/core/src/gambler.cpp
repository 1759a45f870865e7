#include "hypermix/gambler.hpp"

#include <cmath>
#include <stdexcept>

#include "hypermix/rng.hpp"

namespace hypermix {

void GamblerParams::check() const {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("GamblerParams: p must be in (0, 1]");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("GamblerParams: alpha must be in [0, 1)");
    if (loss_l < 1) throw std::invalid_argument("GamblerParams: loss_l must be >= 1");
    if (loss_l > d2) throw std::invalid_argument("GamblerParams: loss_l must be <= d2");
    if (t_max < 1) throw std::invalid_argument("GamblerParams: t_max must be >= 1");
    if (replicates < 1) throw std::invalid_argument("GamblerParams: replicates must be >= 1");
}

GamblerResult gambler_game(const GamblerParams& gp, std::uint64_t seed) {
    gp.check();
    const double loss_prob = gp.alpha / static_cast<double>(gp.loss_l);

    std::vector<double> sum(static_cast<size_t>(gp.t_max) + 1, 0.0);
    std::vector<double> sumsq(static_cast<size_t>(gp.t_max) + 1, 0.0);

    for (long r = 0; r < gp.replicates; ++r) {
        Rng rng = Rng::for_replicate(seed, static_cast<std::uint64_t>(r) + 1);
        long active = 1;
        sum[0] += 1.0;
        sumsq[0] += 1.0;
        for (long t = 1; t <= gp.t_max; ++t) {
            long next = 0;
            for (long g = 0; g < active; ++g) {
                if (rng.next_unit() < gp.p) {
                    // completed: win spawns nothing, loss spawns loss_l games
                    if (rng.next_unit() < loss_prob) next += gp.loss_l;
                } else {
                    ++next;
                }
            }
            active = next;
            const double a = static_cast<double>(active);
            sum[static_cast<size_t>(t)] += a;
            sumsq[static_cast<size_t>(t)] += a * a;
            if (active == 0) break; // absorbed; later N(t) stay zero
        }
    }

    GamblerResult out;
    const double n = static_cast<double>(gp.replicates);
    out.mean_active.resize(sum.size());
    out.se_active.resize(sum.size());
    for (size_t t = 0; t < sum.size(); ++t) {
        const double mean = sum[t] / n;
        out.mean_active[t] = mean;
        if (gp.replicates > 1) {
            const double var = (sumsq[t] - n * mean * mean) / (n - 1.0);
            out.se_active[t] = std::sqrt(std::max(0.0, var) / n);
        }
    }
    return out;
}

} // namespace hypermix
