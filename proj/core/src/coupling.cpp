#include "hypermix/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace hypermix {

namespace {

long default_t_max(const Hypergraph& h) {
    // 40 * Delta horizon scaled by the n vertex choices per relevant step
    const long delta = std::max(1, h.max_degree());
    const long n = std::max(1, h.vertex_count());
    return 40L * delta * n;
}

int pick_max_degree_vertex(const Hypergraph& h, Rng& rng) {
    const int dmax = h.max_degree();
    std::vector<int> candidates;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == dmax) candidates.push_back(v);
    if (candidates.empty()) throw std::invalid_argument("stopping_experiment: empty hypergraph");
    return candidates[static_cast<size_t>(rng.next_below(static_cast<int>(candidates.size())))];
}

} // namespace

IndSetPair make_indset_pair(const Hypergraph& h, IndSetState x, IndSetState y) {
    if (x.size() != static_cast<size_t>(h.vertex_count()) || y.size() != x.size())
        throw std::invalid_argument("make_indset_pair: state size mismatch");
    if (!is_independent(h, x) || !is_independent(h, y))
        throw std::invalid_argument("make_indset_pair: states must be independent");
    IndSetPair p{std::move(x), std::move(y), 0, 0};
    p.hamming = hamming(p.x, p.y);
    return p;
}

ColouringPair make_colouring_pair(const Hypergraph& h, ColouringState x, ColouringState y, int q) {
    if (x.size() != static_cast<size_t>(h.vertex_count()) || y.size() != x.size())
        throw std::invalid_argument("make_colouring_pair: state size mismatch");
    if (!is_proper(h, x, q) || !is_proper(h, y, q))
        throw std::invalid_argument("make_colouring_pair: states must be proper");
    ColouringPair p{std::move(x), std::move(y), 0, 0};
    p.hamming = hamming(p.x, p.y);
    return p;
}

void coupled_indset_step(const Hypergraph& h, IndSetPair& pair, double lambda, Rng& rng) {
    const IndSetMove mv = draw_indset_move(h.vertex_count(), lambda, rng);
    const size_t v = static_cast<size_t>(mv.vertex);
    const bool differed = pair.x.test(v) != pair.y.test(v);
    apply_indset_move(h, pair.x, mv);
    apply_indset_move(h, pair.y, mv);
    const bool differs = pair.x.test(v) != pair.y.test(v);
    pair.hamming += static_cast<long>(differs) - static_cast<long>(differed);
    ++pair.steps;
}

void coupled_colouring_step(const Hypergraph& h, ColouringPair& pair, int q, Rng& rng) {
    const ColouringMove mv = draw_colouring_move(h.vertex_count(), q, rng);
    const size_t v = static_cast<size_t>(mv.vertex);
    const bool differed = pair.x[v] != pair.y[v];
    apply_colouring_move(h, pair.x, mv);
    apply_colouring_move(h, pair.y, mv);
    const bool differs = pair.x[v] != pair.y[v];
    pair.hamming += static_cast<long>(differs) - static_cast<long>(differed);
    ++pair.steps;
}

IndSetPair adversarial_indset_pair(const Hypergraph& h, int w) {
    if (w < 0 || w >= h.vertex_count())
        throw std::invalid_argument("adversarial_indset_pair: w out of range");
    IndSetState x = empty_indset(h.vertex_count());
    IndSetState y = x;
    y.set(static_cast<size_t>(w));
    for (int ei : h.edges_at(w)) {
        for (int u : h.edge(ei)) {
            if (u == w || x.test(static_cast<size_t>(u))) continue;
            if (insertion_blocked(h, x, u) || insertion_blocked(h, y, u)) continue;
            x.set(static_cast<size_t>(u));
            y.set(static_cast<size_t>(u));
        }
    }
    IndSetPair p{std::move(x), std::move(y), 1, 0};
    return p;
}

namespace {

template <typename Pair, typename StepFn>
std::vector<ReplicateOutcome> run_replicates(const Pair& initial, long replicates, long t_max,
                                             std::uint64_t seed, int jobs, StepFn step) {
    std::vector<ReplicateOutcome> out(static_cast<size_t>(replicates));
    auto worker = [&](long begin, long end) {
        for (long r = begin; r < end; ++r) {
            Rng rng = Rng::for_replicate(seed, static_cast<std::uint64_t>(r) + 1);
            Pair pair = initial;
            while (pair.hamming == 1 && pair.steps < t_max) step(pair, rng);
            out[static_cast<size_t>(r)] =
                ReplicateOutcome{pair.steps, static_cast<int>(pair.hamming), pair.hamming == 1};
        }
    };
    if (jobs <= 1) {
        worker(0, replicates);
    } else {
        const long chunk = (replicates + jobs - 1) / jobs;
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) {
            const long begin = j * chunk;
            const long end = std::min(replicates, begin + chunk);
            if (begin >= end) break;
            threads.emplace_back(worker, begin, end);
        }
        for (auto& t : threads) t.join();
    }
    return out;
}

StoppingStats aggregate(std::vector<ReplicateOutcome> outcomes, int change_vertex,
                        bool keep_outcomes) {
    StoppingStats s;
    s.replicates = static_cast<long>(outcomes.size());
    s.change_vertex = change_vertex;

    double dist_sum = 0.0, dist_sq = 0.0;
    for (const auto& o : outcomes) {
        s.total_steps += o.t;
        if (o.censored) {
            ++s.censored;
            continue;
        }
        if (o.distance == 0)
            ++s.coupled;
        else
            ++s.diverged;
        dist_sum += o.distance;
        dist_sq += static_cast<double>(o.distance) * o.distance;
        ++s.t_histogram[o.t];
    }
    const long stopped = s.coupled + s.diverged;
    if (stopped > 0) {
        s.alpha_hat = dist_sum / static_cast<double>(stopped);
        if (stopped > 1) {
            const double var =
                (dist_sq - static_cast<double>(stopped) * s.alpha_hat * s.alpha_hat) /
                static_cast<double>(stopped - 1);
            s.alpha_se = std::sqrt(std::max(0.0, var) / static_cast<double>(stopped));
        }
    }
    if (s.total_steps > 0) {
        s.p_hat = static_cast<double>(stopped) / static_cast<double>(s.total_steps);
        s.p_se = std::sqrt(s.p_hat * (1.0 - s.p_hat) / static_cast<double>(s.total_steps));
    }
    if (keep_outcomes) s.outcomes = std::move(outcomes);
    return s;
}

} // namespace

StoppingStats stopping_experiment(const Hypergraph& h, const StoppingOptions& opt) {
    opt.params.check();
    if (opt.replicates < 1)
        throw std::invalid_argument("stopping_experiment: replicates must be >= 1");
    if (h.edge_count() == 0 && opt.params.kind == ChainKind::Colouring)
        throw std::invalid_argument("stopping_experiment: hypergraph has no edges");

    const long t_max = opt.t_max > 0 ? opt.t_max : default_t_max(h);
    Rng setup(opt.seed);

    int w = -1;
    if (opt.w_policy == WPolicy::Fixed) {
        if (opt.fixed_w < 0 || opt.fixed_w >= h.vertex_count())
            throw std::invalid_argument("stopping_experiment: fixed w out of range");
        w = opt.fixed_w;
    } else {
        w = pick_max_degree_vertex(h, setup);
    }

    if (opt.params.kind == ChainKind::IndependentSet) {
        IndSetPair initial;
        if (opt.w_policy == WPolicy::Adversarial) {
            initial = adversarial_indset_pair(h, w);
        } else {
            IndSetState x = empty_indset(h.vertex_count());
            IndSetState y = x;
            y.set(static_cast<size_t>(w));
            initial = IndSetPair{std::move(x), std::move(y), 1, 0};
        }
        auto outcomes = run_replicates(
            initial, opt.replicates, t_max, opt.seed, opt.jobs,
            [&](IndSetPair& pair, Rng& rng) { coupled_indset_step(h, pair, opt.params.lambda, rng); });
        return aggregate(std::move(outcomes), w, opt.keep_outcomes);
    }

    // colouring kind: greedy base colouring, then recolour w to a legal colour
    const int q = opt.params.q;
    auto base = greedy_proper_colouring(h, q);
    if (!base)
        throw std::invalid_argument("stopping_experiment: no proper colouring found greedily");

    auto legal_recolours = [&](int v) {
        std::vector<int> cols;
        ColouringState scratch = *base;
        for (int col = 1; col <= q; ++col) {
            if (apply_colouring_move(h, scratch, ColouringMove{v, col})) {
                cols.push_back(col);
                scratch[static_cast<size_t>(v)] = (*base)[static_cast<size_t>(v)];
            }
        }
        return cols;
    };

    std::vector<int> cols = legal_recolours(w);
    if (cols.empty() && opt.w_policy != WPolicy::Fixed) {
        for (int v = 0; v < h.vertex_count() && cols.empty(); ++v) {
            cols = legal_recolours(v);
            if (!cols.empty()) w = v;
        }
    }
    if (cols.empty())
        throw std::invalid_argument("stopping_experiment: no feasible adjacent pair found");

    ColouringState y = *base;
    y[static_cast<size_t>(w)] = cols[static_cast<size_t>(setup.next_below(static_cast<int>(cols.size())))];
    ColouringPair initial{*base, std::move(y), 1, 0};

    auto outcomes = run_replicates(
        initial, opt.replicates, t_max, opt.seed, opt.jobs,
        [&](ColouringPair& pair, Rng& rng) { coupled_colouring_step(h, pair, q, rng); });
    return aggregate(std::move(outcomes), w, opt.keep_outcomes);
}

DriftExact colouring_drift_exact(const Hypergraph& h, const ColouringState& x,
                                 const ColouringState& y, int q) {
    if (!is_proper(h, x, q) || !is_proper(h, y, q))
        throw std::invalid_argument("colouring_drift_exact: states must be proper");
    const int n = h.vertex_count();
    DriftExact out;
    out.proposals = static_cast<long long>(n) * q;
    for (int v = 0; v < n; ++v) {
        for (int col = 1; col <= q; ++col) {
            ColouringState xs = x;
            ColouringState ys = y;
            apply_colouring_move(h, xs, ColouringMove{v, col});
            apply_colouring_move(h, ys, ColouringMove{v, col});
            out.distance_sum += hamming(xs, ys);
        }
    }
    return out;
}

double indset_drift_exact(const Hypergraph& h, const IndSetState& x,
                          const IndSetState& y, double lambda) {
    if (!is_independent(h, x) || !is_independent(h, y))
        throw std::invalid_argument("indset_drift_exact: states must be independent");
    const int n = h.vertex_count();
    const double p_occupy = lambda / (1.0 + lambda);
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
        for (bool occupy : {true, false}) {
            IndSetState xs = x;
            IndSetState ys = y;
            apply_indset_move(h, xs, IndSetMove{v, occupy});
            apply_indset_move(h, ys, IndSetMove{v, occupy});
            total += (occupy ? p_occupy : 1.0 - p_occupy) * static_cast<double>(hamming(xs, ys));
        }
    }
    return total / static_cast<double>(n);
}

CoalescenceResult coalescence_time(const Hypergraph& h, const IndSetState& x0,
                                   const IndSetState& y0, double lambda, long t_max,
                                   std::uint64_t seed) {
    IndSetPair pair = make_indset_pair(h, x0, y0);
    Rng rng(seed);
    while (pair.hamming != 0 && pair.steps < t_max)
        coupled_indset_step(h, pair, lambda, rng);
    return CoalescenceResult{pair.hamming == 0, pair.steps};
}

CoalescenceResult coalescence_time(const Hypergraph& h, const ColouringState& x0,
                                   const ColouringState& y0, int q, long t_max,
                                   std::uint64_t seed) {
    ColouringPair pair = make_colouring_pair(h, x0, y0, q);
    Rng rng(seed);
    while (pair.hamming != 0 && pair.steps < t_max)
        coupled_colouring_step(h, pair, q, rng);
    return CoalescenceResult{pair.hamming == 0, pair.steps};
}

} // namespace hypermix
