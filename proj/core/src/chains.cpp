#include "hypermix/chains.hpp"

#include <stdexcept>

namespace hypermix {

void ChainParams::check() const {
    if (kind == ChainKind::IndependentSet) {
        if (!(lambda > 0.0)) throw std::invalid_argument("ChainParams: lambda must be > 0");
    } else {
        if (q < 2) throw std::invalid_argument("ChainParams: q must be >= 2");
    }
}

IndSetState empty_indset(int n) { return IndSetState(static_cast<size_t>(n)); }

bool is_independent(const Hypergraph& h, const IndSetState& s) {
    for (const auto& e : h.edges()) {
        bool contained = true;
        for (int v : e) {
            if (!s.test(static_cast<size_t>(v))) { contained = false; break; }
        }
        if (contained) return false;
    }
    return true;
}

bool is_proper(const Hypergraph& h, const ColouringState& c, int q) {
    for (int col : c)
        if (col < 1 || col > q) return false;
    for (const auto& e : h.edges()) {
        if (e.empty()) continue;
        bool mono = true;
        const int first = c[static_cast<size_t>(e[0])];
        for (int v : e) {
            if (c[static_cast<size_t>(v)] != first) { mono = false; break; }
        }
        if (mono) return false;
    }
    return true;
}

bool insertion_blocked(const Hypergraph& h, const IndSetState& s, int v) {
    for (int ei : h.edges_at(v)) {
        bool rest_occupied = true;
        for (int u : h.edge(ei)) {
            if (u != v && !s.test(static_cast<size_t>(u))) { rest_occupied = false; break; }
        }
        if (rest_occupied) return true;
    }
    return false;
}

IndSetMove draw_indset_move(int n, double lambda, Rng& rng) {
    const int v = rng.next_below(n);
    const bool occupy = rng.next_unit() < lambda / (1.0 + lambda);
    return IndSetMove{v, occupy};
}

ColouringMove draw_colouring_move(int n, int q, Rng& rng) {
    const int v = rng.next_below(n);
    const int colour = 1 + rng.next_below(q);
    return ColouringMove{v, colour};
}

bool apply_indset_move(const Hypergraph& h, IndSetState& s, const IndSetMove& mv) {
    const size_t v = static_cast<size_t>(mv.vertex);
    if (mv.occupy) {
        if (s.test(v)) return false;
        if (insertion_blocked(h, s, mv.vertex)) return false;
        s.set(v);
        return true;
    }
    if (!s.test(v)) return false;
    s.reset(v);
    return true;
}

bool apply_colouring_move(const Hypergraph& h, ColouringState& c, const ColouringMove& mv) {
    const size_t v = static_cast<size_t>(mv.vertex);
    const int old = c[v];
    if (old == mv.colour) return false;
    c[v] = mv.colour;
    for (int ei : h.edges_at(mv.vertex)) {
        bool mono = true;
        for (int u : h.edge(ei)) {
            if (c[static_cast<size_t>(u)] != mv.colour) { mono = false; break; }
        }
        if (mono) {
            c[v] = old;
            return false;
        }
    }
    return true;
}

bool indset_step(const Hypergraph& h, IndSetState& s, double lambda, Rng& rng) {
    return apply_indset_move(h, s, draw_indset_move(h.vertex_count(), lambda, rng));
}

bool colouring_step(const Hypergraph& h, ColouringState& c, int q, Rng& rng) {
    return apply_colouring_move(h, c, draw_colouring_move(h.vertex_count(), q, rng));
}

long hamming(const IndSetState& a, const IndSetState& b) {
    return static_cast<long>((a ^ b).count());
}

long hamming(const ColouringState& a, const ColouringState& b) {
    long d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

IndSetTrajectory run_indset_chain(const Hypergraph& h, IndSetState x0, double lambda,
                                  long t_max, std::uint64_t seed, long sample_stride) {
    if (x0.size() != static_cast<size_t>(h.vertex_count()))
        throw std::invalid_argument("run_indset_chain: state size mismatch");
    if (!is_independent(h, x0))
        throw std::invalid_argument("run_indset_chain: initial state is not independent");
    if (!(lambda > 0.0)) throw std::invalid_argument("run_indset_chain: lambda must be > 0");

    Rng rng(seed);
    IndSetTrajectory out;
    for (long t = 1; t <= t_max; ++t) {
        if (indset_step(h, x0, lambda, rng)) ++out.accepted;
        if (sample_stride > 0 && t % sample_stride == 0) out.samples.push_back(x0);
    }
    out.final_state = std::move(x0);
    return out;
}

ColouringTrajectory run_colouring_chain(const Hypergraph& h, ColouringState x0, int q,
                                        long t_max, std::uint64_t seed, long sample_stride) {
    if (x0.size() != static_cast<size_t>(h.vertex_count()))
        throw std::invalid_argument("run_colouring_chain: state size mismatch");
    if (!is_proper(h, x0, q))
        throw std::invalid_argument("run_colouring_chain: initial colouring is not proper");

    Rng rng(seed);
    ColouringTrajectory out;
    for (long t = 1; t <= t_max; ++t) {
        if (colouring_step(h, x0, q, rng)) ++out.accepted;
        if (sample_stride > 0 && t % sample_stride == 0) out.samples.push_back(x0);
    }
    out.final_state = std::move(x0);
    return out;
}

int frozen_check(const Hypergraph& h, const ColouringState& c, int q) {
    if (!is_proper(h, c, q))
        throw std::invalid_argument("frozen_check: colouring is not proper");
    int accepted = 0;
    ColouringState scratch = c;
    for (int v = 0; v < h.vertex_count(); ++v) {
        for (int col = 1; col <= q; ++col) {
            if (apply_colouring_move(h, scratch, ColouringMove{v, col})) {
                ++accepted;
                scratch[static_cast<size_t>(v)] = c[static_cast<size_t>(v)]; // undo
            }
        }
    }
    return accepted;
}

std::optional<ColouringState> greedy_proper_colouring(const Hypergraph& h, int q) {
    if (q < 1) return std::nullopt;
    const int n = h.vertex_count();
    ColouringState c(static_cast<size_t>(n), 0); // 0 = unassigned
    for (int v = 0; v < n; ++v) {
        bool placed = false;
        for (int col = 1; col <= q && !placed; ++col) {
            // forbidden iff some edge through v would become fully coloured col
            bool bad = false;
            for (int ei : h.edges_at(v)) {
                bool would_be_mono = true;
                for (int u : h.edge(ei)) {
                    if (u == v) continue;
                    if (c[static_cast<size_t>(u)] != col) { would_be_mono = false; break; }
                }
                if (would_be_mono) { bad = true; break; }
            }
            if (!bad) {
                c[static_cast<size_t>(v)] = col;
                placed = true;
            }
        }
        if (!placed) return std::nullopt;
    }
    return c;
}

} // namespace hypermix
