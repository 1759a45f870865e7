#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermix/chains.hpp"
#include "hypermix/fraction.hpp"
#include "hypermix/hypergraph.hpp"

namespace hypermix {

// Brute-force counting oracles. All enumerations are exact and guarded by
// explicit limits (GuardError beyond them).

struct CountProfile {
    int n = 0;
    std::vector<std::uint64_t> by_size; // by_size[i] = number of independent sets of size i
    std::uint64_t total = 0;
};

/// Enumerates all 2^n subsets. Default guard n <= 25.
CountProfile count_independent_sets(const Hypergraph& h, int guard_n = 25);

/// Exact number of proper q-colourings by backtracking. Guard on q^n.
std::uint64_t count_colourings(const Hypergraph& h, int q, double guard_states = 1e8);

/// Hard-core partition function Z(lambda) = sum_i N_i lambda^i.
double hardcore_partition(const Hypergraph& h, double lambda, int guard_n = 25);
Fraction hardcore_partition_rational(const Hypergraph& h, const Fraction& lambda,
                                     int guard_n = 25);

/// Verifies N(blowup(G, m)) = (2^k - 1)^n Z_G(1/(2^k - 1)) with k = ceil(m/2),
/// both sides as exact integers (the right side via sum_i N_i (2^k-1)^{n-i}).
struct BlowupIdentity {
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool equal = false;
    int k = 0;
};
BlowupIdentity blowup_identity_check(const Hypergraph& graph, int m, int guard_n = 25);

enum class CountMode { Formula, Brute };

/// Edge covers of the complete graph K_m:
///   M_m = sum_{i=0..m} (-1)^i C(m,i) 2^{C(m-i,2)},
/// and the number of edge sets leaving one fixed vertex uncovered while
/// covering the rest, which equals M_{m-1}. Brute mode enumerates the
/// 2^{C(m,2)} edge subsets (guard C(m,2) <= 20).
struct EdgeCoverCounts {
    std::uint64_t covers = 0;
    std::uint64_t fixed_vertex_uncovered = 0;
};
EdgeCoverCounts edge_cover_count(int m, CountMode mode);

/// Weak edge q-colourings of K_m (no vertex has all incident edges one
/// colour):
///   M_m  = q^{C(m,2)} + q sum_{i=1..m} (-1)^i C(m,i) q^{C(m-i,2)},
///   M'_m = q sum_{i=0..m-1} (-1)^i C(m-1,i) q^{C(m-i-1,2)},
/// where M'_m counts colourings with one fixed vertex monochromatic and all
/// other vertices non-monochromatic. Brute mode enumerates q^{C(m,2)}
/// colourings (guard 1e8).
struct WeakColouringCounts {
    std::uint64_t no_mono = 0;    // M_m
    std::uint64_t fixed_mono = 0; // M'_m
};
WeakColouringCounts weak_edge_colouring_count(int m, int q, CountMode mode);

// ---------------------------------------------------------------------------
// Empirical vs exact stationary law
// ---------------------------------------------------------------------------

struct TVOptions {
    ChainParams params;
    long burn_in = 10000;
    long samples = 100000;
    long stride = 1;
    std::uint64_t seed = 0;
    double guard_states = 1e5;
};

struct TVReport {
    ChainKind kind = ChainKind::IndependentSet;
    long support = 0;                     // exact number of feasible states
    double tv = 0.0;                      // total variation distance
    long visited = 0;                     // states with nonzero empirical mass
    bool missing_support = false;         // visited < support: non-ergodicity evidence
    long burn_in = 0, samples = 0, stride = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> state_keys; // bitmask / base-q encoding per state
    std::vector<double> exact_law;
    std::vector<double> empirical;
};

/// Exact stationary law from enumeration (proportional to lambda^|I| for
/// independent sets, uniform over proper colourings) against strided samples
/// of the chain. Starts from `start` when given, else the empty set / a
/// greedy colouring (falling back to the first enumerated state).
TVReport stationary_tv(const Hypergraph& h, const TVOptions& opt,
                       const std::optional<IndSetState>& start_indset = std::nullopt,
                       const std::optional<ColouringState>& start_colouring = std::nullopt);

/// Formats a state key from a TVReport as a human-readable label.
std::string tv_state_label(ChainKind kind, std::uint64_t key, int n, int q);

} // namespace hypermix
