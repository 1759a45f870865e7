#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace hypermix {

/// mt19937_64 with hand-rolled draws. The standard library's distribution
/// objects are implementation-defined, so reproducible byte-identical output
/// requires drawing from the raw engine ourselves.
///
/// Every chain step consumes randomness in a fixed order (vertex draw, then
/// coin or colour draw) so a coupled pair can replay one shared stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    int next_below(int n) {
        if (n <= 0) throw std::invalid_argument("Rng::next_below: n must be positive");
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return static_cast<int>(x % bound);
    }

    /// Stream for replicate `index` of an experiment with base seed `seed`.
    /// Indices are 1-based so the setup stream Rng(seed) is never reused.
    static Rng for_replicate(std::uint64_t seed, std::uint64_t index) {
        return Rng(seed ^ index);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hypermix
