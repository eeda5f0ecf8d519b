#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace kwsmote {

/// Deterministic random source. All mappings from raw engine output to
/// doubles and bounded integers are implemented here, so a given seed
/// reproduces the exact same draw sequence on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double on [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer on [0, n), n > 0. Rejection sampling.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) {
            throw std::invalid_argument("Rng::uniform_index: n must be positive");
        }
        const std::uint64_t bound = n;
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r < limit) {
                return static_cast<std::size_t>(r % bound);
            }
        }
    }

    /// Standard normal draw (Marsaglia polar, spare value discarded).
    double normal() {
        for (;;) {
            const double u = 2.0 * uniform() - 1.0;
            const double v = 2.0 * uniform() - 1.0;
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) {
                return u * std::sqrt(-2.0 * std::log(s) / s);
            }
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent stream seed from a master seed and a stream tag
/// (splitmix64 finalizer). Used to decouple e.g. the split stream from the
/// sampler stream under one user-facing seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace kwsmote
