#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

namespace innosim {

// Deterministic random stream for one simulation run.
//
// Wraps std::mt19937_64, whose output sequence is fully specified by the
// standard, and derives every variate from raw 64-bit draws. No standard
// <random> distributions are used, so identical seeds yield bit-identical
// streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// True with probability p.
    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

    /// Uniform on (0, 1]; zero excluded.
    double uniform_unit_positive() { return 1.0 - next_double(); }

    /// Unbiased integer in [0, n). Rejection sampling over the top remainder.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) {
            throw std::invalid_argument("Rng::uniform_below: n must be positive");
        }
        const std::uint64_t reject_above = std::uint64_t{0} - n;  // 2^64 - n
        std::uint64_t x, r;
        do {
            x = engine_();
            r = x % n;
        } while (x - r > reject_above);
        return r;
    }

    /// Unordered pair of distinct indices in [0, n), uniform over all pairs.
    std::pair<std::size_t, std::size_t> uniform_pair(std::size_t n) {
        if (n < 2) {
            throw std::invalid_argument("Rng::uniform_pair: need at least two elements");
        }
        const auto i = static_cast<std::size_t>(uniform_below(n));
        auto j = static_cast<std::size_t>(uniform_below(n - 1));
        if (j >= i) ++j;
        return {i, j};
    }

    // Symmetric triangular distribution on [0, span]: density rises linearly
    // from 0 to its peak 2/span at span/2, then falls back to 0. Sampled by
    // inverting the CDF of one uniform draw.
    double triangular(double span) {
        if (!(span > 0.0)) {
            throw std::invalid_argument("Rng::triangular: span must be positive");
        }
        const double u = next_double();
        if (u < 0.5) {
            return span * std::sqrt(u * 0.5);
        }
        return span * (1.0 - std::sqrt((1.0 - u) * 0.5));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace innosim
