#pragma once

#include <cmath>
#include <cstdint>

namespace chatmine {

// Deterministic splitmix64 generator. Every sampling decision in the toolkit
// goes through this class rather than <random>, so corpora, folds and models
// reproduce byte-identically for a fixed seed regardless of the standard
// library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Derives an independent stream id from (seed, stream). Used to give each
    // session / tree / fold its own generator so parallel and sequential
    // execution produce identical output.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased integer in [0, n); n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = -n % n; // 2^64 mod n
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Standard normal via Box-Muller; consumes exactly two uniforms per call.
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        // avoid log(0)
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

    // Failures before the first success, success probability p in (0, 1].
    std::uint64_t geometric(double p) {
        if (p >= 1.0) return 0;
        double u = uniform01();
        return static_cast<std::uint64_t>(std::floor(std::log1p(-u) / std::log1p(-p)));
    }

    // Failures before the r-th success (negative binomial, integer r >= 1).
    std::uint64_t negative_binomial(int r, double p) {
        std::uint64_t total = 0;
        for (int i = 0; i < r; ++i) total += geometric(p);
        return total;
    }

private:
    std::uint64_t state_;
};

} // namespace chatmine
