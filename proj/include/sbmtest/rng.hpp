#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sbmtest/errors.hpp"

namespace sbmtest {

/// Counter-derived deterministic RNG (xoshiro256++ core).
///
/// Every stream is identified by a 64-bit key. The root stream's key is the
/// master seed; `derive(r)` produces the key
///
///     child = splitmix64(splitmix64(key ^ (0x9E3779B97F4A7C15 * (r + 1))))
///
/// which depends only on (key, r), never on how many values have been drawn.
/// This is the reproducibility contract: replicate r of a run seeded with
/// master m always sees the stream keyed by derive-from-m-with-r, no matter
/// which thread runs it or in what order.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t master_seed) : key_(master_seed) {
        std::uint64_t s = splitmix64_next(key_);
        for (auto& word : state_) word = splitmix64_step(s);
    }

    /// Child stream keyed by (this stream's key, stream index). Pure.
    SeededRng derive(std::uint64_t stream) const {
        return SeededRng(splitmix64_next(
            splitmix64_next(key_ ^ (0x9E3779B97F4A7C15ULL * (stream + 1)))));
    }

    std::uint64_t key() const { return key_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + uniform() * (b - a); }

    bool bernoulli(double p) { return uniform() < p; }

    /// Integer in [0, bound) by rejection (unbiased).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw ParamError("SeededRng::below: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    /// Standard normal via Box-Muller (two uniforms per call, no caching).
    double normal() {
        double u1 = uniform();
        if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    /// Gamma(shape, 1) via Marsaglia-Tsang squeeze.
    double gamma(double shape) {
        if (!(shape > 0.0)) throw ParamError("SeededRng::gamma: shape must be positive");
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0) * std::pow(u > 0.0 ? u : 0x1.0p-53, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x;
            double v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// One Dirichlet(alpha * ones(k)) draw.
    std::vector<double> dirichlet(std::size_t k, double alpha) {
        if (k == 0) throw ParamError("SeededRng::dirichlet: k must be positive");
        if (!(alpha > 0.0)) throw ParamError("SeededRng::dirichlet: alpha must be positive");
        if (k == 1) return {1.0};
        std::vector<double> row(k);
        for (;;) {
            double sum = 0.0;
            for (auto& g : row) {
                g = gamma(alpha);
                sum += g;
            }
            if (sum > 0.0) {
                for (auto& g : row) g /= sum;
                return row;
            }
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static std::uint64_t splitmix64_step(std::uint64_t& s) {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t splitmix64_next(std::uint64_t s) { return splitmix64_step(s); }

    std::uint64_t key_;
    std::uint64_t state_[4];
};

}  // namespace sbmtest
