#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "semeq/errors.hpp"

namespace semeq {

// Deterministic random source. std::mt19937_64 is bit-exact per the C++
// standard; the distribution mappings below are hand-rolled so that streams
// are identical across standard library implementations as well.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Unbiased integer in [0, n), n > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw InvalidArgument("Rng::below: n must be positive");
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller; caches the second deviate.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    std::vector<double> gaussian_vec(std::size_t n) {
        std::vector<double> v(n);
        for (double& x : v) x = gaussian();
        return v;
    }

    // k distinct indices drawn uniformly from [0, n), partial Fisher-Yates.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        if (k > n) throw InvalidArgument("sample_without_replacement: k > n");
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

private:
    static constexpr double kPi = 3.14159265358979323846264338327950288;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace semeq
