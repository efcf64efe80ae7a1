#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace papi {

// Counter-based splittable generator. Every output is a hash of
// (stream key, counter), so child streams obtained via split() are
// statistically independent of the parent and of each other regardless
// of draw order. This is the sole randomness source in the library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(mix64(seed ^ 0x7f4a7c15f39cc060ULL)) {}

    Rng split(std::uint64_t stream) const {
        Rng child(FromKey{}, mix64(key_ ^ mix64(stream + 0x9e3779b97f4a7c15ULL)));
        return child;
    }

    Rng split(std::string_view label) const { return split(fnv1a(label)); }

    std::uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ULL;
        return mix64(key_ ^ counter_);
    }

    // [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // (0, 1]
    double next_open_double() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double normal() {
        const double u1 = next_open_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // Marsaglia-Tsang squeeze method.
    double gamma(double shape) {
        if (!(shape > 0.0)) {
            fail(ErrorCode::invalid_argument, "gamma: shape must be positive");
        }
        if (shape < 1.0) {
            const double u = next_open_double();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / (3.0 * std::sqrt(d));
        for (;;) {
            double x = 0.0;
            double v = 0.0;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = next_open_double();
            if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
                return d * v;
            }
        }
    }

    double beta(double a, double b) {
        const double x = gamma(a);
        const double y = gamma(b);
        const double s = x + y;
        if (s <= 0.0) {
            return 0.5;
        }
        return x / s;
    }

    std::size_t uniform_index(std::size_t n) {
        if (n == 0) {
            fail(ErrorCode::invalid_argument, "uniform_index: n must be positive");
        }
        const std::uint64_t span = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x = next_u64();
        while (x >= limit) {
            x = next_u64();
        }
        return static_cast<std::size_t>(x % span);
    }

    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) {
            perm[i] = i;
        }
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = uniform_index(i);
            std::swap(perm[i - 1], perm[j]);
        }
        return perm;
    }

    std::uint64_t derive_seed(std::string_view label) const {
        Rng child = split(label);
        return child.next_u64();
    }

private:
    struct FromKey {};
    Rng(FromKey, std::uint64_t key) : key_(key) {}

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (const char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace papi
