#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "pathloss/errors.hpp"

namespace pathloss {

// Deterministic random source. std::mt19937_64 is fully specified by the
// standard, and all variate transforms below are explicit formulas, so a
// given seed produces the same stream on every platform and compiler.
// The std::*_distribution adaptors are implementation-defined and must not
// be used anywhere reproducibility matters.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Independent stream `id` derived from a base seed (splitmix64 mix).
    static Rng stream(std::uint64_t seed, std::uint64_t id) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (id + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Uniform integer in [0, n). Multiplicative range reduction; the bias of
    // at most n/2^64 is irrelevant for sampling purposes here.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(eng_()) * n) >> 64);
    }

    // Standard normal via the trigonometric Box-Muller transform. No spare
    // value is cached so the draw sequence depends only on call order.
    double normal() {
        double u1 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mu, double sigma) { return mu + sigma * normal(); }

    // Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape < 1 boosted through
    // Gamma(shape + 1) * U^(1/shape).
    double gamma(double shape) {
        if (!(shape > 0.0)) throw DomainError("gamma shape must be > 0");
        if (shape < 1.0) {
            double u = uniform01();
            if (u <= 0.0) u = 0x1.0p-53;
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
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
            double u = uniform01();
            if (u <= 0.0) u = 0x1.0p-53;
            if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
                return d * v;
            }
        }
    }

    double chi_squared(double df) { return 2.0 * gamma(0.5 * df); }

    double student_t(double df) {
        return normal() / std::sqrt(chi_squared(df) / df);
    }

    double cauchy(double loc, double scale) {
        return loc + scale * std::tan(std::numbers::pi * (uniform01() - 0.5));
    }

    // Fisher-Yates with the explicit bounded draw above.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace pathloss
