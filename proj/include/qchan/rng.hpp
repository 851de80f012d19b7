#pragma once

#include <array>
#include <cstdint>
#include <random>

namespace qchan {

/// Deterministic random source. Doubles are built from raw mt19937_64
/// words so streams are reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    long binomial(long n, double p) {
        long k = 0;
        for (long i = 0; i < n; ++i) k += bernoulli(p);
        return k;
    }

    /// Uniform point on the unit sphere.
    std::array<double, 3> unit_vector() {
        const double z = 2.0 * uniform() - 1.0;
        const double phi = 2.0 * 3.14159265358979323846 * uniform();
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }

private:
    std::mt19937_64 gen_;
};

/// Stream-splitting: an independent child seed for work item `index`.
/// splitmix64 finalizer, so derived streams decorrelate even for small
/// consecutive indices.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t x = base + 0x9E3779B97F4A7C15ull * (index + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

}  // namespace qchan
