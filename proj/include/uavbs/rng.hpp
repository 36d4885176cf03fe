#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace uavbs {

/* SplitMix64 finalizer; used to spread structured seeds (base + index)
 * into well-separated engine states and to derive sub-stream seeds. */
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/* Deterministic random source. std::mt19937_64 has a standard-specified
 * output sequence, so the raw stream is portable across platforms; the
 * distribution mappings below are hand-rolled because the std::*_distribution
 * classes are implementation-defined and would break cross-toolchain
 * reproducibility of seeded runs.  All samplers consume engine output in a
 * fixed, documented order. */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /* Uniform double in [0, 1): top 53 bits of one engine word. */
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /* Standard normal via Box-Muller (trigonometric form, no cached spare:
     * every call consumes exactly two engine words). */
    double normal() {
        const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    /* Poisson count via Knuth's product-of-uniforms method.  Splitting for
     * large means keeps exp(-mean) away from underflow; Poisson additivity
     * makes the split exact in distribution. */
    int poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean > 500.0) {
            const double half = mean / 2.0;
            return poisson(half) + poisson(mean - half);
        }
        const double limit = std::exp(-mean);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform01();
        } while (p > limit);
        return k - 1;
    }

    /* Uniform integer in [0, n); n must be positive.  Modulo bias is
     * negligible for the small n used here and keeps the draw order fixed. */
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

    /* Fisher-Yates shuffle driven by this source. */
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[index(i)]);
        }
    }

private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;
    std::mt19937_64 eng_;
};

}  // namespace uavbs
