#ifndef HOTELCAST_RNG_HPP
#define HOTELCAST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace hotelcast {

/**
 * Seedable generator with explicitly defined output mappings, so that
 * streams are reproducible independent of the standard library's
 * distribution implementations.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n), n >= 1.
    std::size_t index(std::size_t n) {
        // modulo bias is negligible for the small n used here
        return static_cast<std::size_t>(engine_() % n);
    }

    /// Standard normal via Box-Muller (polar rejection avoided to keep
    /// the draw count per call fixed at exactly two engine outputs).
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hotelcast

#endif // HOTELCAST_RNG_HPP
