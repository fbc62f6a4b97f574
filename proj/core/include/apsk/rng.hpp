#ifndef APSK_RNG_HPP
#define APSK_RNG_HPP

#include <cstdint>
#include <utility>

#include "apsk/math.hpp"

namespace apsk {

// splitmix64 finalizer (Stafford mix13): full-avalanche 64-bit hash step.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-derived random stream: stream(master_seed, trial_index) is an
// O(1) construction, so trials can be generated in any order, by any
// worker, and still produce bit-identical draws.
//
// Internals (recorded in output metadata as "splitmix64-boxmuller-v1"):
//   state0 = mix64(seed + GOLDEN) ^ mix64(trial ^ 0x6a09e667f3bcc909)
//   next   = mix64(state += GOLDEN)            (plain splitmix64 step)
//   u01    = (next >> 11) * 2^-53              in [0, 1)
//   normal pairs by the trigonometric Box-Muller transform.
class RandomStream {
  public:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    RandomStream(std::uint64_t master_seed, std::uint64_t trial_index)
        : state_(mix64(master_seed + kGolden) ^
                 mix64(trial_index ^ 0x6a09e667f3bcc909ULL)) {}

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix64(state_);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi). Consumes one variate even when lo == hi.
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_uniform01();
    }

    // Unbiased-enough integer in [0, n) via 128-bit multiply-shift.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Two independent standard normals (Box-Muller). The radial uniform is
    // shifted into (0, 1] so log never sees zero.
    std::pair<double, double> next_normal_pair() {
        double u1 = 1.0 - next_uniform01();
        double u2 = next_uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
    }

    // Circularly-symmetric complex normal, unit variance (1/2 per part).
    Complex next_cn01() {
        auto [a, b] = next_normal_pair();
        constexpr double half_sqrt = 0.70710678118654752440; // sqrt(1/2)
        return {a * half_sqrt, b * half_sqrt};
    }

  private:
    std::uint64_t state_;
};

// Identifier written into output metadata so results can be matched to
// the generating algorithm.
inline const char* generator_id() { return "splitmix64-boxmuller-v1"; }

} // namespace apsk

#endif
