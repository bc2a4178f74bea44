#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace snn {

/// Identifier written into run manifests so outputs are traceable to the
/// exact generator algorithm.
inline constexpr const char* kPrngAlgorithm = "xoshiro256++ / splitmix64-streams / box-muller";

/// Purpose-split streams: each consumer of randomness in a run derives its
/// own stream from the master seed, so adding draws in one place never
/// perturbs another.
enum class Stream : std::uint64_t {
    GroundTruth = 1,
    Ensemble = 2,
    Noise = 3,
    Init = 4,
    Orthogonal = 5,
    Misc = 6,
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace detail

/// xoshiro256++ (Blackman & Vigna), seeded through SplitMix64. Fully
/// specified arithmetic on uint64 -> bit-identical sequences on every
/// conforming platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = detail::splitmix64(sm);
    }

    /// Stream for a given purpose: sub-seed = (index(purpose))-th SplitMix64
    /// output of the master seed.
    static Rng stream(std::uint64_t master_seed, Stream purpose) {
        std::uint64_t sm = master_seed;
        std::uint64_t sub = 0;
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(purpose); ++i)
            sub = detail::splitmix64(sm);
        return Rng(sub);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on [0, 1): top 53 bits scaled by 2^-53.
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log argument.
    double uniform_open() { return double((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (no rejection, so the draw count per
    /// call is fixed and sequences stay aligned across implementations).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::vector<double> uniform_vec(int n) {
        std::vector<double> v(n);
        for (auto& x : v) x = uniform();
        return v;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace snn
