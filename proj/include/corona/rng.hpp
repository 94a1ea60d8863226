#pragma once

#include <cstdint>

namespace corona {

/// One splitmix64 mixing step.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives an independent child seed from (seed, index). Used to split a
/// master seed into per-trial and per-theorem streams, so results do not
/// depend on execution order.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Deterministic generator over a splitmix64 stream. Self-contained so that
/// outputs are identical across compilers and platforms (std distributions
/// are implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Uniform integer in [0, n); requires n >= 1.
    int below(int n) {
        return static_cast<int>(
            (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
    }

    /// Uniform integer in [lo, hi] inclusive.
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }

    /// True with probability p.
    bool chance(double p) { return (next() >> 11) * 0x1.0p-53 < p; }

  private:
    std::uint64_t state_;
};

}  // namespace corona
