#pragma once

#include <cstdint>

namespace pinch {

/// Counter-free splitmix64 stream. Streams derived from the same master
/// seed but different stream ids are statistically independent, so work
/// items may be evaluated in any order (or in parallel) without changing
/// the numbers each item sees.
class Rng {
  public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random mantissa bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

  private:
    std::uint64_t state_;
};

/// Independent substream for (seed, stream_id); used one-per-drop so
/// Monte-Carlo results do not depend on evaluation order.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream_id) {
    std::uint64_t z = seed ^ (stream_id * 0xd1342543de82ef95ull + 0x632be59bd9b4e019ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return Rng(z ^ (z >> 31));
}

}  // namespace pinch
