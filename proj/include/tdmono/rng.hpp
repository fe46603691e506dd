#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace tdmono {

/// Seedable pseudo-random stream. A stream is identified by the pair
/// (seed, stream_id); the underlying mt19937_64 state is derived from a
/// splitmix64 hash of that pair, so distinct stream_ids under one seed give
/// statistically independent sequences while the same pair always replays the
/// identical sequence. Streams are single-owner: never draw from one stream
/// concurrently.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_u64() { return gen_(); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 gen_;
};

/// Two independent standard normal deviates via Box-Muller. Implemented on
/// top of uniform() rather than std::normal_distribution so the byte stream
/// is identical across standard libraries.
template <class Rng>
std::array<double, 2> gaussian_pair(Rng& rng) {
    const double u1 = 1.0 - rng.uniform();  // (0, 1], keeps the log finite
    const double u2 = rng.uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace tdmono
