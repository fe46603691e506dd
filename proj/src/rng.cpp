#include "tdmono/rng.hpp"

namespace tdmono {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    // Hash (seed, stream_id) into a block of words and let seed_seq spread
    // them over the full mt19937_64 state.
    std::uint64_t state = seed;
    (void)splitmix64(state);
    state ^= 0xD1B54A32D192ED03ULL * (stream_id + 1);
    std::array<std::uint32_t, 16> words{};
    for (int i = 0; i < 8; ++i) {
        const std::uint64_t w = splitmix64(state);
        words[2 * i] = static_cast<std::uint32_t>(w);
        words[2 * i + 1] = static_cast<std::uint32_t>(w >> 32);
    }
    std::seed_seq seq(words.begin(), words.end());
    gen_.seed(seq);
}

}  // namespace tdmono
