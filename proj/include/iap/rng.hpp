#ifndef IAP_RNG_HPP
#define IAP_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace iap {

// All randomness flows from one master seed through named substreams
// (grouping, slic, forest, synth) so pipeline runs are reproducible.
std::uint64_t substream_seed(std::uint64_t master, std::string_view name);

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic PRNG wrapper. The uniform/normal draws are built from raw
/// 64-bit outputs rather than <random> distributions, whose sequences are
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound);

    /// Standard normal via Box-Muller.
    double next_normal();

private:
    std::mt19937_64 engine_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace iap

#endif
