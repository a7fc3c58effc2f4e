#pragma once

#include <cstdint>
#include <random>

namespace antalign {

/// SplitMix64 finalizer. Used to derive independent stream seeds from a
/// master seed so that parallel work produces the same bits as serial work.
constexpr std::uint64_t mix_seed(std::uint64_t value) noexcept {
    value += 0x9e3779b97f4a7c15ULL;
    value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
    value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
    return value ^ (value >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix_seed(seed ^ mix_seed(stream + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t substream) noexcept {
    return derive_seed(derive_seed(seed, stream), substream);
}

/// Seeded random source. The distributions are implemented here rather than
/// through <random> distribution objects so the produced sequence does not
/// depend on the standard library vendor.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [low, high).
    double uniform(double low, double high) {
        return low + (high - low) * uniform01();
    }

    /// Uniform integer on [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling removes modulo bias
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t draw = engine_();
        while (draw >= limit) {
            draw = engine_();
        }
        return draw % bound;
    }

    /// Independent generator for a numbered substream.
    Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

    // UniformRandomBitGenerator interface
    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace antalign
