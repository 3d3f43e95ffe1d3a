#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace kout {

/// 64-bit SplitMix finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// 64-bit FNV-1a hash of a byte string.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Seed material for one random stream.
///
/// The derived 64-bit seed is a pure function of the triple and is frozen
/// across versions, because reproducibility tests pin seeds:
///
///     s = splitmix64(master_seed)
///     s = splitmix64(s ^ fnv1a64(stream_label))
///     s = splitmix64(s ^ index)
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::string stream_label;
    std::uint64_t index = 0;

    std::uint64_t derive() const noexcept;

    /// A sub-stream keyed by this stream's derived seed.
    SeedSpec child(std::string label, std::uint64_t child_index = 0) const {
        return SeedSpec{derive(), std::move(label), child_index};
    }

    bool operator==(const SeedSpec&) const = default;
};

/// Random source used by every sampler.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are implementation-defined, so the
/// bounded-integer and unit-interval draws are done here instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    explicit Rng(const SeedSpec& seed) : engine_(seed.derive()) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return unit() < p;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace kout
