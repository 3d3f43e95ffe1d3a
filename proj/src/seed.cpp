#include "kout/seed.hpp"

namespace kout {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t SeedSpec::derive() const noexcept {
    std::uint64_t s = splitmix64(master_seed);
    s = splitmix64(s ^ fnv1a64(stream_label));
    return splitmix64(s ^ index);
}

// Rejects the top partial block of 2^64 so every residue is equally likely.
std::uint64_t Rng::below(std::uint64_t bound) {
    const std::uint64_t reject_from = -bound - (-bound % bound);  // 2^64 - (2^64 mod bound)
    std::uint64_t x = next();
    if (reject_from != 0) {
        while (x >= reject_from) x = next();
    }
    return x % bound;
}

} // namespace kout
