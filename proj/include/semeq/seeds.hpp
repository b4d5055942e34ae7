#pragma once

#include <cstdint>
#include <string_view>

namespace semeq {

// Stable 64-bit FNV-1a string hash.
constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

// splitmix64 finalizer; decorrelates numerically close seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Seed for one named stage of a run. The stage strings are part of the CLI
// contract (documented in the README); a whole experiment is reproducible
// from the single run seed.
constexpr std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view stage) {
    return mix64(run_seed ^ fnv1a64(stage));
}

}  // namespace semeq
