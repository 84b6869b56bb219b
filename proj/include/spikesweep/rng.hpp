#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace spikesweep {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Order-sensitive combination of words: h = mix64(h ^ w) folded left from 0.
constexpr std::uint64_t hash64(std::initializer_list<std::uint64_t> words)
{
    std::uint64_t h = 0;
    for (auto w : words) h = mix64(h ^ w);
    return h;
}

inline std::uint64_t bits_of(double v) { return std::bit_cast<std::uint64_t>(v); }

} // namespace spikesweep
