#ifndef WEIER_RANDOM_HPP
#define WEIER_RANDOM_HPP

#include <cstdint>

namespace weier
{

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based uniform draw in [0, 1): the value depends only on
/// (seed, stream, counter), so draws can be taken in any order or in parallel.
constexpr double counter_uniform(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t counter) noexcept
{
    const std::uint64_t h = mix64(mix64(mix64(seed) ^ stream) ^ counter);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

} // namespace weier

#endif
