#ifndef DNANET_RANDOM_HPP
#define DNANET_RANDOM_HPP

#include <cstdint>
#include <random>

#include "dnanet/sequence.hpp"

namespace dnanet {

// splitmix64 finalizer. Used to derive independent stream seeds; the output
// is fully specified, so results are identical across platforms.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b) noexcept {
    return mix64(mix64(a) ^ b);
}

// Deterministic random stream. mt19937_64 with hand-rolled value extraction:
// the standard pins the engine's output exactly, and avoiding the standard
// distributions keeps draws bit-identical across library implementations.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
    RandomStream(std::uint64_t seed, std::uint64_t stream_id) : engine_(mix64(seed, stream_id)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n) via multiply-shift.
    std::uint64_t uniform_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    Base uniform_base() { return static_cast<Base>(uniform_below(4)); }

    // Uniform over the three bases different from `b`.
    Base uniform_base_except(Base b) {
        const auto r = uniform_below(3);
        const auto v = (base_value(b) + 1 + r) % 4;
        return static_cast<Base>(v);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace dnanet

#endif  // DNANET_RANDOM_HPP
