#ifndef DNANET_TESTS_HELPERS_HPP
#define DNANET_TESTS_HELPERS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dnanet/random.hpp"
#include "dnanet/sequence.hpp"

namespace dnanet::test {

inline Sequence S(std::string_view text) { return Sequence::from_string(text); }

inline Sequence random_sequence(RandomStream& rng, std::size_t length) {
    std::vector<Base> bases;
    bases.reserve(length);
    for (std::size_t i = 0; i < length; ++i) bases.push_back(rng.uniform_base());
    return Sequence(std::move(bases));
}

inline std::vector<std::uint8_t> random_bytes(RandomStream& rng, std::size_t length) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        bytes.push_back(static_cast<std::uint8_t>(rng.uniform_below(256)));
    }
    return bytes;
}

}  // namespace dnanet::test

#endif
