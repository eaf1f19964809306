#ifndef DNANET_SEQUENCE_HPP
#define DNANET_SEQUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnanet/errors.hpp"

namespace dnanet {

// One DNA base, two bits of information. Numeric values are chosen so that
// lexicographic nucleotide order equals numeric order.
enum class Base : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

constexpr std::uint8_t base_value(Base b) noexcept { return static_cast<std::uint8_t>(b); }

// A<->T, C<->G; an involution.
constexpr Base complement(Base b) noexcept { return static_cast<Base>(3u - base_value(b)); }

constexpr char to_char(Base b) noexcept { return "ACGT"[base_value(b)]; }

// Accepts uppercase ACGT only; throws ParseError otherwise.
Base base_from_char(char c);

// An ordered run of nucleotides; the universal data carrier for every layer
// and every block.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<Base> bases) : bases_(std::move(bases)) {}

    // Parses uppercase ACGT; ParseError names the offending offset.
    static Sequence from_string(std::string_view text);

    std::string str() const;

    std::size_t size() const noexcept { return bases_.size(); }
    bool empty() const noexcept { return bases_.empty(); }

    Base operator[](std::size_t i) const { return bases_[i]; }
    Base& operator[](std::size_t i) { return bases_[i]; }

    auto begin() const noexcept { return bases_.begin(); }
    auto end() const noexcept { return bases_.end(); }

    void push_back(Base b) { bases_.push_back(b); }
    void append(const Sequence& other);
    void reserve(std::size_t n) { bases_.reserve(n); }

    // Copy of [pos, pos+count); clamps to the end.
    Sequence subseq(std::size_t pos, std::size_t count) const;

    const std::vector<Base>& bases() const noexcept { return bases_; }

    bool operator==(const Sequence&) const = default;

private:
    std::vector<Base> bases_;
};

// Joining of strands; plain concatenation, associative, empty is the identity.
Sequence ligate(const Sequence& left, const Sequence& right);

// Per-base complement of a single strand (no reversal).
Sequence complement(const Sequence& seq);

// Each byte becomes 4 nt, most significant 2 bits first.
Sequence pack_bytes(std::span<const std::uint8_t> data);

// Inverse of pack_bytes; LengthError when size() is not a multiple of 4,
// which signals truncation or indel damage.
std::vector<std::uint8_t> unpack_bytes(const Sequence& seq);

// MSB-first base-4 integer fields, as used by the wire formats.
void append_uint(Sequence& seq, std::uint64_t value, std::size_t width_nt);
std::uint64_t read_uint(const Sequence& seq, std::size_t pos, std::size_t width_nt);

std::ostream& operator<<(std::ostream& os, const Sequence& seq);

}  // namespace dnanet

#endif  // DNANET_SEQUENCE_HPP
