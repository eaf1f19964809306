#ifndef DNANET_CODON_HPP
#define DNANET_CODON_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "dnanet/sequence.hpp"

namespace dnanet {

// A triplet over the RNA alphabet {A,C,G,U}. U is the RNA view of T; the
// numeric base values are shared with the DNA alphabet.
struct Codon {
    std::array<Base, 3> bases;

    // Index in [0, 64): first base is the most significant digit.
    constexpr std::size_t index() const noexcept {
        return 16u * base_value(bases[0]) + 4u * base_value(bases[1]) + base_value(bases[2]);
    }

    static Codon from_index(std::size_t index);

    // Accepts U or T in any position.
    static Codon from_string(std::string_view text);

    // Rendered in the RNA alphabet (U, not T).
    std::string str() const;

    bool operator==(const Codon&) const = default;
};

// The genetic code: a total map from the 64 codons to one-letter amino-acid
// symbols, with exactly three codons (UAA, UAG, UGA) mapping to "stop".
class CodonTable {
public:
    static const CodonTable& standard();

    // "A".."Y" one-letter symbols, or "stop".
    std::string_view symbol(Codon c) const;

    bool is_stop(Codon c) const { return aa_[c.index()] == '*'; }

    static constexpr std::size_t size() { return 64; }

private:
    explicit CodonTable(std::array<char, 64> aa) : aa_(aa) {}
    std::array<char, 64> aa_;
};

// Reads DNA three bases at a time (T read as U), emitting one symbol per
// codon. Stop codons come out as the literal text "stop"; translation never
// terminates early, so this is a codec rather than a ribosome. LengthError
// when size() is not a multiple of 3.
std::string translate(const Sequence& seq, const CodonTable& table);

}  // namespace dnanet

#endif  // DNANET_CODON_HPP
