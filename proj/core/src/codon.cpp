#include "dnanet/codon.hpp"

namespace dnanet {

Codon Codon::from_index(std::size_t index) {
    if (index >= 64) throw RangeError("codon index " + std::to_string(index) + " out of range");
    return Codon{{static_cast<Base>((index >> 4) & 3u), static_cast<Base>((index >> 2) & 3u),
                  static_cast<Base>(index & 3u)}};
}

Codon Codon::from_string(std::string_view text) {
    if (text.size() != 3) throw ParseError("codon must be exactly 3 symbols");
    std::array<Base, 3> bases{};
    for (std::size_t i = 0; i < 3; ++i) {
        bases[i] = text[i] == 'U' ? Base::T : base_from_char(text[i]);
    }
    return Codon{bases};
}

std::string Codon::str() const {
    std::string out;
    for (Base b : bases) out.push_back(b == Base::T ? 'U' : to_char(b));
    return out;
}

const CodonTable& CodonTable::standard() {
    // Indexed by Codon::index() with A=0, C=1, G=2, U=3; '*' marks stop.
    static const CodonTable table(std::array<char, 64>{
        // AAx       ACx       AGx       AUx
        'K', 'N', 'K', 'N', 'T', 'T', 'T', 'T', 'R', 'S', 'R', 'S', 'I', 'I', 'M', 'I',
        // CAx       CCx       CGx       CUx
        'Q', 'H', 'Q', 'H', 'P', 'P', 'P', 'P', 'R', 'R', 'R', 'R', 'L', 'L', 'L', 'L',
        // GAx       GCx       GGx       GUx
        'E', 'D', 'E', 'D', 'A', 'A', 'A', 'A', 'G', 'G', 'G', 'G', 'V', 'V', 'V', 'V',
        // UAx       UCx       UGx       UUx
        '*', 'Y', '*', 'Y', 'S', 'S', 'S', 'S', '*', 'C', 'W', 'C', 'L', 'F', 'L', 'F'});
    return table;
}

std::string_view CodonTable::symbol(Codon c) const {
    static constexpr std::string_view kStop = "stop";
    const char aa = aa_[c.index()];
    if (aa == '*') return kStop;
    // One-letter symbols live in a static table so views stay valid.
    static constexpr char kLetters[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    return std::string_view(&kLetters[aa - 'A'], 1);
}

std::string translate(const Sequence& seq, const CodonTable& table) {
    if (seq.size() % 3 != 0) {
        throw LengthError("sequence length " + std::to_string(seq.size()) +
                          " is not a whole number of codons (mod 3 != 0)");
    }
    std::string out;
    out.reserve(seq.size() / 3);
    for (std::size_t i = 0; i < seq.size(); i += 3) {
        const Codon c{{seq[i], seq[i + 1], seq[i + 2]}};
        out += table.symbol(c);
    }
    return out;
}

}  // namespace dnanet
