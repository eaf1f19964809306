#include "dnanet/sequence.hpp"

#include <ostream>

namespace dnanet {

Base base_from_char(char c) {
    switch (c) {
        case 'A': return Base::A;
        case 'C': return Base::C;
        case 'G': return Base::G;
        case 'T': return Base::T;
        default:
            throw ParseError(std::string("invalid nucleotide character '") + c + "'");
    }
}

Sequence Sequence::from_string(std::string_view text) {
    std::vector<Base> bases;
    bases.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'A': bases.push_back(Base::A); break;
            case 'C': bases.push_back(Base::C); break;
            case 'G': bases.push_back(Base::G); break;
            case 'T': bases.push_back(Base::T); break;
            default:
                throw ParseError("invalid nucleotide character '" + std::string(1, text[i]) +
                                 "' at offset " + std::to_string(i));
        }
    }
    return Sequence(std::move(bases));
}

std::string Sequence::str() const {
    std::string out;
    out.reserve(bases_.size());
    for (Base b : bases_) out.push_back(to_char(b));
    return out;
}

void Sequence::append(const Sequence& other) {
    bases_.insert(bases_.end(), other.bases_.begin(), other.bases_.end());
}

Sequence Sequence::subseq(std::size_t pos, std::size_t count) const {
    if (pos >= bases_.size()) return Sequence{};
    const std::size_t end = std::min(bases_.size(), pos + count);
    return Sequence(std::vector<Base>(bases_.begin() + static_cast<std::ptrdiff_t>(pos),
                                      bases_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Sequence ligate(const Sequence& left, const Sequence& right) {
    Sequence out;
    out.reserve(left.size() + right.size());
    out.append(left);
    out.append(right);
    return out;
}

Sequence complement(const Sequence& seq) {
    std::vector<Base> out;
    out.reserve(seq.size());
    for (Base b : seq) out.push_back(complement(b));
    return Sequence(std::move(out));
}

Sequence pack_bytes(std::span<const std::uint8_t> data) {
    Sequence out;
    out.reserve(data.size() * 4);
    for (std::uint8_t byte : data) {
        out.push_back(static_cast<Base>((byte >> 6) & 3u));
        out.push_back(static_cast<Base>((byte >> 4) & 3u));
        out.push_back(static_cast<Base>((byte >> 2) & 3u));
        out.push_back(static_cast<Base>(byte & 3u));
    }
    return out;
}

std::vector<std::uint8_t> unpack_bytes(const Sequence& seq) {
    if (seq.size() % 4 != 0) {
        throw LengthError("sequence length " + std::to_string(seq.size()) +
                          " is not a whole number of bytes (mod 4 != 0)");
    }
    std::vector<std::uint8_t> out;
    out.reserve(seq.size() / 4);
    for (std::size_t i = 0; i < seq.size(); i += 4) {
        const std::uint8_t byte = static_cast<std::uint8_t>(
            (base_value(seq[i]) << 6) | (base_value(seq[i + 1]) << 4) |
            (base_value(seq[i + 2]) << 2) | base_value(seq[i + 3]));
        out.push_back(byte);
    }
    return out;
}

void append_uint(Sequence& seq, std::uint64_t value, std::size_t width_nt) {
    for (std::size_t i = width_nt; i-- > 0;) {
        seq.push_back(static_cast<Base>((value >> (2 * i)) & 3u));
    }
}

std::uint64_t read_uint(const Sequence& seq, std::size_t pos, std::size_t width_nt) {
    if (pos + width_nt > seq.size()) {
        throw LengthError("integer field of " + std::to_string(width_nt) +
                          " nt at position " + std::to_string(pos) + " runs past the end");
    }
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < width_nt; ++i) {
        value = (value << 2) | base_value(seq[pos + i]);
    }
    return value;
}

std::ostream& operator<<(std::ostream& os, const Sequence& seq) { return os << seq.str(); }

}  // namespace dnanet
