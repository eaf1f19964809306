#ifndef DNANET_STACK_HPP
#define DNANET_STACK_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dnanet/enzyme.hpp"
#include "dnanet/sequence.hpp"

namespace dnanet::stack {

// Layer tags, 2 nt each, pairwise distinct.
enum class LayerTag : std::uint8_t {
    application = 0x0,   // AA
    presentation = 0x1,  // AC
    session = 0x2,       // AG
    transport = 0x3,     // AT
    network = 0x4,       // CA
    datalink = 0x5,      // CC
};

Sequence tag_code(LayerTag tag);

// 16-bit node address rendered as 8 nt. TTTTTTTT (0xFFFF) is broadcast.
struct Address {
    std::uint16_t value = 0;

    static constexpr std::uint16_t kBroadcastValue = 0xFFFF;
    static Address broadcast() { return Address{kBroadcastValue}; }

    bool is_broadcast() const noexcept { return value == kBroadcastValue; }

    Sequence to_nt() const;
    static Address from_nt(const Sequence& seq, std::size_t pos);

    // 4-digit hex, the form used by topology files.
    std::string str() const;
    static Address from_hex(const std::string& text);

    auto operator<=>(const Address&) const = default;
};

enum class EccMode : std::uint8_t { none = 0, triple = 1 };
enum class PresentationMode : std::uint8_t { raw = 0, codon_view = 1 };

// Everything both ends must agree on.
//
// Wire layout, outermost first, all integers MSB-first base-4:
//   datalink:     CC | ecc_mode(2)  | frame_checksum(4) | body
//   network:      CA | dst(8)       | src(8)  | ttl(4)
//   transport:    AT | seg_index(8) | seg_total(8) | payload_len(8) | checksum(4)
//   session:      AG | session_id(16)
//   presentation: AC | mode(2)             AA=raw, AC=codon_view
//   application:  AA | app_id(8)
//
// frame_checksum covers everything after it in the frame, pre-ECC; ECC
// expands the network packet but never the datalink header.
struct StackConfig {
    std::uint16_t app_id = 1;
    std::uint32_t session_id = 1;
    Address src_addr{0x0001};
    Address dst_addr{0x0002};
    EnzymeSpec enzyme = EnzymeSpec::ecori();
    std::size_t max_segment_payload = 512;  // nt
    EccMode ecc = EccMode::triple;
    PresentationMode presentation = PresentationMode::raw;
    std::uint8_t ttl = 16;

    // Stuffing guard: the recognition site minus its final nucleotide.
    Sequence guard() const;

    // ConfigError on violation. Beyond the field ranges this requires the
    // guard to be border-free and to not start with A, and the site to not
    // end in A; together these make the stuffing guarantee airtight.
    void validate() const;

    // Fixed-size chunk the transport layer slices the session output into;
    // chunk + recognition site = max_segment_payload.
    std::size_t chunk_size() const { return max_segment_payload - enzyme.site().size(); }
};

struct TransportHeader {
    std::uint16_t seg_index = 0;
    std::uint16_t seg_total = 1;
    std::uint16_t payload_len = 0;  // nt
    std::uint8_t checksum = 0;      // checksum8 of the payload
};

// One transport-layer unit. `protected_by_strand` models a protector strand
// bound to the molecule: a protected segment is invisible to cutting.
struct Segment {
    TransportHeader header;
    Sequence payload;
    bool protected_by_strand = false;
};

// One data-link frame: the unit handed to the physical layer.
struct Frame {
    EccMode ecc = EccMode::none;
    std::uint8_t frame_checksum = 0;
    Sequence body;  // ECC-expanded network packet

    bool operator==(const Frame&) const = default;
};

// Sum of base values mod 256. Detects every single-nucleotide substitution.
std::uint8_t checksum8(const Sequence& seq);

// mode=none is the identity; mode=triple repeats each nucleotide three times.
Sequence ecc_encode(const Sequence& seq, EccMode mode);

// Per-triple majority vote. LengthError when a triple mode input is not a
// multiple of 3 (insertion/deletion damage); UncorrectableError when a triple
// has three distinct bases. corrected_triples, when given, counts repairs.
Sequence ecc_decode(const Sequence& seq, EccMode mode, std::size_t* corrected_triples = nullptr);

// Protector-strand control: protect prepends the TGTG guard tag on the wire
// and flags the segment; unprotect undoes it. StateError on double apply.
Segment protect(Segment seg);
Segment unprotect(Segment seg);

Sequence serialize_segment(const Segment& seg);
Segment parse_segment(const Sequence& seq);

// How the stack cuts transport material: protected molecules come back in
// one piece, everything else goes through the enzyme.
std::vector<Sequence> enzymatic_cut(const Sequence& material, const EnzymeSpec& enzyme);

Sequence serialize_frame(const Frame& frame);
Frame parse_frame(const Sequence& seq);

// Network-layer view of a decoded packet, needed by the channel for hop-by-
// hop forwarding. parse throws HeaderError on a bad tag or truncated header.
struct NetworkHeader {
    Address dst;
    Address src;
    std::uint8_t ttl = 0;
};
NetworkHeader parse_network_header(const Sequence& packet);
Sequence packet_with_ttl(const Sequence& packet, std::uint8_t ttl);

// Full downward pass: pack, stuff, wrap application/presentation/session
// headers, segment with the cutting enzyme, address, ECC-encode into frames.
// ConfigError on a malformed config or empty payload.
std::vector<Frame> encode_message(std::span<const std::uint8_t> payload, const StackConfig& cfg);

// Inverse of encode_message. Frames may arrive in any order; identical
// duplicates are ignored. Throws ChecksumError, MissingSegmentError,
// HeaderError or AddressError as the damage dictates.
std::vector<std::uint8_t> decode_message(std::span<const Frame> frames, const StackConfig& cfg);

// Inspection view of a payload sequence as amino-acid symbols (the longest
// multiple-of-3 prefix; the 0-2 nt remainder is appended verbatim after '|').
// Never part of the wire data, since translation cannot round-trip.
std::string codon_view(const Sequence& seq);

}  // namespace dnanet::stack

#endif  // DNANET_STACK_HPP
