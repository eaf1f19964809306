#include "dnanet/stack.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>

#include "dnanet/codon.hpp"
#include "dnanet/stuffing.hpp"

namespace dnanet::stack {

namespace {

constexpr std::size_t kDatalinkHeaderNt = 8;   // CC | ecc(2) | fcs(4)
constexpr std::size_t kNetworkHeaderNt = 22;   // CA | dst(8) | src(8) | ttl(4)
constexpr std::size_t kTransportHeaderNt = 30; // AT | idx(8) | tot(8) | len(8) | ck(4)
constexpr std::size_t kSessionHeaderNt = 18;   // AG | session_id(16)
constexpr std::size_t kPresentationHeaderNt = 4;
constexpr std::size_t kApplicationHeaderNt = 10;

const Sequence& protect_tag() {
    static const Sequence tag = Sequence::from_string("TGTG");
    return tag;
}

bool starts_with(const Sequence& seq, const Sequence& prefix) {
    if (seq.size() < prefix.size()) return false;
    return std::equal(prefix.begin(), prefix.end(), seq.begin());
}

void expect_tag(const Sequence& seq, std::size_t pos, LayerTag tag, const char* layer) {
    const Sequence code = tag_code(tag);
    if (pos + 2 > seq.size() || seq[pos] != code[0] || seq[pos + 1] != code[1]) {
        throw HeaderError(std::string(layer) + " layer tag mismatch");
    }
}

}  // namespace

NetworkHeader parse_network_header(const Sequence& packet) {
    if (packet.size() < kNetworkHeaderNt) throw HeaderError("network packet too short");
    expect_tag(packet, 0, LayerTag::network, "network");
    NetworkHeader hdr;
    hdr.dst = Address::from_nt(packet, 2);
    hdr.src = Address::from_nt(packet, 10);
    hdr.ttl = static_cast<std::uint8_t>(read_uint(packet, 18, 4));
    return hdr;
}

Sequence packet_with_ttl(const Sequence& packet, std::uint8_t ttl) {
    if (packet.size() < kNetworkHeaderNt) throw HeaderError("network packet too short");
    Sequence out = packet;
    for (std::size_t i = 0; i < 4; ++i) {
        out[18 + i] = static_cast<Base>((ttl >> (2 * (3 - i))) & 3u);
    }
    return out;
}

Sequence tag_code(LayerTag tag) {
    switch (tag) {
        case LayerTag::application: return Sequence::from_string("AA");
        case LayerTag::presentation: return Sequence::from_string("AC");
        case LayerTag::session: return Sequence::from_string("AG");
        case LayerTag::transport: return Sequence::from_string("AT");
        case LayerTag::network: return Sequence::from_string("CA");
        case LayerTag::datalink: return Sequence::from_string("CC");
    }
    throw RangeError("unknown layer tag");
}

Sequence Address::to_nt() const {
    Sequence out;
    append_uint(out, value, 8);
    return out;
}

Address Address::from_nt(const Sequence& seq, std::size_t pos) {
    return Address{static_cast<std::uint16_t>(read_uint(seq, pos, 8))};
}

std::string Address::str() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%04x", value);
    return buf;
}

Address Address::from_hex(const std::string& text) {
    if (text.size() != 4) throw ParseError("address '" + text + "' is not 4 hex digits");
    std::uint16_t value = 0;
    for (char c : text) {
        std::uint16_t digit;
        if (c >= '0' && c <= '9') digit = static_cast<std::uint16_t>(c - '0');
        else if (c >= 'a' && c <= 'f') digit = static_cast<std::uint16_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') digit = static_cast<std::uint16_t>(c - 'A' + 10);
        else throw ParseError("address '" + text + "' is not 4 hex digits");
        value = static_cast<std::uint16_t>((value << 4) | digit);
    }
    return Address{value};
}

Sequence StackConfig::guard() const {
    return enzyme.site().subseq(0, enzyme.site().size() - 1);
}

void StackConfig::validate() const {
    if (max_segment_payload < 64 || max_segment_payload % 4 != 0) {
        throw ConfigError("max_segment_payload must be >= 64 nt and divisible by 4");
    }
    if (max_segment_payload > 0xFFFF) {
        throw ConfigError("max_segment_payload exceeds the 16-bit payload_len field");
    }
    if (max_segment_payload <= 2 * enzyme.site().size()) {
        throw ConfigError("max_segment_payload must exceed twice the recognition site length");
    }
    const Sequence& site = enzyme.site();
    if (site[site.size() - 1] == Base::A) {
        throw ConfigError("recognition site must not end in A (stuffing inserts A)");
    }
    const Sequence g = guard();
    if (g[0] == Base::A) {
        throw ConfigError("stuffing guard must not start with A");
    }
    if (has_nontrivial_border(g)) {
        throw ConfigError("stuffing guard " + g.str() + " has a nontrivial border");
    }
    if (src_addr.is_broadcast()) throw ConfigError("source address cannot be broadcast");
    if (ttl == 0) throw ConfigError("ttl must be at least 1");
}

std::uint8_t checksum8(const Sequence& seq) {
    unsigned sum = 0;
    for (Base b : seq) sum += base_value(b);
    return static_cast<std::uint8_t>(sum & 0xFFu);
}

Sequence ecc_encode(const Sequence& seq, EccMode mode) {
    if (mode == EccMode::none) return seq;
    Sequence out;
    out.reserve(seq.size() * 3);
    for (Base b : seq) {
        out.push_back(b);
        out.push_back(b);
        out.push_back(b);
    }
    return out;
}

Sequence ecc_decode(const Sequence& seq, EccMode mode, std::size_t* corrected_triples) {
    if (mode == EccMode::none) return seq;
    if (seq.size() % 3 != 0) {
        throw LengthError("triple-ECC body of " + std::to_string(seq.size()) +
                          " nt is not a multiple of 3");
    }
    Sequence out;
    out.reserve(seq.size() / 3);
    for (std::size_t i = 0; i < seq.size(); i += 3) {
        const Base a = seq[i], b = seq[i + 1], c = seq[i + 2];
        Base winner;
        if (b == c) winner = b;
        else if (a == b || a == c) winner = a;
        else
            throw UncorrectableError("triple at nt " + std::to_string(i) +
                                     " has three distinct bases");
        if (corrected_triples && !(a == b && b == c)) ++*corrected_triples;
        out.push_back(winner);
    }
    return out;
}

Segment protect(Segment seg) {
    if (seg.protected_by_strand) throw StateError("segment is already protected");
    seg.protected_by_strand = true;
    return seg;
}

Segment unprotect(Segment seg) {
    if (!seg.protected_by_strand) throw StateError("segment is not protected");
    seg.protected_by_strand = false;
    return seg;
}

Sequence serialize_segment(const Segment& seg) {
    Sequence out;
    out.reserve(kTransportHeaderNt + seg.payload.size() + 4);
    if (seg.protected_by_strand) out.append(protect_tag());
    out.append(tag_code(LayerTag::transport));
    append_uint(out, seg.header.seg_index, 8);
    append_uint(out, seg.header.seg_total, 8);
    append_uint(out, seg.header.payload_len, 8);
    append_uint(out, seg.header.checksum, 4);
    out.append(seg.payload);
    return out;
}

Segment parse_segment(const Sequence& seq) {
    Segment seg;
    std::size_t pos = 0;
    if (starts_with(seq, protect_tag())) {
        seg.protected_by_strand = true;
        pos = protect_tag().size();
    }
    if (seq.size() < pos + kTransportHeaderNt) throw HeaderError("transport segment too short");
    expect_tag(seq, pos, LayerTag::transport, "transport");
    seg.header.seg_index = static_cast<std::uint16_t>(read_uint(seq, pos + 2, 8));
    seg.header.seg_total = static_cast<std::uint16_t>(read_uint(seq, pos + 10, 8));
    seg.header.payload_len = static_cast<std::uint16_t>(read_uint(seq, pos + 18, 8));
    seg.header.checksum = static_cast<std::uint8_t>(read_uint(seq, pos + 26, 4));
    seg.payload = seq.subseq(pos + kTransportHeaderNt, seq.size());
    if (seg.payload.size() != seg.header.payload_len) {
        throw HeaderError("transport payload_len " + std::to_string(seg.header.payload_len) +
                          " does not match payload of " + std::to_string(seg.payload.size()) +
                          " nt");
    }
    return seg;
}

std::vector<Sequence> enzymatic_cut(const Sequence& material, const EnzymeSpec& enzyme) {
    if (starts_with(material, protect_tag())) {
        return {material};  // protector strand blocks the enzyme
    }
    return cut(material, enzyme);
}

Sequence serialize_frame(const Frame& frame) {
    Sequence out;
    out.reserve(kDatalinkHeaderNt + frame.body.size());
    out.append(tag_code(LayerTag::datalink));
    append_uint(out, static_cast<std::uint64_t>(frame.ecc), 2);
    append_uint(out, frame.frame_checksum, 4);
    out.append(frame.body);
    return out;
}

Frame parse_frame(const Sequence& seq) {
    if (seq.size() < kDatalinkHeaderNt) throw HeaderError("frame shorter than datalink header");
    expect_tag(seq, 0, LayerTag::datalink, "datalink");
    const std::uint64_t mode = read_uint(seq, 2, 2);
    if (mode > static_cast<std::uint64_t>(EccMode::triple)) {
        throw HeaderError("unknown ecc mode field " + std::to_string(mode));
    }
    Frame frame;
    frame.ecc = static_cast<EccMode>(mode);
    frame.frame_checksum = static_cast<std::uint8_t>(read_uint(seq, 4, 4));
    frame.body = seq.subseq(kDatalinkHeaderNt, seq.size());
    return frame;
}

namespace {

// Transport sequence with the recognition site inserted between fixed-size
// chunks; cutting then yields the segment payloads.
Sequence insert_segment_markers(const Sequence& session_seq, const StackConfig& cfg) {
    const std::size_t chunk = cfg.chunk_size();
    if (session_seq.size() <= chunk) return session_seq;
    Sequence out;
    out.reserve(session_seq.size() + (session_seq.size() / chunk + 1) * cfg.enzyme.site().size());
    std::size_t pos = 0;
    while (true) {
        const std::size_t take = std::min(chunk, session_seq.size() - pos);
        out.append(session_seq.subseq(pos, take));
        pos += take;
        if (pos == session_seq.size()) break;
        out.append(cfg.enzyme.site());
    }
    return out;
}

Sequence strip_segment_markers(const Sequence& transport_seq, const StackConfig& cfg) {
    const std::size_t chunk = cfg.chunk_size();
    const Sequence& site = cfg.enzyme.site();
    Sequence out;
    out.reserve(transport_seq.size());
    std::size_t pos = 0;
    while (transport_seq.size() - pos > chunk) {
        out.append(transport_seq.subseq(pos, chunk));
        pos += chunk;
        if (pos + site.size() > transport_seq.size() ||
            transport_seq.subseq(pos, site.size()) != site) {
            throw ChecksumError("segmentation marker damaged at nt " + std::to_string(pos));
        }
        pos += site.size();
    }
    out.append(transport_seq.subseq(pos, transport_seq.size() - pos));
    return out;
}

}  // namespace

std::vector<Frame> encode_message(std::span<const std::uint8_t> payload, const StackConfig& cfg) {
    cfg.validate();
    if (payload.empty()) throw ConfigError("payload must be non-empty");

    // Upper layers: pack, stuff, then ligate headers innermost-first.
    const Sequence stuffed = stuff(pack_bytes(payload), cfg.guard());

    Sequence app;
    app.append(tag_code(LayerTag::application));
    append_uint(app, cfg.app_id, 8);
    app.append(stuffed);

    Sequence pres;
    pres.append(tag_code(LayerTag::presentation));
    append_uint(pres, static_cast<std::uint64_t>(cfg.presentation), 2);
    pres.append(app);

    Sequence session;
    session.append(tag_code(LayerTag::session));
    append_uint(session, cfg.session_id, 16);
    session.append(pres);

    // Transport: mark, cut, wrap each fragment.
    const Sequence marked = insert_segment_markers(session, cfg);
    const std::vector<Sequence> fragments = enzymatic_cut(marked, cfg.enzyme);
    if (fragments.size() > 0xFFFF) {
        throw ConfigError("message needs " + std::to_string(fragments.size()) +
                          " segments, more than the 16-bit seg_total field can carry");
    }

    std::vector<Frame> frames;
    frames.reserve(fragments.size());
    for (std::size_t i = 0; i < fragments.size(); ++i) {
        Segment seg;
        seg.header.seg_index = static_cast<std::uint16_t>(i);
        seg.header.seg_total = static_cast<std::uint16_t>(fragments.size());
        seg.header.payload_len = static_cast<std::uint16_t>(fragments[i].size());
        seg.header.checksum = checksum8(fragments[i]);
        seg.payload = fragments[i];

        Sequence packet;
        packet.append(tag_code(LayerTag::network));
        packet.append(cfg.dst_addr.to_nt());
        packet.append(cfg.src_addr.to_nt());
        append_uint(packet, cfg.ttl, 4);
        packet.append(serialize_segment(seg));

        Frame frame;
        frame.ecc = cfg.ecc;
        frame.frame_checksum = checksum8(packet);
        frame.body = ecc_encode(packet, cfg.ecc);
        frames.push_back(std::move(frame));
    }
    return frames;
}

std::vector<std::uint8_t> decode_message(std::span<const Frame> frames, const StackConfig& cfg) {
    cfg.validate();
    if (frames.empty()) throw MissingSegmentError("no frames to decode");

    std::vector<std::optional<Segment>> segments;
    std::uint16_t seg_total = 0;
    bool have_total = false;

    for (const Frame& frame : frames) {
        const Sequence packet = ecc_decode(frame.body, frame.ecc);
        if (checksum8(packet) != frame.frame_checksum) {
            throw ChecksumError("frame checksum mismatch after ECC decode");
        }

        const NetworkHeader net = parse_network_header(packet);
        if (net.dst != cfg.dst_addr && !net.dst.is_broadcast()) {
            throw AddressError("frame addressed to " + net.dst.str() + ", this node is " +
                               cfg.dst_addr.str());
        }

        Segment seg = parse_segment(packet.subseq(kNetworkHeaderNt, packet.size()));
        if (checksum8(seg.payload) != seg.header.checksum) {
            throw ChecksumError("segment " + std::to_string(seg.header.seg_index) +
                                " payload checksum mismatch");
        }
        if (seg.header.seg_total == 0) throw HeaderError("seg_total of 0");
        if (!have_total) {
            seg_total = seg.header.seg_total;
            have_total = true;
            segments.resize(seg_total);
        } else if (seg.header.seg_total != seg_total) {
            throw HeaderError("frames disagree on seg_total");
        }
        if (seg.header.seg_index >= seg_total) {
            throw HeaderError("seg_index " + std::to_string(seg.header.seg_index) +
                              " outside seg_total " + std::to_string(seg_total));
        }

        // Reassembly is order-insensitive; identical duplicates are ignored.
        std::optional<Segment>& slot = segments[seg.header.seg_index];
        if (slot.has_value()) {
            if (slot->payload != seg.payload) {
                throw HeaderError("conflicting duplicate of segment " +
                                  std::to_string(seg.header.seg_index));
            }
            continue;
        }
        slot = std::move(seg);
    }

    Sequence transport_seq;
    for (std::uint16_t i = 0; i < seg_total; ++i) {
        if (!segments[i].has_value()) {
            throw MissingSegmentError("segment " + std::to_string(i) + " of " +
                                      std::to_string(seg_total) + " missing");
        }
        transport_seq.append(segments[i]->payload);
    }

    const Sequence session = strip_segment_markers(transport_seq, cfg);

    // Session layer.
    if (session.size() < kSessionHeaderNt + kPresentationHeaderNt + kApplicationHeaderNt) {
        throw HeaderError("reassembled message shorter than the fixed headers");
    }
    expect_tag(session, 0, LayerTag::session, "session");
    if (read_uint(session, 2, 16) != cfg.session_id) {
        throw HeaderError("session id mismatch");
    }

    // Presentation layer.
    std::size_t pos = kSessionHeaderNt;
    expect_tag(session, pos, LayerTag::presentation, "presentation");
    const std::uint64_t mode = read_uint(session, pos + 2, 2);
    if (mode > static_cast<std::uint64_t>(PresentationMode::codon_view)) {
        throw HeaderError("unknown presentation mode field " + std::to_string(mode));
    }
    pos += kPresentationHeaderNt;

    // Application layer.
    expect_tag(session, pos, LayerTag::application, "application");
    if (read_uint(session, pos + 2, 8) != cfg.app_id) {
        throw HeaderError("application id mismatch");
    }
    pos += kApplicationHeaderNt;

    const Sequence stuffed = session.subseq(pos, session.size());
    return unpack_bytes(destuff(stuffed, cfg.guard()));
}

std::string codon_view(const Sequence& seq) {
    const std::size_t whole = seq.size() - seq.size() % 3;
    std::string out = translate(seq.subseq(0, whole), CodonTable::standard());
    if (whole != seq.size()) {
        out += '|';
        out += seq.subseq(whole, seq.size() - whole).str();
    }
    return out;
}

}  // namespace dnanet::stack
