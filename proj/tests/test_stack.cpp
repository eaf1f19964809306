#include <doctest.h>

#include <algorithm>
#include <vector>

#include "dnanet/stack.hpp"
#include "helpers.hpp"

using namespace dnanet;
using namespace dnanet::stack;
using test::S;

namespace {

StackConfig test_config(EccMode ecc = EccMode::triple) {
    StackConfig cfg;
    cfg.ecc = ecc;
    return cfg;
}

std::vector<std::uint8_t> bytes_of(std::initializer_list<int> values) {
    std::vector<std::uint8_t> out;
    for (int v : values) out.push_back(static_cast<std::uint8_t>(v));
    return out;
}

}  // namespace

TEST_CASE("layer tags are pairwise distinct 2-nt codes") {
    const LayerTag tags[] = {LayerTag::application, LayerTag::presentation, LayerTag::session,
                             LayerTag::transport,   LayerTag::network,      LayerTag::datalink};
    std::vector<std::string> codes;
    for (LayerTag t : tags) codes.push_back(tag_code(t).str());
    CHECK(codes == std::vector<std::string>{"AA", "AC", "AG", "AT", "CA", "CC"});
    std::sort(codes.begin(), codes.end());
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("addresses render as 8 nt with TTTTTTTT broadcast") {
    CHECK(Address{0xFFFF}.to_nt() == S("TTTTTTTT"));
    CHECK(Address{0xFFFF}.is_broadcast());
    CHECK_FALSE(Address{0x0001}.is_broadcast());
    const Address a{0x1B2C};
    CHECK(Address::from_nt(a.to_nt(), 0) == a);
    CHECK(Address::from_hex("1b2c") == a);
    CHECK(Address::from_hex("1B2C") == a);
    CHECK(a.str() == "1b2c");
    CHECK_THROWS_AS(Address::from_hex("12"), ParseError);
    CHECK_THROWS_AS(Address::from_hex("12g4"), ParseError);
}

TEST_CASE("checksum8 sums base values mod 256") {
    CHECK(checksum8(S("")) == 0);
    CHECK(checksum8(S("TTTT")) == 12);
    CHECK(checksum8(S("ACGT")) == 6);
}

TEST_CASE("checksum8 detects every single-nucleotide substitution") {
    RandomStream rng(51);
    for (int iter = 0; iter < 200; ++iter) {
        Sequence seq = test::random_sequence(rng, 1 + rng.uniform_below(80));
        const std::uint8_t before = checksum8(seq);
        const std::size_t pos = rng.uniform_below(seq.size());
        seq[pos] = rng.uniform_base_except(seq[pos]);
        CHECK(checksum8(seq) != before);
    }
}

TEST_CASE("ecc_encode repeats each nucleotide three times") {
    CHECK(ecc_encode(S("ACG"), EccMode::triple) == S("AAACCCGGG"));
    CHECK(ecc_encode(S("ACG"), EccMode::none) == S("ACG"));
    CHECK(ecc_encode(S(""), EccMode::triple) == S(""));
}

TEST_CASE("ecc_decode majority-votes each triple") {
    CHECK(ecc_decode(S("AAACCCGGG"), EccMode::triple) == S("ACG"));
    CHECK(ecc_decode(S("AATCCCGGG"), EccMode::triple) == S("ACG"));
    CHECK(ecc_decode(S("ACG"), EccMode::none) == S("ACG"));
    CHECK_THROWS_AS(ecc_decode(S("AAAA"), EccMode::triple), LengthError);
    CHECK_THROWS_AS(ecc_decode(S("ACT"), EccMode::triple), UncorrectableError);

    std::size_t corrected = 0;
    ecc_decode(S("AATCCCTGG"), EccMode::triple, &corrected);
    CHECK(corrected == 2);
}

TEST_CASE("protect/unprotect are inverse and reject double application") {
    Segment seg;
    seg.header.payload_len = 4;
    seg.payload = S("ACGT");
    seg.header.checksum = checksum8(seg.payload);

    const Segment protected_seg = protect(seg);
    CHECK(protected_seg.protected_by_strand);
    const Segment back = unprotect(protected_seg);
    CHECK_FALSE(back.protected_by_strand);
    CHECK(serialize_segment(back) == serialize_segment(seg));

    CHECK_THROWS_AS(protect(protected_seg), StateError);
    CHECK_THROWS_AS(unprotect(seg), StateError);
}

TEST_CASE("protected segments are invisible to the cutting enzyme") {
    Segment seg;
    seg.payload = S("AAGAATTCAA");  // contains the EcoRI site
    seg.header.payload_len = static_cast<std::uint16_t>(seg.payload.size());
    seg.header.checksum = checksum8(seg.payload);

    const Sequence exposed = serialize_segment(seg);
    CHECK(enzymatic_cut(exposed, EnzymeSpec::ecori()).size() == 2);

    const Sequence shielded = serialize_segment(protect(seg));
    CHECK(enzymatic_cut(shielded, EnzymeSpec::ecori()).size() == 1);

    const Segment parsed = parse_segment(shielded);
    CHECK(parsed.protected_by_strand);
    CHECK(parsed.payload == seg.payload);
}

TEST_CASE("frame serialization round-trips") {
    Frame frame;
    frame.ecc = EccMode::triple;
    frame.frame_checksum = 0xAB;
    frame.body = S("ACGTACGTACGT");
    const Frame parsed = parse_frame(serialize_frame(frame));
    CHECK(parsed == frame);
    CHECK_THROWS_AS(parse_frame(S("CCAA")), HeaderError);        // truncated
    CHECK_THROWS_AS(parse_frame(S("CAAAAAAACGT")), HeaderError); // wrong tag
}

TEST_CASE("config validation catches the documented misconfigurations") {
    CHECK_NOTHROW(test_config().validate());

    StackConfig cfg = test_config();
    cfg.max_segment_payload = 60;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = test_config();
    cfg.max_segment_payload = 514;  // not divisible by 4
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = test_config();
    cfg.enzyme = EnzymeSpec(S("GTTA"), 1);  // site ends in A
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = test_config();
    cfg.enzyme = EnzymeSpec(S("ACGT"), 1);  // guard would start with A
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = test_config();
    cfg.enzyme = EnzymeSpec(S("GTGTC"), 1);  // guard GTGT has border GT
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = test_config();
    cfg.src_addr = Address::broadcast();
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = test_config();
    cfg.ttl = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("one-byte payload encodes to exactly one frame and decodes back") {
    const auto payload = bytes_of({0x42});
    for (EccMode mode : {EccMode::none, EccMode::triple}) {
        const StackConfig cfg = test_config(mode);
        const auto frames = encode_message(payload, cfg);
        REQUIRE(frames.size() == 1);
        CHECK(decode_message(frames, cfg) == payload);
    }
}

TEST_CASE("encode rejects an empty payload") {
    CHECK_THROWS_AS(encode_message({}, test_config()), ConfigError);
}

TEST_CASE("600 nt of stuffed payload split into two segments at 512") {
    // 150 zero bytes pack to 600 nt of A, which the GAATT guard never matches,
    // so the stuffed payload is exactly 600 nt.
    const std::vector<std::uint8_t> payload(150, 0x00);
    const StackConfig cfg = test_config();
    const auto frames = encode_message(payload, cfg);
    REQUIRE(frames.size() == 2);
    std::vector<std::uint16_t> indices;
    for (const Frame& frame : frames) {
        const Sequence packet = ecc_decode(frame.body, frame.ecc);
        const Segment seg = parse_segment(packet.subseq(22, packet.size()));
        CHECK(seg.header.seg_total == 2);
        CHECK(seg.payload.size() <= cfg.max_segment_payload);
        indices.push_back(seg.header.seg_index);
    }
    CHECK(indices == std::vector<std::uint16_t>{0, 1});
    CHECK(decode_message(frames, cfg) == payload);
}

TEST_CASE("wire order is datalink, network, transport, session, presentation, application") {
    const auto payload = bytes_of({0x07});
    const StackConfig cfg = test_config(EccMode::none);
    const auto frames = encode_message(payload, cfg);
    REQUIRE(frames.size() == 1);

    const Sequence wire = serialize_frame(frames[0]);
    CHECK(wire.subseq(0, 2) == S("CC"));  // datalink
    const Sequence packet = wire.subseq(8, wire.size());
    CHECK(packet.subseq(0, 2) == S("CA"));    // network
    CHECK(packet.subseq(22, 2) == S("AT"));   // transport
    CHECK(packet.subseq(52, 2) == S("AG"));   // session
    CHECK(packet.subseq(70, 2) == S("AC"));   // presentation
    CHECK(packet.subseq(74, 2) == S("AA"));   // application
}

TEST_CASE("golden wire bytes for a one-byte message") {
    // Frozen from an independent implementation of the documented layout:
    // payload 0x42, defaults, ecc none.
    const auto payload = bytes_of({0x42});
    StackConfig cfg = test_config(EccMode::none);
    const auto frames = encode_message(payload, cfg);
    REQUIRE(frames.size() == 1);
    CHECK(serialize_frame(frames[0]).str() ==
          "CCAAACCGCAAAAAAAAGAAAAAAACACAAATAAAAAAAAAAAAAAACAAAAAGCAAAGA"
          "AGAAAAAAAAAAAAAAACACAAAAAAAAAAACCAAG");
}

TEST_CASE("no segment payload ever contains the recognition site") {
    // 0x83 0xD0 packs to GAATTCAA: the raw payload would carry the site.
    RandomStream rng(52);
    for (int iter = 0; iter < 20; ++iter) {
        auto payload = test::random_bytes(rng, 40 + rng.uniform_below(400));
        payload.push_back(0x83);
        payload.push_back(0xD0);
        const StackConfig cfg = test_config(EccMode::none);
        CHECK(!find_sites(pack_bytes(payload), cfg.enzyme).empty());
        for (const Frame& frame : encode_message(payload, cfg)) {
            const Segment seg = parse_segment(frame.body.subseq(22, frame.body.size()));
            CHECK(find_sites(seg.payload, cfg.enzyme).empty());
        }
    }
}

TEST_CASE("decode reassembles shuffled frames and ignores identical duplicates") {
    RandomStream rng(53);
    const auto payload = test::random_bytes(rng, 700);
    const StackConfig cfg = test_config();
    auto frames = encode_message(payload, cfg);
    REQUIRE(frames.size() > 2);

    std::reverse(frames.begin(), frames.end());
    CHECK(decode_message(frames, cfg) == payload);

    for (int perm = 0; perm < 10; ++perm) {
        auto shuffled = frames;
        for (std::size_t i = shuffled.size(); i > 1; --i) {
            std::swap(shuffled[i - 1], shuffled[rng.uniform_below(i)]);
        }
        CHECK(decode_message(shuffled, cfg) == payload);
    }

    auto doubled = frames;
    doubled.insert(doubled.end(), frames.begin(), frames.end());
    CHECK(decode_message(doubled, cfg) == payload);
}

TEST_CASE("a missing segment is reported as such") {
    RandomStream rng(54);
    const auto payload = test::random_bytes(rng, 700);
    const StackConfig cfg = test_config();
    auto frames = encode_message(payload, cfg);
    REQUIRE(frames.size() >= 2);
    frames.erase(frames.begin() + 1);
    CHECK_THROWS_AS(decode_message(frames, cfg), MissingSegmentError);
    CHECK_THROWS_AS(decode_message(std::vector<Frame>{}, cfg), MissingSegmentError);
}

TEST_CASE("corrupting the body beyond repair raises ChecksumError") {
    const auto payload = bytes_of({1, 2, 3, 4});
    const StackConfig cfg = test_config(EccMode::none);
    auto frames = encode_message(payload, cfg);
    Sequence& body = frames[0].body;
    const std::size_t pos = body.size() - 3;  // payload area
    body[pos] = static_cast<Base>((base_value(body[pos]) + 1) % 4);
    CHECK_THROWS_AS(decode_message(frames, cfg), ChecksumError);
}

TEST_CASE("a frame for someone else raises AddressError") {
    const auto payload = bytes_of({9});
    StackConfig sender = test_config();
    sender.dst_addr = Address{0x0005};
    const auto frames = encode_message(payload, sender);

    StackConfig receiver = test_config();  // expects dst 0x0002
    CHECK_THROWS_AS(decode_message(frames, receiver), AddressError);

    sender.dst_addr = Address::broadcast();
    const auto broadcast_frames = encode_message(payload, sender);
    StackConfig listener = test_config();
    listener.dst_addr = Address{0x0007};
    listener.src_addr = sender.src_addr;
    CHECK(decode_message(broadcast_frames, listener) == payload);
}

TEST_CASE("session and application id mismatches raise HeaderError") {
    const auto payload = bytes_of({9});
    const auto frames = encode_message(payload, test_config());

    StackConfig other_session = test_config();
    other_session.session_id = 99;
    CHECK_THROWS_AS(decode_message(frames, other_session), HeaderError);

    StackConfig other_app = test_config();
    other_app.app_id = 99;
    CHECK_THROWS_AS(decode_message(frames, other_app), HeaderError);
}

TEST_CASE("any single substitution in a triple-ECC body is corrected") {
    const auto payload = bytes_of({0xDE, 0xAD, 0xBE, 0xEF});
    const StackConfig cfg = test_config(EccMode::triple);
    const auto frames = encode_message(payload, cfg);
    REQUIRE(frames.size() == 1);

    RandomStream rng(55);
    for (int iter = 0; iter < 100; ++iter) {
        auto damaged = frames;
        Sequence& body = damaged[0].body;
        const std::size_t pos = rng.uniform_below(body.size());
        body[pos] = rng.uniform_base_except(body[pos]);
        CHECK(decode_message(damaged, cfg) == payload);
    }
}

TEST_CASE("round-trip across random payloads, sizes and modes") {
    RandomStream rng(56);
    for (int iter = 0; iter < 60; ++iter) {
        const auto payload = test::random_bytes(rng, 1 + rng.uniform_below(2048));
        StackConfig cfg = test_config(rng.uniform_below(2) ? EccMode::triple : EccMode::none);
        if (rng.uniform_below(2)) cfg.presentation = PresentationMode::codon_view;
        const auto frames = encode_message(payload, cfg);
        CHECK(decode_message(frames, cfg) == payload);
    }
}

TEST_CASE("codon_view renders whole codons and keeps the remainder visible") {
    CHECK(codon_view(S("ATG")) == "M");
    CHECK(codon_view(S("ATGC")) == "M|C");
    CHECK(codon_view(S("")) == "");
}
