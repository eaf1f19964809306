#ifndef DNANET_CHANNEL_HPP
#define DNANET_CHANNEL_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dnanet/random.hpp"
#include "dnanet/sequence.hpp"
#include "dnanet/stack.hpp"

namespace dnanet::channel {

using stack::Address;

// Intercellular channel between two cells. Permeability is a threshold on
// the connexin phosphorylation level: open iff phosphorylation >= threshold.
struct GapJunctionLink {
    std::uint32_t id = 0;
    Address end_a;
    Address end_b;
    double phosphorylation = 0.0;
    double threshold = 0.5;

    bool is_open() const noexcept { return phosphorylation >= threshold; }
    bool touches(Address node) const noexcept { return node == end_a || node == end_b; }
    Address peer(Address node) const noexcept { return node == end_a ? end_b : end_a; }
};

struct CellNode {
    Address id;
    std::vector<std::uint32_t> interfaces;                    // link ids, unique per node
    std::map<std::uint16_t, std::set<std::uint32_t>> routing; // dst value -> interfaces
};

// Per-nucleotide channel damage: substitution, insertion-after, deletion.
// Probabilities are exclusive draws against one uniform variate per input
// nucleotide, in the fixed order delete / substitute / insert.
struct NoiseModel {
    double p_sub = 0.0;
    double p_ins = 0.0;
    double p_del = 0.0;
    std::uint64_t seed = 0;

    void validate() const;  // RangeError unless each p >= 0 and the sum is <= 1

    static NoiseModel noiseless(std::uint64_t seed = 0) { return NoiseModel{0, 0, 0, seed}; }
};

class Topology {
public:
    void add_node(Address id);
    std::uint32_t add_link(Address a, Address b, double threshold = 0.5);
    void add_route(Address at, Address dst, Address via);

    bool has_node(Address id) const { return nodes_.count(id.value) != 0; }
    CellNode& node(Address id);
    const CellNode& node(Address id) const;
    GapJunctionLink& link(std::uint32_t id);
    const GapJunctionLink& link(std::uint32_t id) const;

    const std::map<std::uint16_t, CellNode>& nodes() const { return nodes_; }
    const std::vector<GapJunctionLink>& links() const { return links_; }
    std::vector<GapJunctionLink>& links() { return links_; }

    // Line-based text format:
    //   node <hex16>
    //   link <hex16> <hex16> [threshold]
    //   route <hex16> <hex16> via <hex16>
    // '#' starts a comment. ParseError carries the line number.
    static Topology parse(std::istream& in);
    static Topology load(const std::string& path);

private:
    std::map<std::uint16_t, CellNode> nodes_;
    std::vector<GapJunctionLink> links_;
};

// RangeError outside [0,1]; permeability follows from the threshold rule.
void set_phosphorylation(GapJunctionLink& link, double level);

// Opens exactly the interfaces routing to dst (all interfaces for broadcast)
// at phosphorylation 1.0, closes every other interface of the node, and
// returns the opened set. NoRouteError when dst is unknown and not broadcast.
std::set<std::uint32_t> switch_links(Topology& topo, Address node, Address dst);

// One physical transmission. Returns nullopt (dropped) when the link is
// closed; otherwise the possibly damaged sequence, driven by the stream
// derived from (noise.seed, stream_id). Corruption is a result, not an error.
std::optional<Sequence> transmit(const Sequence& seq, const GapJunctionLink& link,
                                 const NoiseModel& noise, std::uint64_t stream_id);

// Stream key for one hop of one frame over one link; including the endpoints
// keeps per-link streams independent so transmissions could run in parallel.
constexpr std::uint64_t transmission_stream_id(std::size_t hop, std::size_t frame_ordinal,
                                               Address from, Address to) noexcept {
    return mix64(mix64(mix64(static_cast<std::uint64_t>(hop), frame_ordinal), from.value),
                 to.value);
}

struct HopStats {
    std::size_t sent = 0;       // transmissions attempted at this hop depth
    std::size_t corrupted = 0;  // transmissions altered by channel noise
    std::size_t corrected = 0;  // arrivals repaired by per-hop ECC
    std::size_t dropped = 0;    // closed link, expired TTL, or unrecoverable damage
};

struct DeliveryReport {
    // node value -> frames that arrived at a delivery target
    std::map<std::uint16_t, std::vector<stack::Frame>> delivered;
    std::vector<HopStats> hops;  // hops[i] covers hop depth i+1
};

// Hop-by-hop store-and-forward: at every node switch_links selects the
// outgoing interfaces, transmit applies per-hop noise, the data-link layer
// repairs or discards damaged frames, and TTL is decremented per forward
// (dropped when it reaches 0). Delivery targets are dst, or every node for
// broadcast. Deterministic for fixed inputs and seed.
DeliveryReport route_and_deliver(std::span<const stack::Frame> frames, Address src, Address dst,
                                 Topology& topo, const NoiseModel& noise);

}  // namespace dnanet::channel

#endif  // DNANET_CHANNEL_HPP
