#include "dnanet/channel.hpp"

#include <deque>
#include <fstream>
#include <sstream>

namespace dnanet::channel {

void NoiseModel::validate() const {
    if (p_sub < 0 || p_ins < 0 || p_del < 0 || p_sub + p_ins + p_del > 1.0) {
        throw RangeError("noise probabilities must be non-negative with sum <= 1");
    }
}

void Topology::add_node(Address id) {
    if (!nodes_.emplace(id.value, CellNode{id, {}, {}}).second) {
        throw ConfigError("duplicate node " + id.str());
    }
}

std::uint32_t Topology::add_link(Address a, Address b, double threshold) {
    if (!has_node(a) || !has_node(b)) {
        throw ConfigError("link endpoint " + (has_node(a) ? b : a).str() + " is not a node");
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw RangeError("link threshold must lie in (0,1)");
    }
    const auto id = static_cast<std::uint32_t>(links_.size());
    links_.push_back(GapJunctionLink{id, a, b, 0.0, threshold});
    nodes_.at(a.value).interfaces.push_back(id);
    nodes_.at(b.value).interfaces.push_back(id);
    return id;
}

void Topology::add_route(Address at, Address dst, Address via) {
    if (!has_node(at)) throw ConfigError("route source " + at.str() + " is not a node");
    if (!has_node(via)) throw ConfigError("route next hop " + via.str() + " is not a node");
    CellNode& n = nodes_.at(at.value);
    bool found = false;
    for (std::uint32_t iface : n.interfaces) {
        if (links_[iface].peer(at) == via) {
            n.routing[dst.value].insert(iface);
            found = true;
        }
    }
    if (!found) {
        throw ConfigError("no link between " + at.str() + " and next hop " + via.str());
    }
}

CellNode& Topology::node(Address id) {
    auto it = nodes_.find(id.value);
    if (it == nodes_.end()) throw ConfigError("unknown node " + id.str());
    return it->second;
}

const CellNode& Topology::node(Address id) const {
    auto it = nodes_.find(id.value);
    if (it == nodes_.end()) throw ConfigError("unknown node " + id.str());
    return it->second;
}

GapJunctionLink& Topology::link(std::uint32_t id) {
    if (id >= links_.size()) throw ConfigError("unknown link " + std::to_string(id));
    return links_[id];
}

const GapJunctionLink& Topology::link(std::uint32_t id) const {
    if (id >= links_.size()) throw ConfigError("unknown link " + std::to_string(id));
    return links_[id];
}

Topology Topology::parse(std::istream& in) {
    Topology topo;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("topology line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword)) continue;  // blank or comment-only line

        try {
            if (keyword == "node") {
                std::string id;
                if (!(fields >> id)) fail("expected: node <hex16>");
                topo.add_node(Address::from_hex(id));
            } else if (keyword == "link") {
                std::string a, b, threshold_text;
                if (!(fields >> a >> b)) fail("expected: link <hex16> <hex16> [threshold]");
                double threshold = 0.5;
                if (fields >> threshold_text) {
                    std::size_t consumed = 0;
                    try {
                        threshold = std::stod(threshold_text, &consumed);
                    } catch (const std::exception&) {
                        consumed = 0;
                    }
                    if (consumed != threshold_text.size()) {
                        fail("threshold '" + threshold_text + "' is not a number");
                    }
                }
                topo.add_link(Address::from_hex(a), Address::from_hex(b), threshold);
            } else if (keyword == "route") {
                std::string at, dst, via_kw, via;
                if (!(fields >> at >> dst >> via_kw >> via) || via_kw != "via") {
                    fail("expected: route <hex16> <hex16> via <hex16>");
                }
                topo.add_route(Address::from_hex(at), Address::from_hex(dst),
                               Address::from_hex(via));
            } else {
                fail("unknown keyword '" + keyword + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(e.what());
        }

        std::string extra;
        if (fields >> extra) fail("trailing token '" + extra + "'");
    }
    return topo;
}

Topology Topology::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    try {
        return parse(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void set_phosphorylation(GapJunctionLink& link, double level) {
    if (!(level >= 0.0 && level <= 1.0)) {
        throw RangeError("phosphorylation level must lie in [0,1]");
    }
    link.phosphorylation = level;
}

std::set<std::uint32_t> switch_links(Topology& topo, Address node_id, Address dst) {
    CellNode& n = topo.node(node_id);
    std::set<std::uint32_t> selected;
    if (dst.is_broadcast()) {
        selected.insert(n.interfaces.begin(), n.interfaces.end());
    } else {
        auto it = n.routing.find(dst.value);
        if (it == n.routing.end() || it->second.empty()) {
            throw NoRouteError("node " + node_id.str() + " has no route to " + dst.str());
        }
        selected = it->second;
    }
    for (std::uint32_t iface : n.interfaces) {
        topo.link(iface).phosphorylation = selected.count(iface) ? 1.0 : 0.0;
    }
    return selected;
}

std::optional<Sequence> transmit(const Sequence& seq, const GapJunctionLink& link,
                                 const NoiseModel& noise, std::uint64_t stream_id) {
    noise.validate();
    if (!link.is_open()) return std::nullopt;
    if (noise.p_sub == 0 && noise.p_ins == 0 && noise.p_del == 0) return seq;

    RandomStream rng(noise.seed, stream_id);
    Sequence out;
    out.reserve(seq.size() + seq.size() / 16 + 4);
    for (Base b : seq) {
        const double u = rng.uniform01();
        if (u < noise.p_del) continue;
        if (u < noise.p_del + noise.p_sub) {
            out.push_back(rng.uniform_base_except(b));
        } else if (u < noise.p_del + noise.p_sub + noise.p_ins) {
            out.push_back(b);
            out.push_back(rng.uniform_base());
        } else {
            out.push_back(b);
        }
    }
    return out;
}

namespace {

struct TransitEvent {
    Address node;
    Sequence wire;
    std::size_t ordinal;  // index into the original frame list
    std::size_t hop;      // 0 at the origin
};

HopStats& stats_at(std::vector<HopStats>& hops, std::size_t hop) {
    while (hops.size() < hop) hops.emplace_back();
    return hops[hop - 1];
}

}  // namespace

DeliveryReport route_and_deliver(std::span<const stack::Frame> frames, Address src, Address dst,
                                 Topology& topo, const NoiseModel& noise) {
    noise.validate();
    if (!topo.has_node(src)) throw NoRouteError("source node " + src.str() + " not in topology");

    DeliveryReport report;
    std::deque<TransitEvent> queue;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        queue.push_back(TransitEvent{src, stack::serialize_frame(frames[i]), i, 0});
    }

    // Per (node, frame) flags keep floods finite and duplicate-free.
    std::set<std::pair<std::uint16_t, std::size_t>> forwarded;
    std::set<std::pair<std::uint16_t, std::size_t>> delivered;

    while (!queue.empty()) {
        TransitEvent ev = std::move(queue.front());
        queue.pop_front();

        if (ev.hop > 0) {
            const bool target = dst.is_broadcast() || ev.node == dst;
            if (target && !delivered.count({ev.node.value, ev.ordinal})) {
                try {
                    stack::Frame frame = stack::parse_frame(ev.wire);
                    report.delivered[ev.node.value].push_back(std::move(frame));
                    delivered.insert({ev.node.value, ev.ordinal});
                } catch (const Error&) {
                    stats_at(report.hops, ev.hop).dropped++;
                    continue;  // datalink header destroyed in transit
                }
            }
            if (!dst.is_broadcast() && ev.node == dst) continue;  // terminal delivery
        }

        if (forwarded.count({ev.node.value, ev.ordinal})) continue;
        forwarded.insert({ev.node.value, ev.ordinal});

        // The data-link layer repairs the frame before it travels on; the
        // network layer charges one TTL unit per forward.
        Sequence outgoing;
        if (ev.hop == 0) {
            outgoing = ev.wire;
        } else {
            try {
                stack::Frame frame = stack::parse_frame(ev.wire);
                std::size_t corrected = 0;
                Sequence packet = stack::ecc_decode(frame.body, frame.ecc, &corrected);
                if (stack::checksum8(packet) != frame.frame_checksum) {
                    throw ChecksumError("frame checksum mismatch");
                }
                const stack::NetworkHeader net = stack::parse_network_header(packet);
                if (corrected > 0) stats_at(report.hops, ev.hop).corrected++;
                if (net.ttl <= 1) {
                    stats_at(report.hops, ev.hop).dropped++;
                    continue;
                }
                packet = stack::packet_with_ttl(packet, static_cast<std::uint8_t>(net.ttl - 1));
                frame.body = stack::ecc_encode(packet, frame.ecc);
                frame.frame_checksum = stack::checksum8(packet);
                outgoing = stack::serialize_frame(frame);
            } catch (const Error&) {
                stats_at(report.hops, ev.hop).dropped++;
                continue;  // unrecoverable damage, discarded node-to-node
            }
        }

        const std::set<std::uint32_t> ifaces = switch_links(topo, ev.node, dst);
        for (std::uint32_t iface : ifaces) {
            const GapJunctionLink& link = topo.link(iface);
            const Address to = link.peer(ev.node);
            HopStats& st = stats_at(report.hops, ev.hop + 1);
            st.sent++;
            auto received = transmit(outgoing, link, noise,
                                     transmission_stream_id(ev.hop + 1, ev.ordinal, ev.node, to));
            if (!received) {
                st.dropped++;
                continue;
            }
            if (*received != outgoing) st.corrupted++;
            queue.push_back(TransitEvent{to, std::move(*received), ev.ordinal, ev.hop + 1});
        }
    }
    return report;
}

}  // namespace dnanet::channel
