// dnanet: encode/decode byte payloads through the nucleotide protocol stack,
// push frames through a gap-junction cell network, and drive the DNA ledger.
// Everything is seed-deterministic; stdout carries only data and CSV,
// diagnostics go to stderr.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dnanet/channel.hpp"
#include "dnanet/codon.hpp"
#include "dnanet/fasta.hpp"
#include "dnanet/ledger.hpp"
#include "dnanet/stack.hpp"
#include "dnanet/stuffing.hpp"

namespace {

using dnanet::Sequence;
namespace stack = dnanet::stack;
namespace channel = dnanet::channel;
namespace ledger = dnanet::ledger;

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dnanet::IoError("cannot open " + path + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dnanet::IoError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw dnanet::IoError("failed writing " + path);
}

std::vector<std::uint8_t> to_bytes(const std::string& text) {
    return std::vector<std::uint8_t>(text.begin(), text.end());
}

// Options shared by the stack-facing commands.
struct StackOptions {
    std::string src = "0001";
    std::string dst = "0002";
    std::string ecc = "triple";
    std::size_t segment_size = 512;
    std::uint32_t app_id = 1;
    std::uint32_t session_id = 1;
    std::uint32_t ttl = 16;
    bool codon_view = false;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--src", src, "source address, 4 hex digits")->capture_default_str();
        cmd->add_option("--dst", dst, "destination address, 4 hex digits (ffff = broadcast)")
            ->capture_default_str();
        cmd->add_option("--ecc", ecc, "data-link redundancy: none or triple")
            ->check(CLI::IsMember({"none", "triple"}))
            ->capture_default_str();
        cmd->add_option("--segment-size", segment_size, "max transport segment payload in nt")
            ->capture_default_str();
        cmd->add_option("--app-id", app_id, "application header id")->capture_default_str();
        cmd->add_option("--session-id", session_id, "session header id")->capture_default_str();
        cmd->add_option("--ttl", ttl, "network header time-to-live")->capture_default_str();
        cmd->add_flag("--codon-view", codon_view,
                      "presentation mode codon_view: print the amino-acid view on stderr");
    }

    stack::StackConfig to_config() const {
        stack::StackConfig cfg;
        cfg.src_addr = stack::Address::from_hex(src);
        cfg.dst_addr = stack::Address::from_hex(dst);
        cfg.ecc = ecc == "none" ? stack::EccMode::none : stack::EccMode::triple;
        cfg.max_segment_payload = segment_size;
        cfg.app_id = static_cast<std::uint16_t>(app_id);
        cfg.session_id = session_id;
        cfg.ttl = static_cast<std::uint8_t>(ttl);
        cfg.presentation =
            codon_view ? stack::PresentationMode::codon_view : stack::PresentationMode::raw;
        return cfg;
    }

    std::string describe() const {
        std::ostringstream os;
        os << "src=" << src << " dst=" << dst << " ecc=" << ecc
           << " segment-size=" << segment_size << " app-id=" << app_id
           << " session-id=" << session_id << " ttl=" << ttl
           << " codon-view=" << (codon_view ? "true" : "false");
        return os.str();
    }
};

struct NoiseOptions {
    double p_sub = 0.0;
    double p_ins = 0.0;
    double p_del = 0.0;
    std::uint64_t seed = 0;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--p-sub", p_sub, "per-nt substitution probability")
            ->capture_default_str();
        cmd->add_option("--p-ins", p_ins, "per-nt insertion probability")->capture_default_str();
        cmd->add_option("--p-del", p_del, "per-nt deletion probability")->capture_default_str();
        cmd->add_option("--seed", seed, "noise stream seed")->capture_default_str();
    }

    channel::NoiseModel to_model() const { return channel::NoiseModel{p_sub, p_ins, p_del, seed}; }

    std::string describe() const {
        std::ostringstream os;
        os << "p-sub=" << p_sub << " p-ins=" << p_ins << " p-del=" << p_del << " seed=" << seed;
        return os.str();
    }
};

// Reproducibility header: every effective option, defaults included.
void print_run_header(const std::string& command, const std::string& options) {
    std::cerr << "# dnanet " << command << ' ' << options << '\n';
}

std::vector<dnanet::FastaRecord> frames_to_records(const std::vector<stack::Frame>& frames) {
    std::vector<dnanet::FastaRecord> records;
    records.reserve(frames.size());
    for (std::size_t i = 0; i < frames.size(); ++i) {
        records.push_back(
            dnanet::FastaRecord{"frame " + std::to_string(i), stack::serialize_frame(frames[i])});
    }
    return records;
}

std::vector<stack::Frame> records_to_frames(const std::vector<dnanet::FastaRecord>& records) {
    std::vector<stack::Frame> frames;
    frames.reserve(records.size());
    for (const auto& record : records) {
        frames.push_back(stack::parse_frame(record.sequence));
    }
    return frames;
}

void maybe_print_codon_view(const stack::StackConfig& cfg,
                            const std::vector<std::uint8_t>& payload) {
    if (cfg.presentation != stack::PresentationMode::codon_view) return;
    std::cerr << "# codon view: " << stack::codon_view(dnanet::pack_bytes(payload)) << '\n';
}

int cmd_encode(const StackOptions& opts, const std::string& in_path, const std::string& out_path) {
    print_run_header("encode", opts.describe() + " in=" + in_path +
                                   " out=" + (out_path.empty() ? "-" : out_path));
    const auto payload = read_file_bytes(in_path);
    const stack::StackConfig cfg = opts.to_config();
    const auto frames = stack::encode_message(payload, cfg);
    maybe_print_codon_view(cfg, payload);
    const auto records = frames_to_records(frames);
    if (out_path.empty()) {
        dnanet::write_fasta(std::cout, records);
    } else {
        dnanet::write_fasta_file(out_path, records);
    }
    std::cerr << "# encoded " << payload.size() << " bytes into " << frames.size() << " frames\n";
    return 0;
}

int cmd_decode(const StackOptions& opts, const std::string& in_path, const std::string& out_path) {
    print_run_header("decode", opts.describe() + " in=" + in_path +
                                   " out=" + (out_path.empty() ? "-" : out_path));
    const auto frames = records_to_frames(dnanet::read_fasta_file(in_path));
    const auto payload = stack::decode_message(frames, opts.to_config());
    if (out_path.empty()) {
        std::cout.write(reinterpret_cast<const char*>(payload.data()),
                        static_cast<std::streamsize>(payload.size()));
    } else {
        write_file_bytes(out_path, payload);
    }
    std::cerr << "# decoded " << frames.size() << " frames into " << payload.size() << " bytes\n";
    return 0;
}

void print_hop_stats(std::ostream& out, const std::vector<channel::HopStats>& hops) {
    out << "hop,sent,corrupted,corrected,dropped\n";
    for (std::size_t i = 0; i < hops.size(); ++i) {
        out << (i + 1) << ',' << hops[i].sent << ',' << hops[i].corrupted << ','
            << hops[i].corrected << ',' << hops[i].dropped << '\n';
    }
}

int cmd_send(const StackOptions& stack_opts, const NoiseOptions& noise_opts,
             const std::string& topology_path, const std::string& in_path,
             const std::string& payload_text, const std::string& out_path,
             const std::string& stats_csv) {
    print_run_header("send", stack_opts.describe() + ' ' + noise_opts.describe() +
                                 " topology=" + topology_path);
    if (in_path.empty() == payload_text.empty()) {
        throw dnanet::ConfigError("send needs exactly one of --in or --payload");
    }
    const std::vector<std::uint8_t> payload =
        in_path.empty() ? to_bytes(payload_text) : read_file_bytes(in_path);

    const stack::StackConfig cfg = stack_opts.to_config();
    channel::Topology topo = channel::Topology::load(topology_path);
    const auto frames = stack::encode_message(payload, cfg);
    maybe_print_codon_view(cfg, payload);

    const channel::DeliveryReport report =
        channel::route_and_deliver(frames, cfg.src_addr, cfg.dst_addr, topo, noise_opts.to_model());

    std::ostringstream csv;
    print_hop_stats(csv, report.hops);
    csv << "\nnode,recovered,received,corrected,payload_bytes\n";

    bool all_recovered = !report.delivered.empty();
    bool wrote_out = false;
    for (const auto& [node_value, delivered_frames] : report.delivered) {
        std::size_t corrected = 0;
        for (const auto& frame : delivered_frames) {
            std::size_t triples = 0;
            try {
                stack::ecc_decode(frame.body, frame.ecc, &triples);
            } catch (const dnanet::Error&) {
                triples = 0;
            }
            if (triples > 0) ++corrected;
        }
        std::string recovered = "false";
        std::size_t decoded_bytes = 0;
        try {
            const auto decoded = stack::decode_message(delivered_frames, cfg);
            if (decoded == payload) recovered = "true";
            decoded_bytes = decoded.size();
            if (!out_path.empty() && !wrote_out && recovered == "true") {
                write_file_bytes(out_path, decoded);
                wrote_out = true;
            }
        } catch (const dnanet::Error& e) {
            std::cerr << "# node " << stack::Address{node_value}.str() << " decode failed: "
                      << e.what() << '\n';
        }
        if (recovered != "true") all_recovered = false;
        csv << stack::Address{node_value}.str() << ',' << recovered << ','
            << delivered_frames.size() << ',' << corrected << ',' << decoded_bytes << '\n';
    }
    if (report.delivered.empty()) {
        csv << cfg.dst_addr.str() << ",false,0,0,0\n";
    }

    std::cout << csv.str();
    if (!stats_csv.empty()) {
        std::ofstream f(stats_csv);
        if (!f) throw dnanet::IoError("cannot open " + stats_csv + " for writing");
        f << csv.str();
    }
    return all_recovered ? 0 : 1;
}

Sequence payload_sequence(const std::string& text) { return dnanet::pack_bytes(to_bytes(text)); }

void print_block_row(std::ostream& out, const ledger::DnaBlock& block, std::uint64_t attempts) {
    out << block.index << ',' << block.nonce << ',' << attempts << ','
        << ledger::digest(block).str() << '\n';
}

int cmd_chain_init(const std::string& out_path, std::size_t difficulty,
                   const std::string& payload_text) {
    print_run_header("chain init", "out=" + out_path + " difficulty=" +
                                       std::to_string(difficulty) + " payload=" + payload_text);
    std::uint64_t attempts = 0;
    ledger::DnaChain chain;
    chain.difficulty = difficulty;
    chain.blocks.push_back(ledger::mine(0, Sequence(std::vector<dnanet::Base>(64, dnanet::Base::A)),
                                        payload_sequence(payload_text), difficulty, &attempts));
    ledger::write_chain_file(out_path, chain);
    std::cout << "index,nonce,attempts,digest\n";
    print_block_row(std::cout, chain.blocks.back(), attempts);
    return 0;
}

int cmd_chain_mine(const std::string& chain_path, const std::string& out_path,
                   const std::string& payload_text, const std::string& stats_csv) {
    print_run_header("chain mine", "chain=" + chain_path + " payload=" + payload_text);
    ledger::DnaChain chain = ledger::read_chain_file(chain_path);
    const auto violations = ledger::validate_chain(chain);
    if (!violations.empty()) {
        throw dnanet::ValidationError("refusing to extend an invalid chain (block " +
                                      std::to_string(violations.front().block) + " " +
                                      violations.front().kind + ")");
    }
    std::uint64_t attempts = 0;
    const auto start = std::chrono::steady_clock::now();
    const ledger::DnaBlock& tip = chain.blocks.back();
    ledger::DnaBlock block = ledger::mine(tip.index + 1, ledger::digest(tip),
                                          payload_sequence(payload_text), chain.difficulty,
                                          &attempts);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    chain.blocks.push_back(block);
    ledger::write_chain_file(out_path.empty() ? chain_path : out_path, chain);
    if (!stats_csv.empty()) {
        ledger::append_mining_stats(stats_csv, {chain.difficulty, attempts, wall_ms});
    }
    std::cout << "index,nonce,attempts,digest\n";
    print_block_row(std::cout, block, attempts);
    return 0;
}

int cmd_chain_validate(const std::string& chain_path) {
    print_run_header("chain validate", "chain=" + chain_path);
    const ledger::DnaChain chain = ledger::read_chain_file(chain_path);
    const auto violations = ledger::validate_chain(chain);
    std::cout << "block,kind,detail\n";
    for (const auto& v : violations) {
        std::cout << v.block << ',' << v.kind << ",\"" << v.detail << "\"\n";
    }
    std::cerr << "# chain of " << chain.blocks.size() << " blocks, difficulty "
              << chain.difficulty << ": " << (violations.empty() ? "valid" : "INVALID") << '\n';
    return violations.empty() ? 0 : 1;
}

int cmd_chain_replicate(const std::string& chain_path, const std::string& out_path, double p_mut,
                        std::uint64_t seed) {
    print_run_header("chain replicate", "chain=" + chain_path + " out=" + out_path +
                                            " p-mut=" + std::to_string(p_mut) +
                                            " seed=" + std::to_string(seed));
    const ledger::DnaChain chain = ledger::read_chain_file(chain_path);
    const ledger::DnaChain copy = ledger::replicate(chain, p_mut, seed);
    ledger::write_chain_file(out_path, copy);
    std::size_t mutated = 0;
    for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
        if (!(copy.blocks[i] == chain.blocks[i])) ++mutated;
    }
    std::cout << "blocks,mutated_blocks,valid\n";
    std::cout << copy.blocks.size() << ',' << mutated << ','
              << (ledger::is_valid(copy) ? "true" : "false") << '\n';
    return 0;
}

int cmd_chain_resolve(const std::vector<std::string>& replica_paths, const std::string& out_path) {
    print_run_header("chain resolve", "replicas=" + std::to_string(replica_paths.size()) +
                                          " out=" + out_path);
    ledger::ReplicaSet replicas;
    std::vector<ledger::DnaChain> originals;
    for (std::size_t i = 0; i < replica_paths.size(); ++i) {
        originals.push_back(ledger::read_chain_file(replica_paths[i]));
        replicas[static_cast<std::uint16_t>(i)] = originals.back();
    }
    const ledger::DnaChain winner = ledger::resolve_fork(replicas);
    ledger::write_chain_file(out_path, winner);
    // Resolution overwrites every replica with the winner.
    for (const auto& path : replica_paths) {
        ledger::write_chain_file(path, winner);
    }
    std::cout << "path,length,valid,winner\n";
    for (std::size_t i = 0; i < replica_paths.size(); ++i) {
        std::cout << replica_paths[i] << ',' << originals[i].blocks.size() << ','
                  << (ledger::is_valid(originals[i]) ? "true" : "false") << ','
                  << (originals[i].blocks == winner.blocks ? "true" : "false") << '\n';
    }
    std::cerr << "# winner: " << winner.blocks.size() << " blocks, tip digest "
              << ledger::digest(winner.blocks.back()).str() << '\n';
    return 0;
}

int run_demo(std::uint64_t seed) {
    print_run_header("demo", "seed=" + std::to_string(seed));
    std::cout << "== stack over a 3-cell chain ==\n";

    channel::Topology topo;
    const stack::Address n1{0x0001}, n2{0x0002}, n3{0x0003};
    topo.add_node(n1);
    topo.add_node(n2);
    topo.add_node(n3);
    topo.add_link(n1, n2);
    topo.add_link(n2, n3);
    topo.add_route(n1, n3, n2);
    topo.add_route(n2, n3, n3);
    topo.add_route(n3, n1, n2);
    topo.add_route(n2, n1, n1);

    const std::string message = "HELLO DNA NETWORK";
    stack::StackConfig cfg;
    cfg.src_addr = n1;
    cfg.dst_addr = n3;
    cfg.ecc = stack::EccMode::triple;

    const auto payload = to_bytes(message);
    const auto frames = stack::encode_message(payload, cfg);
    std::cout << "payload bytes: " << payload.size() << ", frames: " << frames.size() << '\n';
    std::cout << "codon view: " << stack::codon_view(dnanet::pack_bytes(payload)) << '\n';

    channel::NoiseModel noise{0.002, 0.0, 0.0, seed};
    auto report = channel::route_and_deliver(frames, n1, n3, topo, noise);
    for (std::size_t i = 0; i < report.hops.size(); ++i) {
        std::cout << "hop " << (i + 1) << ": sent=" << report.hops[i].sent
                  << " corrupted=" << report.hops[i].corrupted
                  << " corrected=" << report.hops[i].corrected
                  << " dropped=" << report.hops[i].dropped << '\n';
    }
    const auto decoded = stack::decode_message(report.delivered.at(n3.value), cfg);
    std::cout << "recovered at " << n3.str() << ": \""
              << std::string(decoded.begin(), decoded.end()) << "\"\n";

    std::cout << "\n== ledger fork and resolution ==\n";
    const std::size_t difficulty = 2;
    ledger::DnaChain base = ledger::genesis_chain(payload_sequence("genesis"), difficulty);
    base = ledger::extend(base, payload_sequence("tx 1"));
    base = ledger::extend(base, payload_sequence("tx 2"));

    ledger::ReplicaSet replicas;
    replicas[1] = ledger::extend(base, payload_sequence("tx alpha"));
    replicas[2] = ledger::extend(base, payload_sequence("tx beta"));
    replicas[3] = ledger::replicate(base, 0.02, seed + 1);

    for (const auto& [id, chain] : replicas) {
        std::cout << "replica " << id << ": " << chain.blocks.size() << " blocks, "
                  << (ledger::is_valid(chain) ? "valid" : "INVALID (mutations)") << '\n';
    }
    const ledger::DnaChain winner = ledger::resolve_fork(replicas);
    std::cout << "winner: " << winner.blocks.size() << " blocks, tip digest "
              << ledger::digest(winner.blocks.back()).str() << '\n';
    bool all_equal = true;
    for (const auto& [id, chain] : replicas) {
        if (!(chain.blocks == winner.blocks)) all_equal = false;
    }
    std::cout << "replicas converged: " << (all_equal ? "true" : "false") << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nucleotide protocol stack, gap-junction network and DNA ledger simulator"};
    app.require_subcommand(0, 1);

    bool demo = false;
    std::uint64_t demo_seed = 42;
    app.add_flag("--demo", demo, "run the full pipeline demo and exit");
    app.add_option("--seed", demo_seed, "demo seed")->capture_default_str();

    int rc = 0;

    // encode
    auto* encode = app.add_subcommand("encode", "encode a byte file into FASTA frame records");
    StackOptions encode_opts;
    std::string encode_in, encode_out;
    encode_opts.add_flags(encode);
    encode->add_option("--in", encode_in, "input byte file")->required();
    encode->add_option("--out", encode_out, "output FASTA file (default stdout)");
    encode->callback([&] { rc = cmd_encode(encode_opts, encode_in, encode_out); });

    // decode
    auto* decode = app.add_subcommand("decode", "decode FASTA frame records back into bytes");
    StackOptions decode_opts;
    std::string decode_in, decode_out;
    decode_opts.add_flags(decode);
    decode->add_option("--in", decode_in, "input FASTA file")->required();
    decode->add_option("--out", decode_out, "output byte file (default stdout)");
    decode->callback([&] { rc = cmd_decode(decode_opts, decode_in, decode_out); });

    // send
    auto* send = app.add_subcommand("send", "encode, route through a topology, decode at dst");
    StackOptions send_opts;
    NoiseOptions send_noise;
    std::string send_topology, send_in, send_payload, send_out, send_stats;
    send_opts.add_flags(send);
    send_noise.add_flags(send);
    send->add_option("--topology", send_topology, "topology file")->required();
    send->add_option("--in", send_in, "payload byte file");
    send->add_option("--payload", send_payload, "payload text (alternative to --in)");
    send->add_option("--out", send_out, "write the recovered payload here");
    send->add_option("--stats-csv", send_stats, "also write the stats CSV here");
    send->callback([&] {
        rc = cmd_send(send_opts, send_noise, send_topology, send_in, send_payload, send_out,
                      send_stats);
    });

    // chain
    auto* chain = app.add_subcommand("chain", "DNA ledger operations");
    chain->require_subcommand(1);

    auto* init = chain->add_subcommand("init", "mine a genesis chain");
    std::string init_out, init_payload = "genesis";
    std::size_t init_difficulty = 2;
    init->add_option("--out", init_out, "chain file to write")->required();
    init->add_option("--difficulty", init_difficulty, "required leading A count")
        ->capture_default_str();
    init->add_option("--payload", init_payload, "genesis payload text")->capture_default_str();
    init->callback([&] { rc = cmd_chain_init(init_out, init_difficulty, init_payload); });

    auto* mine = chain->add_subcommand("mine", "mine and append one block");
    std::string mine_chain, mine_out, mine_payload, mine_stats;
    mine->add_option("--chain", mine_chain, "chain file")->required();
    mine->add_option("--out", mine_out, "output file (default: rewrite --chain)");
    mine->add_option("--payload", mine_payload, "block payload text")->required();
    mine->add_option("--stats-csv", mine_stats, "append difficulty,attempts,wall_ms here");
    mine->callback([&] { rc = cmd_chain_mine(mine_chain, mine_out, mine_payload, mine_stats); });

    auto* validate = chain->add_subcommand("validate", "list violations, exit 1 if any");
    std::string validate_chain_path;
    validate->add_option("--chain", validate_chain_path, "chain file")->required();
    validate->callback([&] { rc = cmd_chain_validate(validate_chain_path); });

    auto* replicate = chain->add_subcommand("replicate", "copy a chain with seeded mutations");
    std::string repl_chain, repl_out;
    double repl_p_mut = 0.0;
    std::uint64_t repl_seed = 0;
    replicate->add_option("--chain", repl_chain, "chain file")->required();
    replicate->add_option("--out", repl_out, "mutated copy file")->required();
    replicate->add_option("--p-mut", repl_p_mut, "per-nt mutation probability")
        ->capture_default_str();
    replicate->add_option("--seed", repl_seed, "mutation stream seed")->capture_default_str();
    replicate->callback([&] { rc = cmd_chain_replicate(repl_chain, repl_out, repl_p_mut, repl_seed); });

    auto* resolve = chain->add_subcommand("resolve", "survival of the fittest across replicas");
    std::vector<std::string> resolve_replicas;
    std::string resolve_out;
    resolve->add_option("replicas", resolve_replicas, "replica chain files")
        ->required()
        ->expected(-1);
    resolve->add_option("--out", resolve_out, "winner chain file")->required();
    resolve->callback([&] { rc = cmd_chain_resolve(resolve_replicas, resolve_out); });

    try {
        app.parse(argc, argv);
        if (app.get_subcommands().empty()) {
            if (demo) {
                rc = run_demo(demo_seed);
            } else {
                std::cerr << app.help();
                return 2;
            }
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const dnanet::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: InternalError: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
