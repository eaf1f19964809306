#include "dnanet/ledger.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dnanet/fasta.hpp"
#include "dnanet/random.hpp"

namespace dnanet::ledger {

namespace {

constexpr std::size_t kIndexNt = 8;
constexpr std::size_t kPayloadLenNt = 8;
constexpr std::size_t kNonceNt = 16;
constexpr std::size_t kOverheadNt = kIndexNt + kDigestNt + kPayloadLenNt + kNonceNt;  // 96

const Sequence& genesis_prev_digest() {
    static const Sequence zero(std::vector<Base>(kDigestNt, Base::A));
    return zero;
}

}  // namespace

Sequence serialize_block(const DnaBlock& block) {
    if (block.index > 0xFFFF) {
        throw RangeError("block index " + std::to_string(block.index) +
                         " exceeds the 16-bit index field");
    }
    if (block.prev_digest.size() != kDigestNt) {
        throw RangeError("prev_digest must be exactly 64 nt");
    }
    if (block.payload.size() % 4 != 0 || block.payload.size() > 4u * 0xFFFF) {
        throw RangeError("payload must hold whole packed bytes, at most 65535 of them");
    }
    Sequence out;
    out.reserve(kOverheadNt + block.payload.size());
    append_uint(out, block.index, kIndexNt);
    out.append(block.prev_digest);
    append_uint(out, block.payload_len, kPayloadLenNt);
    out.append(block.payload);
    append_uint(out, block.nonce, kNonceNt);
    return out;
}

DnaBlock parse_block(const Sequence& seq) {
    if (seq.size() < kOverheadNt || (seq.size() - kOverheadNt) % 4 != 0) {
        throw ParseError("block record of " + std::to_string(seq.size()) +
                         " nt does not fit the block layout");
    }
    const std::size_t payload_nt = seq.size() - kOverheadNt;
    DnaBlock block;
    block.index = static_cast<std::uint32_t>(read_uint(seq, 0, kIndexNt));
    block.prev_digest = seq.subseq(kIndexNt, kDigestNt);
    block.payload_len =
        static_cast<std::uint16_t>(read_uint(seq, kIndexNt + kDigestNt, kPayloadLenNt));
    block.payload = seq.subseq(kIndexNt + kDigestNt + kPayloadLenNt, payload_nt);
    block.nonce = static_cast<std::uint32_t>(read_uint(seq, seq.size() - kNonceNt, kNonceNt));
    return block;
}

Sequence digest(const DnaBlock& block) {
    const std::vector<std::uint8_t> bytes = unpack_bytes(serialize_block(block));
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &md_len, EVP_sha256(), nullptr) != 1 ||
        md_len < 16) {
        throw Error("InternalError", "SHA-256 computation failed");
    }
    return pack_bytes(std::span<const std::uint8_t>(md, 16));
}

bool digest_meets_difficulty(const Sequence& dig, std::size_t difficulty) {
    if (difficulty > dig.size()) return false;
    for (std::size_t i = 0; i < difficulty; ++i) {
        if (dig[i] != Base::A) return false;
    }
    return true;
}

DnaBlock mine(std::uint32_t index, const Sequence& prev_digest, const Sequence& payload,
              std::size_t difficulty, std::uint64_t* attempts) {
    if (difficulty > 16) {
        throw RangeError("difficulty " + std::to_string(difficulty) + " exceeds the cap of 16");
    }
    DnaBlock block;
    block.index = index;
    block.prev_digest = prev_digest;
    block.payload_len = static_cast<std::uint16_t>(payload.size() / 4);
    block.payload = payload;
    for (std::uint64_t nonce = 0; nonce <= 0xFFFFFFFFULL; ++nonce) {
        block.nonce = static_cast<std::uint32_t>(nonce);
        if (digest_meets_difficulty(digest(block), difficulty)) {
            if (attempts) *attempts = nonce + 1;
            return block;
        }
    }
    throw ExhaustedError("no 32-bit nonce yields " + std::to_string(difficulty) + " leading A");
}

std::vector<Violation> validate_chain(const DnaChain& chain) {
    std::vector<Violation> violations;
    if (chain.blocks.empty()) {
        violations.push_back({0, "genesis", "chain has no blocks"});
        return violations;
    }

    const DnaBlock& genesis = chain.blocks.front();
    if (genesis.index != 0) {
        violations.push_back({0, "genesis", "genesis index is not 0"});
    }
    if (genesis.prev_digest != genesis_prev_digest()) {
        violations.push_back({0, "genesis", "genesis prev_digest is not 64xA"});
    }

    Sequence prev_dig;
    for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
        const DnaBlock& block = chain.blocks[i];
        if (i > 0) {
            if (block.index != chain.blocks[i - 1].index + 1) {
                violations.push_back({i, "index", "indices are not consecutive"});
            }
            if (block.prev_digest != prev_dig) {
                violations.push_back({i, "linkage", "prev_digest does not match previous block"});
            }
        }
        if (4u * block.payload_len != block.payload.size()) {
            violations.push_back(
                {i, "payload_len",
                 "payload_len " + std::to_string(block.payload_len) + " does not match payload of " +
                     std::to_string(block.payload.size()) + " nt"});
        }
        prev_dig = digest(block);
        if (!digest_meets_difficulty(prev_dig, chain.difficulty)) {
            violations.push_back({i, "pow", "digest lacks " + std::to_string(chain.difficulty) +
                                                " leading A"});
        }
    }
    return violations;
}

DnaChain replicate(const DnaChain& chain, double p_mut, std::uint64_t seed) {
    if (!(p_mut >= 0.0 && p_mut <= 1.0)) throw RangeError("p_mut must lie in [0,1]");
    RandomStream rng(seed);
    DnaChain copy;
    copy.difficulty = chain.difficulty;
    copy.blocks.reserve(chain.blocks.size());
    for (const DnaBlock& block : chain.blocks) {
        Sequence nt = serialize_block(block);
        for (std::size_t i = 0; i < nt.size(); ++i) {
            if (rng.uniform01() < p_mut) nt[i] = rng.uniform_base_except(nt[i]);
        }
        copy.blocks.push_back(parse_block(nt));
    }
    return copy;
}

DnaChain extend(const DnaChain& chain, const Sequence& payload) {
    const auto violations = validate_chain(chain);
    if (!violations.empty()) {
        throw ValidationError("refusing to extend an invalid chain: block " +
                              std::to_string(violations.front().block) + " " +
                              violations.front().kind + " (" + violations.front().detail + ")");
    }
    DnaChain out = chain;
    const DnaBlock& tip = chain.blocks.back();
    out.blocks.push_back(mine(tip.index + 1, digest(tip), payload, chain.difficulty));
    return out;
}

DnaChain genesis_chain(const Sequence& payload, std::size_t difficulty) {
    DnaChain chain;
    chain.difficulty = difficulty;
    chain.blocks.push_back(mine(0, genesis_prev_digest(), payload, difficulty));
    return chain;
}

std::vector<DnaBlock> confirmed_prefix(const DnaChain& chain, std::size_t depth) {
    std::vector<DnaBlock> prefix;
    if (chain.blocks.size() > depth) {
        prefix.assign(chain.blocks.begin(),
                      chain.blocks.end() - static_cast<std::ptrdiff_t>(depth));
    }
    return prefix;
}

DnaChain resolve_fork(ReplicaSet& replicas, std::size_t depth) {
    std::vector<std::uint16_t> valid_ids;
    for (const auto& [id, chain] : replicas) {
        if (is_valid(chain)) valid_ids.push_back(id);
    }
    if (valid_ids.empty()) {
        throw NoValidChainError("no replica passes validation");
    }

    const DnaChain* winner = &replicas.at(valid_ids.front());
    Sequence winner_tip = digest(winner->blocks.back());
    for (std::size_t i = 1; i < valid_ids.size(); ++i) {
        const DnaChain& chain = replicas.at(valid_ids[i]);
        Sequence tip = digest(chain.blocks.back());
        const bool better =
            chain.blocks.size() > winner->blocks.size() ||
            (chain.blocks.size() == winner->blocks.size() &&
             std::lexicographical_compare(tip.bases().begin(), tip.bases().end(),
                                          winner_tip.bases().begin(), winner_tip.bases().end()));
        if (better) {
            winner = &chain;
            winner_tip = std::move(tip);
        }
    }

    // Six-confirmation immutability: check every valid replica before
    // touching any of them.
    for (std::uint16_t id : valid_ids) {
        const DnaChain& chain = replicas.at(id);
        const std::vector<DnaBlock> prefix = confirmed_prefix(chain, depth);
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (i >= winner->blocks.size() || winner->blocks[i] != prefix[i]) {
                throw ConfirmationConflictError(
                    "winner conflicts with replica " + std::to_string(id) +
                    " at confirmed block " + std::to_string(i));
            }
        }
    }

    const DnaChain result = *winner;
    for (auto& [id, chain] : replicas) chain = result;
    return result;
}

void write_chain(std::ostream& out, const DnaChain& chain) {
    std::vector<FastaRecord> records;
    records.reserve(chain.blocks.size());
    for (std::size_t i = 0; i < chain.blocks.size(); ++i) {
        std::string header = "block " + std::to_string(chain.blocks[i].index);
        if (i == 0) header += " difficulty=" + std::to_string(chain.difficulty);
        records.push_back(FastaRecord{std::move(header), serialize_block(chain.blocks[i])});
    }
    write_fasta(out, records);
}

void write_chain_file(const std::string& path, const DnaChain& chain) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_chain(out, chain);
    if (!out) throw IoError("failed writing " + path);
}

DnaChain read_chain(std::istream& in) {
    DnaChain chain;
    for (const FastaRecord& record : read_fasta(in)) {
        std::istringstream header(record.header);
        std::string keyword;
        header >> keyword;
        if (keyword != "block") {
            throw ParseError("chain record header '" + record.header +
                             "' does not start with 'block'");
        }
        std::string token;
        header >> token;  // index, informational only
        while (header >> token) {
            if (token.rfind("difficulty=", 0) == 0) {
                chain.difficulty = static_cast<std::size_t>(std::stoul(token.substr(11)));
            }
        }
        chain.blocks.push_back(parse_block(record.sequence));
    }
    return chain;
}

DnaChain read_chain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    try {
        return read_chain(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void append_mining_stats(const std::string& path, const MiningStats& stats) {
    const bool fresh = !std::ifstream(path).good();
    std::ofstream out(path, std::ios::app);
    if (!out) throw IoError("cannot open " + path + " for appending");
    if (fresh) out << "difficulty,attempts,wall_ms\n";
    out << stats.difficulty << ',' << stats.attempts << ',' << stats.wall_ms << '\n';
}

}  // namespace dnanet::ledger
