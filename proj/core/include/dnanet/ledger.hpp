#ifndef DNANET_LEDGER_HPP
#define DNANET_LEDGER_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dnanet/sequence.hpp"

namespace dnanet::ledger {

constexpr std::size_t kDigestNt = 64;
constexpr std::size_t kConfirmationDepth = 6;

// One nucleotide-encoded block.
//
// Serialized layout (nt, MSB-first base-4 integers):
//   index(8) | prev_digest(64) | payload_len(8) | payload(4*payload_len) | nonce(16)
// payload_len counts bytes; the payload itself carries packed bytes.
struct DnaBlock {
    std::uint32_t index = 0;
    Sequence prev_digest;            // 64 nt; 64xA for the genesis block
    std::uint16_t payload_len = 0;   // bytes; 4*payload_len must equal payload.size()
    Sequence payload;
    std::uint32_t nonce = 0;

    bool operator==(const DnaBlock&) const = default;
};

struct DnaChain {
    std::vector<DnaBlock> blocks;
    std::size_t difficulty = 0;  // required count of leading A in every digest
};

// RangeError when a field exceeds its serialized width.
Sequence serialize_block(const DnaBlock& block);

// The payload extent comes from the record length (length - 96 nt), so a
// damaged payload_len field survives the round trip for validation to flag.
DnaBlock parse_block(const Sequence& seq);

// SHA-256 over the packed-byte serialization, truncated to 128 bits and
// re-encoded as 64 nt.
Sequence digest(const DnaBlock& block);

bool digest_meets_difficulty(const Sequence& dig, std::size_t difficulty);

// Smallest non-negative 32-bit nonce whose digest starts with `difficulty`
// copies of A (each worth 2 bits of work). RangeError when difficulty > 16;
// ExhaustedError if no 32-bit nonce satisfies it. attempts, when given,
// receives the number of nonces tried.
DnaBlock mine(std::uint32_t index, const Sequence& prev_digest, const Sequence& payload,
              std::size_t difficulty, std::uint64_t* attempts = nullptr);

struct Violation {
    std::size_t block;  // position in the chain
    std::string kind;   // genesis | index | linkage | pow | payload_len
    std::string detail;
};

// Violations are results, not errors; an empty list means Valid. Checks
// genesis form, consecutive indices, prev_digest linkage, the PoW prefix and
// payload_len consistency.
std::vector<Violation> validate_chain(const DnaChain& chain);

inline bool is_valid(const DnaChain& chain) { return validate_chain(chain).empty(); }

// Cell division: copies the serialized chain block by block, substituting
// each nucleotide with probability p_mut (seeded, deterministic).
DnaChain replicate(const DnaChain& chain, double p_mut, std::uint64_t seed);

// Mines and appends one block. ValidationError when the input chain is
// invalid: chains that fail the fitness test do not spread.
DnaChain extend(const DnaChain& chain, const Sequence& payload);

// Mines a fresh genesis-only chain at the given difficulty.
DnaChain genesis_chain(const Sequence& payload, std::size_t difficulty);

// Blocks with at least `depth` blocks above them; treated as immutable.
std::vector<DnaBlock> confirmed_prefix(const DnaChain& chain,
                                       std::size_t depth = kConfirmationDepth);

using ReplicaSet = std::map<std::uint16_t, DnaChain>;

// Survival of the fittest: among replicas that validate, the longest chain
// wins; ties break to the lexicographically smallest tip digest (A<C<G<T).
// Every replica is then overwritten with the winner. NoValidChainError when
// nothing validates; ConfirmationConflictError before any overwrite if the
// winner would rewrite a valid replica's confirmed prefix.
DnaChain resolve_fork(ReplicaSet& replicas, std::size_t depth = kConfirmationDepth);

// Chain files are FASTA-like, one record per block, headed `>block <index>`;
// the genesis record also carries `difficulty=<D>`.
void write_chain(std::ostream& out, const DnaChain& chain);
void write_chain_file(const std::string& path, const DnaChain& chain);
DnaChain read_chain(std::istream& in);
DnaChain read_chain_file(const std::string& path);

struct MiningStats {
    std::size_t difficulty = 0;
    std::uint64_t attempts = 0;
    double wall_ms = 0.0;
};

// Appends one row to a CSV of mining statistics, writing the header
// (difficulty,attempts,wall_ms) when the file is new.
void append_mining_stats(const std::string& path, const MiningStats& stats);

}  // namespace dnanet::ledger

#endif  // DNANET_LEDGER_HPP
