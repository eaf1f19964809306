#ifndef DNANET_FASTA_HPP
#define DNANET_FASTA_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dnanet/sequence.hpp"

namespace dnanet {

// FASTA-like record: a '>' header line followed by sequence lines of
// uppercase ACGT, at most 80 characters each.
struct FastaRecord {
    std::string header;  // text after '>', without the marker
    Sequence sequence;
};

// Rejects any character outside uppercase ACGT on sequence lines, over-long
// lines, and data before the first header; ParseError reports line and
// column (both 1-based).
std::vector<FastaRecord> read_fasta(std::istream& in);
std::vector<FastaRecord> read_fasta_file(const std::string& path);

void write_fasta(std::ostream& out, const std::vector<FastaRecord>& records,
                 std::size_t line_width = 80);
void write_fasta_file(const std::string& path, const std::vector<FastaRecord>& records,
                      std::size_t line_width = 80);

}  // namespace dnanet

#endif  // DNANET_FASTA_HPP
