#include "dnanet/fasta.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace dnanet {

std::vector<FastaRecord> read_fasta(std::istream& in) {
    std::vector<FastaRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            records.push_back(FastaRecord{line.substr(1), Sequence{}});
            continue;
        }
        if (records.empty()) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": sequence data before the first '>' header");
        }
        if (line.size() > 80) {
            throw ParseError("line " + std::to_string(line_no) + ": sequence line of " +
                             std::to_string(line.size()) + " chars exceeds the 80-char limit");
        }
        for (std::size_t col = 0; col < line.size(); ++col) {
            const char c = line[col];
            switch (c) {
                case 'A': records.back().sequence.push_back(Base::A); break;
                case 'C': records.back().sequence.push_back(Base::C); break;
                case 'G': records.back().sequence.push_back(Base::G); break;
                case 'T': records.back().sequence.push_back(Base::T); break;
                default:
                    throw ParseError("line " + std::to_string(line_no) + ", column " +
                                     std::to_string(col + 1) + ": invalid character '" +
                                     std::string(1, c) + "'");
            }
        }
    }
    return records;
}

std::vector<FastaRecord> read_fasta_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    try {
        return read_fasta(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_fasta(std::ostream& out, const std::vector<FastaRecord>& records,
                 std::size_t line_width) {
    for (const auto& record : records) {
        out << '>' << record.header << '\n';
        const std::string text = record.sequence.str();
        for (std::size_t pos = 0; pos < text.size(); pos += line_width) {
            out << text.substr(pos, line_width) << '\n';
        }
    }
}

void write_fasta_file(const std::string& path, const std::vector<FastaRecord>& records,
                      std::size_t line_width) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_fasta(out, records, line_width);
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace dnanet
