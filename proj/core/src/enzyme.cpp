#include "dnanet/enzyme.hpp"

#include <algorithm>

namespace dnanet {

EnzymeSpec::EnzymeSpec(Sequence site, std::size_t cut_offset)
    : site_(std::move(site)), cut_offset_(cut_offset) {
    if (site_.size() < 4) {
        throw ConfigError("recognition site must be at least 4 nt, got " +
                          std::to_string(site_.size()));
    }
    if (cut_offset_ > site_.size()) {
        throw ConfigError("cut offset " + std::to_string(cut_offset_) +
                          " outside recognition site of " + std::to_string(site_.size()) + " nt");
    }
}

EnzymeSpec EnzymeSpec::ecori() { return EnzymeSpec(Sequence::from_string("GAATTC"), 1); }

std::vector<std::size_t> find_sites(const Sequence& seq, const EnzymeSpec& enzyme) {
    const auto& site = enzyme.site().bases();
    const auto& text = seq.bases();
    std::vector<std::size_t> hits;
    if (site.size() > text.size()) return hits;

    auto it = text.begin();
    while (true) {
        it = std::search(it, text.end(), site.begin(), site.end());
        if (it == text.end()) break;
        hits.push_back(static_cast<std::size_t>(it - text.begin()));
        it += static_cast<std::ptrdiff_t>(site.size());  // non-overlapping restart
    }
    return hits;
}

std::vector<Sequence> cut(const Sequence& seq, const EnzymeSpec& enzyme) {
    std::vector<Sequence> fragments;
    std::size_t start = 0;
    for (std::size_t hit : find_sites(seq, enzyme)) {
        const std::size_t split = hit + enzyme.cut_offset();
        fragments.push_back(seq.subseq(start, split - start));
        start = split;
    }
    fragments.push_back(seq.subseq(start, seq.size() - start));
    return fragments;
}

}  // namespace dnanet
