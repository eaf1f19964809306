#ifndef DNANET_ENZYME_HPP
#define DNANET_ENZYME_HPP

#include <cstddef>
#include <vector>

#include "dnanet/sequence.hpp"

namespace dnanet {

// A restriction enzyme: recognition site plus the offset within the site
// where the strand is cleaved. Cuts are blunt single-strand splits.
class EnzymeSpec {
public:
    // site must be at least 4 nt; cut_offset must lie in [0, site.size()].
    // Throws ConfigError otherwise.
    EnzymeSpec(Sequence site, std::size_t cut_offset);

    const Sequence& site() const noexcept { return site_; }
    std::size_t cut_offset() const noexcept { return cut_offset_; }

    // EcoRI-like default: site GAATTC, cut offset 1. Its 5-nt stuffing guard
    // GAATT is border-free.
    static EnzymeSpec ecori();

    bool operator==(const EnzymeSpec&) const = default;

private:
    Sequence site_;
    std::size_t cut_offset_;
};

// All start indices of the recognition site, scanned left to right with
// non-overlapping restart (after a match the scan resumes past the site).
std::vector<std::size_t> find_sites(const Sequence& seq, const EnzymeSpec& enzyme);

// Splits seq at site_start + cut_offset for every found site. Ligating the
// fragments in order reproduces seq exactly; fragments may be empty when a
// cut lands on a sequence end.
std::vector<Sequence> cut(const Sequence& seq, const EnzymeSpec& enzyme);

}  // namespace dnanet

#endif  // DNANET_ENZYME_HPP
