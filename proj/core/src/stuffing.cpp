#include "dnanet/stuffing.hpp"

#include <algorithm>

namespace dnanet {

namespace {

bool matches_at(const Sequence& text, std::size_t pos, const Sequence& pattern) {
    if (pos + pattern.size() > text.size()) return false;
    return std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(pos));
}

void require_usable_guard(const Sequence& guard) {
    if (guard.empty()) throw BorderError("stuffing guard must be non-empty");
    if (has_nontrivial_border(guard)) {
        throw BorderError("guard " + guard.str() + " has a nontrivial border");
    }
}

}  // namespace

bool has_nontrivial_border(const Sequence& guard) {
    const auto& g = guard.bases();
    for (std::size_t len = 1; len < g.size(); ++len) {
        if (std::equal(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(len),
                       g.end() - static_cast<std::ptrdiff_t>(len))) {
            return true;
        }
    }
    return false;
}

Sequence stuff(const Sequence& payload, const Sequence& guard) {
    require_usable_guard(guard);
    Sequence out;
    out.reserve(payload.size() + payload.size() / guard.size() + 1);
    std::size_t i = 0;
    while (i < payload.size()) {
        if (matches_at(payload, i, guard)) {
            out.append(guard);
            out.push_back(Base::A);
            i += guard.size();
        } else {
            out.push_back(payload[i]);
            ++i;
        }
    }
    return out;
}

Sequence destuff(const Sequence& stuffed, const Sequence& guard) {
    require_usable_guard(guard);
    Sequence out;
    out.reserve(stuffed.size());
    std::size_t i = 0;
    while (i < stuffed.size()) {
        if (matches_at(stuffed, i, guard)) {
            out.append(guard);
            i += guard.size();
            if (i == stuffed.size()) {
                throw TruncationError("guard at end of input with no stuffed nucleotide after it");
            }
            ++i;  // drop the inserted nucleotide
        } else {
            out.push_back(stuffed[i]);
            ++i;
        }
    }
    return out;
}

}  // namespace dnanet
