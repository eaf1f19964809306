#ifndef DNANET_STUFFING_HPP
#define DNANET_STUFFING_HPP

#include "dnanet/sequence.hpp"

namespace dnanet {

// True when some proper prefix of guard equals a proper suffix. Guards with
// a border would make stuffing ambiguous.
bool has_nontrivial_border(const Sequence& guard);

// Inserts one A after every left-to-right non-overlapping occurrence of
// guard, so payload data can never counterfeit a recognition site of the
// form guard + x for x != A. BorderError when guard is empty or bordered.
Sequence stuff(const Sequence& payload, const Sequence& guard);

// Removes the single nucleotide following each left-to-right non-overlapping
// occurrence of guard; exact inverse of stuff for the same guard.
// TruncationError when guard occurs at the very end with nothing after it.
Sequence destuff(const Sequence& stuffed, const Sequence& guard);

}  // namespace dnanet

#endif  // DNANET_STUFFING_HPP
