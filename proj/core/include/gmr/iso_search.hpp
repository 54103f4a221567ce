#pragma once

#include <vector>

#include "gmr/finring.hpp"

namespace gmr {

struct IsoSearchOptions {
    std::uint32_t bound = 256;  // largest carrier the exhaustive search will accept
};

/// The complete set of ring isomorphisms source -> target, found by
/// backtracking over additive generator images (1 -> 1 forced, equal additive
/// order, reject on first multiplicative violation). Deterministic order:
/// lexicographic in the generator image vectors. Returns an empty list when
/// the carriers have different sizes; throws SearchBoundExceeded above the
/// configured bound.
std::vector<RingIso> ring_isos_bruteforce(const FinRing::Ptr& source, const FinRing::Ptr& target,
                                          const IsoSearchOptions& opts = {});

std::vector<RingIso> ring_automorphisms(const FinRing::Ptr& r, const IsoSearchOptions& opts = {});

}  // namespace gmr
