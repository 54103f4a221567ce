#pragma once

// Internal backtracking engine shared by the ring-isomorphism oracle and the
// semilinear bimodule-map enumeration. Enumerates additive bijections between
// two finite abelian groups by generator images (equal additive order),
// propagating additively and pruning through a caller-supplied constraint.

#include <cstdint>
#include <functional>
#include <vector>

#include "gmr/abgroup.hpp"

namespace gmr::detail {

struct AdditiveIsoSearch {
    const AbGroup* src = nullptr;
    const AbGroup* dst = nullptr;
    // generating sequence of src; images of gens[i] are restricted to
    // candidates[i] when provided, otherwise to all equal-order elements.
    std::vector<Elem> gens;
    std::vector<std::vector<Elem>> candidates;

    // map: partial table (-1 undefined); fresh: elements defined by the last
    // extension. Return false to prune the branch.
    std::function<bool(const std::vector<std::int32_t>& map, const std::vector<Elem>& defined,
                       const std::vector<char>& fresh_mask, const std::vector<Elem>& fresh)>
        prune;

    std::function<void(const std::vector<Elem>& table)> emit;

    void run() const;
};

}  // namespace gmr::detail
