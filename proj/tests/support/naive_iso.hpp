#pragma once

// Independent ground truth for the pruned isomorphism oracle: enumerate every
// unital additive bijection by simple copy-on-recurse closure (no order
// pruning, no multiplicative rejection during the search), then filter by a
// full multiplicativity check. Deliberately shares no code with the library's
// search engine.

#include <vector>

#include "gmr/finring.hpp"

namespace gmrtest {

using gmr::Elem;
using gmr::FinRing;

inline bool naive_assign(const FinRing& A, const FinRing& B, std::vector<std::int64_t>& map,
                         Elem x, Elem y) {
    std::vector<Elem> defined;
    for (Elem e = 0; e < A.order(); ++e)
        if (map[e] >= 0) defined.push_back(e);
    std::uint32_t ord = A.carrier().elem_order(x);
    Elem xm = 0, ym = 0;
    for (std::uint32_t k = 1; k < ord; ++k) {
        xm = A.carrier().add(xm, x);
        ym = B.carrier().add(ym, y);
        for (Elem a : defined) {
            Elem e = A.carrier().add(a, xm);
            Elem v = B.carrier().add(static_cast<Elem>(map[a]), ym);
            if (map[e] >= 0) {
                if (static_cast<Elem>(map[e]) != v) return false;
            } else {
                map[e] = v;
            }
        }
    }
    return true;
}

inline void naive_search(const FinRing& A, const FinRing& B, std::vector<std::int64_t> map,
                         std::vector<std::vector<Elem>>& out) {
    std::int64_t x = -1;
    for (Elem e = 0; e < A.order(); ++e)
        if (map[e] < 0) {
            x = e;
            break;
        }
    if (x < 0) {
        std::vector<char> used(B.order(), 0);
        for (auto v : map) {
            if (used[v]) return;  // keep bijections only
            used[v] = 1;
        }
        out.emplace_back(map.begin(), map.end());
        return;
    }
    std::uint32_t xord = A.carrier().elem_order(static_cast<Elem>(x));
    for (Elem y = 0; y < B.order(); ++y) {
        if (xord % B.carrier().elem_order(y) != 0) continue;  // need ord(y) | ord(x)
        auto next = map;
        if (naive_assign(A, B, next, static_cast<Elem>(x), y))
            naive_search(A, B, std::move(next), out);
    }
}

inline std::vector<std::vector<Elem>> naive_unital_additive_bijections(const FinRing& A,
                                                                       const FinRing& B) {
    std::vector<std::vector<Elem>> out;
    if (A.order() != B.order()) return out;
    std::vector<std::int64_t> map(A.order(), -1);
    map[0] = 0;
    if (!naive_assign(A, B, map, A.one(), B.one())) return out;
    if (static_cast<Elem>(map[A.one()]) != B.one()) return out;
    naive_search(A, B, std::move(map), out);
    return out;
}

inline std::vector<std::vector<Elem>> naive_ring_isos(const FinRing& A, const FinRing& B) {
    std::vector<std::vector<Elem>> out;
    for (auto& table : naive_unital_additive_bijections(A, B)) {
        bool mult = true;
        for (Elem a = 0; a < A.order() && mult; ++a)
            for (Elem b = 0; b < A.order(); ++b)
                if (table[A.mul(a, b)] != B.mul(table[a], table[b])) {
                    mult = false;
                    break;
                }
        if (mult) out.push_back(std::move(table));
    }
    return out;
}

}  // namespace gmrtest
