#pragma once

// Shared fixture builders. The literal matrix rings are built directly from
// matrix arithmetic, independent of the context-ring machinery they test.

#include "gmr/context.hpp"

namespace gmrtest {

using namespace gmr;

/// M_2(Z/p) with carrier (a,b;c,d) row-major, built from matrix products.
inline FinRing::Ptr matrix2_ring(std::uint32_t p) {
    AbGroup g({p, p, p, p});
    const std::uint32_t n = g.order();
    auto entry = [&](Elem x, int i) { return g.coords(x)[i]; };
    std::vector<Elem> table(std::size_t(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            std::int64_t a = entry(x, 0), b = entry(x, 1), c = entry(x, 2), d = entry(x, 3);
            std::int64_t e = entry(y, 0), f = entry(y, 1), gg = entry(y, 2), h = entry(y, 3);
            table[std::size_t(x) * n + y] = g.from_coords(
                {a * e + b * gg, a * f + b * h, c * e + d * gg, c * f + d * h});
        }
    return FinRing::from_table(std::move(g), std::move(table),
                               AbGroup({p, p, p, p}).from_coords({1, 0, 0, 1}));
}

/// Upper triangular 2x2 matrices over Z/p with carrier (a,b;0,d).
inline FinRing::Ptr upper2_ring(std::uint32_t p) {
    AbGroup g({p, p, p});
    const std::uint32_t n = g.order();
    std::vector<Elem> table(std::size_t(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            auto cx = g.coords(x);
            auto cy = g.coords(y);
            std::int64_t a = cx[0], b = cx[1], d = cx[2];
            std::int64_t e = cy[0], f = cy[1], h = cy[2];
            table[std::size_t(x) * n + y] = g.from_coords({a * e, a * f + b * h, d * h});
        }
    return FinRing::from_table(std::move(g), std::move(table),
                               AbGroup({p, p, p}).from_coords({1, 0, 1}));
}

inline ContextRing::Ptr m2_context_ring(std::uint32_t p) {
    return ContextRing::build(full_matrix_context(FinRing::cyclic(p)));
}

inline ContextRing::Ptr u2_context_ring(std::uint32_t p = 2) {
    auto f = FinRing::cyclic(p);
    return ContextRing::build(triangular_context(f, f, Bimodule::regular(f)));
}

/// Zero-maps context (Z/p, Z/p, Z/p, Z/p).
inline ContextRing::Ptr zero_maps_context_ring(std::uint32_t p) {
    auto f = FinRing::cyclic(p);
    auto reg = Bimodule::regular(f);
    return ContextRing::build(MoritaContext::zero_maps(f, f, reg, reg));
}

/// Triangular (Z/4, F_2, M = Z/2 with the quotient left action, N = 0).
inline ContextRing::Ptr tri_z4_context_ring() {
    auto z4 = FinRing::cyclic(4);
    auto f2 = FinRing::cyclic(2);
    auto M = Bimodule::from_basis_actions(AbGroup({2}), z4, f2, {1}, {1});
    return ContextRing::build(triangular_context(z4, f2, M));
}

/// Triangular (Z/4, Z/4, M = Z/4 regular, N = 0).
inline ContextRing::Ptr tri_z4reg_context_ring() {
    auto z4 = FinRing::cyclic(4);
    return ContextRing::build(triangular_context(z4, z4, Bimodule::regular(z4)));
}

/// (F_2 x F_2, F_2, M = R left regular with right scalar action, N = 0).
inline ContextRing::Ptr ex34_context_ring() {
    auto r = FinRing::direct_product(FinRing::cyclic(2), FinRing::cyclic(2));
    auto s = FinRing::cyclic(2);
    std::vector<Elem> ract(std::size_t(r->order()) * 2);
    for (Elem m = 0; m < r->order(); ++m) {
        ract[m * 2] = 0;
        ract[m * 2 + 1] = m;
    }
    auto M = Bimodule::from_tables(r->carrier(), r, s, r->mul_table(), std::move(ract));
    return ContextRing::build(triangular_context(r, s, M));
}

/// (Z/n x Z/n, Z/n, 0, 0): the coordinate-swap fixture.
inline ContextRing::Ptr dec_context_ring(std::uint32_t n) {
    auto s = FinRing::cyclic(n);
    auto r = FinRing::direct_product(s, s);
    return ContextRing::build(
        MoritaContext::zero_maps(r, s, Bimodule::zero(r, s), Bimodule::zero(s, r)));
}

}  // namespace gmrtest
