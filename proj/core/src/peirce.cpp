#include <algorithm>

#include "gmr/context.hpp"

namespace gmr {

namespace {

// Image of x -> a*x*b over the whole ring, as a sorted element list (an
// additive subgroup since the map is additive).
std::vector<Elem> corner_elements(const FinRing& A, Elem a, Elem b) {
    std::vector<char> seen(A.order(), 0);
    std::vector<Elem> out;
    for (Elem x = 0; x < A.order(); ++x) {
        Elem y = A.mul(A.mul(a, x), b);
        if (!seen[y]) {
            seen[y] = 1;
            out.push_back(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PeirceDecomposition peirce_decompose(const FinRing::Ptr& A, Elem e) {
    if (A->mul(e, e) != e)
        throw NotIdempotentError("element " + coords_string(A->carrier(), e) +
                                 " is not idempotent");
    if (e == A->zero() || e == A->one())
        throw NoDecompositionError("Peirce decomposition needs a nontrivial idempotent");

    const Elem f = A->sub(A->one(), e);

    auto eAe = present_subgroup(A->carrier(), corner_elements(*A, e, e));
    auto fAf = present_subgroup(A->carrier(), corner_elements(*A, f, f));
    auto eAf = present_subgroup(A->carrier(), corner_elements(*A, e, f));
    auto fAe = present_subgroup(A->carrier(), corner_elements(*A, f, e));

    auto corner_ring = [&](const SubgroupPresentation& p, Elem unit) {
        const std::uint32_t n = p.group.order();
        std::vector<Elem> table(std::size_t(n) * n);
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                table[std::size_t(x) * n + y] =
                    static_cast<Elem>(p.from_ambient[A->mul(p.to_ambient[x], p.to_ambient[y])]);
        return FinRing::from_table(p.group, std::move(table),
                                   static_cast<Elem>(p.from_ambient[unit]));
    };
    FinRing::Ptr R = corner_ring(eAe, e);
    FinRing::Ptr S = corner_ring(fAf, f);

    auto corner_bimodule = [&](const SubgroupPresentation& p, const SubgroupPresentation& lring,
                               const FinRing::Ptr& left, const SubgroupPresentation& rring,
                               const FinRing::Ptr& right) {
        const std::uint32_t n = p.group.order();
        std::vector<Elem> lact(std::size_t(left->order()) * n);
        for (Elem r = 0; r < left->order(); ++r)
            for (Elem m = 0; m < n; ++m)
                lact[std::size_t(r) * n + m] = static_cast<Elem>(
                    p.from_ambient[A->mul(lring.to_ambient[r], p.to_ambient[m])]);
        std::vector<Elem> ract(std::size_t(n) * right->order());
        for (Elem m = 0; m < n; ++m)
            for (Elem s = 0; s < right->order(); ++s)
                ract[std::size_t(m) * right->order() + s] = static_cast<Elem>(
                    p.from_ambient[A->mul(p.to_ambient[m], rring.to_ambient[s])]);
        return Bimodule::from_tables(p.group, left, right, std::move(lact), std::move(ract));
    };
    Bimodule::Ptr M = corner_bimodule(eAf, eAe, R, fAf, S);
    Bimodule::Ptr N = corner_bimodule(fAe, fAf, S, eAe, R);

    // f and g are induced by the multiplication of A
    std::vector<Elem> bracket(std::size_t(M->order()) * N->order());
    for (Elem m = 0; m < M->order(); ++m)
        for (Elem n = 0; n < N->order(); ++n)
            bracket[std::size_t(m) * N->order() + n] = static_cast<Elem>(
                eAe.from_ambient[A->mul(eAf.to_ambient[m], fAe.to_ambient[n])]);
    std::vector<Elem> paren(std::size_t(N->order()) * M->order());
    for (Elem n = 0; n < N->order(); ++n)
        for (Elem m = 0; m < M->order(); ++m)
            paren[std::size_t(n) * M->order() + m] = static_cast<Elem>(
                fAf.from_ambient[A->mul(fAe.to_ambient[n], eAf.to_ambient[m])]);

    auto ctx = MoritaContext::create(R, S, M, N, std::move(bracket), std::move(paren));
    auto T = ContextRing::build(ctx);

    std::vector<Elem> witness(A->order());
    for (Elem x = 0; x < A->order(); ++x) {
        Elem r = static_cast<Elem>(eAe.from_ambient[A->mul(A->mul(e, x), e)]);
        Elem m = static_cast<Elem>(eAf.from_ambient[A->mul(A->mul(e, x), f)]);
        Elem n = static_cast<Elem>(fAe.from_ambient[A->mul(A->mul(f, x), e)]);
        Elem s = static_cast<Elem>(fAf.from_ambient[A->mul(A->mul(f, x), f)]);
        witness[x] = T->fuse(r, m, n, s);
    }
    RingIso iso(A, T->ring(), std::move(witness));

    return PeirceDecomposition{ctx, T, std::move(iso)};
}

}  // namespace gmr
