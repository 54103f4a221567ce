#include "gmr/iso_search.hpp"

#include "additive_search.hpp"

namespace gmr {

std::vector<RingIso> ring_isos_bruteforce(const FinRing::Ptr& source, const FinRing::Ptr& target,
                                          const IsoSearchOptions& opts) {
    if (source->order() != target->order()) return {};
    if (source->order() > opts.bound)
        throw SearchBoundExceeded(source->order(), opts.bound);

    const AbGroup& S = source->carrier();
    const AbGroup& D = target->carrier();

    detail::AdditiveIsoSearch search;
    search.src = &S;
    search.dst = &D;
    search.gens = generating_sequence(S, source->one());
    search.candidates.resize(search.gens.size());
    for (std::size_t i = 0; i < search.gens.size(); ++i) {
        std::uint32_t ord = S.elem_order(search.gens[i]);
        if (i == 0 && search.gens[0] == source->one()) {
            if (D.elem_order(target->one()) == ord)
                search.candidates[0] = {target->one()};
            continue;
        }
        for (Elem h = 0; h < D.order(); ++h)
            if (D.elem_order(h) == ord) search.candidates[i].push_back(h);
    }

    search.prune = [&](const std::vector<std::int32_t>& map, const std::vector<Elem>& defined,
                       const std::vector<char>& fresh_mask, const std::vector<Elem>&) {
        for (Elem x : defined) {
            for (Elem y : defined) {
                Elem p = source->mul(x, y);
                std::int32_t pv = map[p];
                if (pv < 0) continue;
                if (!fresh_mask[x] && !fresh_mask[y] && !fresh_mask[p]) continue;
                if (target->mul(static_cast<Elem>(map[x]), static_cast<Elem>(map[y])) !=
                    static_cast<Elem>(pv))
                    return false;
            }
        }
        return true;
    };

    std::vector<RingIso> out;
    search.emit = [&](const std::vector<Elem>& table) {
        out.emplace_back(source, target, table);
    };
    search.run();
    return out;
}

std::vector<RingIso> ring_automorphisms(const FinRing::Ptr& r, const IsoSearchOptions& opts) {
    return ring_isos_bruteforce(r, r, opts);
}

}  // namespace gmr
