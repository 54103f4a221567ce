#include "additive_search.hpp"

namespace gmr::detail {

namespace {

struct SearchState {
    const AdditiveIsoSearch& spec;
    std::vector<std::int32_t> map;   // src elem -> dst elem or -1
    std::vector<char> used;          // dst elem already taken
    std::vector<Elem> defined;       // src elems with images, insertion order
    std::vector<char> fresh_mask;    // scratch, sized |src|

    explicit SearchState(const AdditiveIsoSearch& s)
        : spec(s),
          map(s.src->order(), -1),
          used(s.dst->order(), 0),
          fresh_mask(s.src->order(), 0) {
        map[0] = 0;
        used[0] = 1;
        defined.push_back(0);
    }

    // Extends the map by gen -> img and closes additively. Returns the list of
    // freshly defined elements, or nullopt on conflict (partial assignments are
    // rolled back by the caller via undo()).
    bool extend(Elem gen, Elem img, std::vector<Elem>& fresh) {
        const AbGroup& S = *spec.src;
        const AbGroup& D = *spec.dst;
        std::uint32_t ord = S.elem_order(gen);
        std::size_t base_count = defined.size();
        Elem gmult = 0, hmult = 0;
        for (std::uint32_t k = 1; k < ord; ++k) {
            gmult = S.add(gmult, gen);
            hmult = D.add(hmult, img);
            for (std::size_t i = 0; i < base_count; ++i) {
                Elem x = S.add(defined[i], gmult);
                Elem v = D.add(static_cast<Elem>(map[defined[i]]), hmult);
                if (map[x] >= 0) {
                    if (static_cast<Elem>(map[x]) != v) return false;
                } else {
                    if (used[v]) return false;
                    map[x] = static_cast<std::int32_t>(v);
                    used[v] = 1;
                    defined.push_back(x);
                    fresh.push_back(x);
                }
            }
        }
        return true;
    }

    void undo(const std::vector<Elem>& fresh) {
        for (Elem x : fresh) {
            used[map[x]] = 0;
            map[x] = -1;
        }
        defined.resize(defined.size() - fresh.size());
    }

    void recurse(std::size_t depth, std::vector<std::vector<Elem>>& fresh_pool) {
        if (depth == spec.gens.size()) {
            std::vector<Elem> total(map.size());
            for (std::size_t i = 0; i < map.size(); ++i) total[i] = static_cast<Elem>(map[i]);
            spec.emit(total);
            return;
        }
        Elem gen = spec.gens[depth];
        if (map[gen] >= 0) {  // generator already determined by earlier closure
            recurse(depth + 1, fresh_pool);
            return;
        }
        const std::vector<Elem>& cands = spec.candidates[depth];
        std::vector<Elem>& fresh = fresh_pool[depth];
        for (Elem img : cands) {
            if (used[img]) continue;
            fresh.clear();
            bool ok = extend(gen, img, fresh);
            if (ok && spec.prune) {
                for (Elem x : fresh) fresh_mask[x] = 1;
                ok = spec.prune(map, defined, fresh_mask, fresh);
                for (Elem x : fresh) fresh_mask[x] = 0;
            }
            if (ok) recurse(depth + 1, fresh_pool);
            undo(fresh);
        }
    }
};

}  // namespace

void AdditiveIsoSearch::run() const {
    if (src->order() != dst->order()) return;
    SearchState state(*this);
    // Seed constraint pass on the initial {0 -> 0} assignment.
    if (prune) {
        std::vector<Elem> fresh{0};
        state.fresh_mask[0] = 1;
        bool ok = prune(state.map, state.defined, state.fresh_mask, fresh);
        state.fresh_mask[0] = 0;
        if (!ok) return;
    }
    std::vector<std::vector<Elem>> pool(gens.size());
    state.recurse(0, pool);
}

}  // namespace gmr::detail
