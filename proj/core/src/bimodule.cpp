#include "gmr/bimodule.hpp"

#include "additive_search.hpp"

namespace gmr {

namespace {

std::string pair_witness(const AbGroup& a, Elem x, const AbGroup& b, Elem y) {
    return "(" + coords_string(a, x) + "," + coords_string(b, y) + ")";
}

}  // namespace

Bimodule::Bimodule(AbGroup g, FinRing::Ptr left, FinRing::Ptr right, std::vector<Elem> lact,
                   std::vector<Elem> ract)
    : add_(std::move(g)), left_(std::move(left)), right_(std::move(right)),
      lact_(std::move(lact)), ract_(std::move(ract)) {
    if (lact_.size() != std::size_t(left_->order()) * add_.order())
        throw InvalidOrderError("left action table has wrong size");
    if (ract_.size() != std::size_t(add_.order()) * right_->order())
        throw InvalidOrderError("right action table has wrong size");
    for (Elem v : lact_)
        if (v >= add_.order()) throw InvalidOrderError("left action entry out of range");
    for (Elem v : ract_)
        if (v >= add_.order()) throw InvalidOrderError("right action entry out of range");
}

Bimodule::Ptr Bimodule::zero(FinRing::Ptr left, FinRing::Ptr right) {
    AbGroup g{std::vector<std::uint32_t>{}};
    std::vector<Elem> lact(left->order(), 0), ract(right->order(), 0);
    return from_tables(std::move(g), std::move(left), std::move(right), std::move(lact),
                       std::move(ract));
}

Bimodule::Ptr Bimodule::regular(const FinRing::Ptr& r) {
    std::vector<Elem> lact = r->mul_table();
    std::vector<Elem> ract = r->mul_table();
    return from_tables(r->carrier(), r, r, std::move(lact), std::move(ract));
}

Bimodule::Ptr Bimodule::from_basis_actions(AbGroup carrier, FinRing::Ptr left, FinRing::Ptr right,
                                           const std::vector<Elem>& left_basis,
                                           const std::vector<Elem>& right_basis) {
    const std::size_t kr = left->carrier().rank(), km = carrier.rank(),
                      ks = right->carrier().rank();
    if (left_basis.size() != kr * km)
        throw InvalidOrderError("left basis action must be rank(R) x rank(M)");
    if (right_basis.size() != km * ks)
        throw InvalidOrderError("right basis action must be rank(M) x rank(S)");

    const std::uint32_t nr = left->order(), nm = carrier.order(), ns = right->order();
    std::vector<Elem> lact(std::size_t(nr) * nm, 0);
    for (Elem r = 0; r < nr; ++r) {
        auto cr = left->carrier().coords(r);
        for (Elem m = 0; m < nm; ++m) {
            auto cm = carrier.coords(m);
            Elem acc = 0;
            for (std::size_t i = 0; i < kr; ++i)
                for (std::size_t j = 0; j < km; ++j)
                    acc = carrier.add(
                        acc, carrier.scale(std::int64_t(cr[i]) * cm[j], left_basis[i * km + j]));
            lact[std::size_t(r) * nm + m] = acc;
        }
    }
    std::vector<Elem> ract(std::size_t(nm) * ns, 0);
    for (Elem m = 0; m < nm; ++m) {
        auto cm = carrier.coords(m);
        for (Elem s = 0; s < ns; ++s) {
            auto cs = right->carrier().coords(s);
            Elem acc = 0;
            for (std::size_t j = 0; j < km; ++j)
                for (std::size_t i = 0; i < ks; ++i)
                    acc = carrier.add(
                        acc, carrier.scale(std::int64_t(cm[j]) * cs[i], right_basis[j * ks + i]));
            ract[std::size_t(m) * ns + s] = acc;
        }
    }
    return from_tables(std::move(carrier), std::move(left), std::move(right), std::move(lact),
                       std::move(ract));
}

Bimodule::Ptr Bimodule::from_tables(AbGroup carrier, FinRing::Ptr left, FinRing::Ptr right,
                                    std::vector<Elem> left_action,
                                    std::vector<Elem> right_action) {
    Ptr m(new Bimodule(std::move(carrier), std::move(left), std::move(right),
                       std::move(left_action), std::move(right_action)));
    auto rep = validate_bimodule(*m);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    return m;
}

Bimodule::Ptr Bimodule::from_tables_unchecked(AbGroup carrier, FinRing::Ptr left,
                                              FinRing::Ptr right, std::vector<Elem> left_action,
                                              std::vector<Elem> right_action) {
    return Ptr(new Bimodule(std::move(carrier), std::move(left), std::move(right),
                            std::move(left_action), std::move(right_action)));
}

ValidationReport validate_bimodule(const Bimodule& M) {
    ValidationReport rep;
    const FinRing& R = *M.left_ring();
    const FinRing& S = *M.right_ring();
    const AbGroup& G = M.carrier();
    const std::uint32_t nr = R.order(), nm = G.order(), ns = S.order();

    CheckResult ladd{"left action bi-additive", true, ""};
    for (Elem r = 0; r < nr && ladd.passed; ++r)
        for (Elem r2 = 0; r2 < nr && ladd.passed; ++r2)
            for (Elem m = 0; m < nm; ++m)
                if (M.lmul(R.add(r, r2), m) != G.add(M.lmul(r, m), M.lmul(r2, m))) {
                    ladd.passed = false;
                    ladd.witness = pair_witness(R.carrier(), r, G, m);
                    break;
                }
    for (Elem r = 0; r < nr && ladd.passed; ++r)
        for (Elem m = 0; m < nm && ladd.passed; ++m)
            for (Elem m2 = 0; m2 < nm; ++m2)
                if (M.lmul(r, G.add(m, m2)) != G.add(M.lmul(r, m), M.lmul(r, m2))) {
                    ladd.passed = false;
                    ladd.witness = pair_witness(R.carrier(), r, G, m);
                    break;
                }
    rep.checks.push_back(ladd);

    CheckResult radd{"right action bi-additive", true, ""};
    for (Elem m = 0; m < nm && radd.passed; ++m)
        for (Elem s = 0; s < ns && radd.passed; ++s)
            for (Elem s2 = 0; s2 < ns; ++s2)
                if (M.rmul(m, S.add(s, s2)) != G.add(M.rmul(m, s), M.rmul(m, s2))) {
                    radd.passed = false;
                    radd.witness = pair_witness(G, m, S.carrier(), s);
                    break;
                }
    for (Elem m = 0; m < nm && radd.passed; ++m)
        for (Elem m2 = 0; m2 < nm && radd.passed; ++m2)
            for (Elem s = 0; s < ns; ++s)
                if (M.rmul(G.add(m, m2), s) != G.add(M.rmul(m, s), M.rmul(m2, s))) {
                    radd.passed = false;
                    radd.witness = pair_witness(G, m, S.carrier(), s);
                    break;
                }
    rep.checks.push_back(radd);

    CheckResult unital{"unital", true, ""};
    for (Elem m = 0; m < nm; ++m)
        if (M.lmul(R.one(), m) != m || M.rmul(m, S.one()) != m) {
            unital.passed = false;
            unital.witness = "m=" + coords_string(G, m);
            break;
        }
    rep.checks.push_back(unital);

    CheckResult lassoc{"left associativity (rr')m = r(r'm)", true, ""};
    for (Elem r = 0; r < nr && lassoc.passed; ++r)
        for (Elem r2 = 0; r2 < nr && lassoc.passed; ++r2)
            for (Elem m = 0; m < nm; ++m)
                if (M.lmul(R.mul(r, r2), m) != M.lmul(r, M.lmul(r2, m))) {
                    lassoc.passed = false;
                    lassoc.witness = "(r,r',m)=(" + coords_string(R.carrier(), r) + "," +
                                     coords_string(R.carrier(), r2) + "," + coords_string(G, m) +
                                     ")";
                    break;
                }
    rep.checks.push_back(lassoc);

    CheckResult rassoc{"right associativity m(ss') = (ms)s'", true, ""};
    for (Elem m = 0; m < nm && rassoc.passed; ++m)
        for (Elem s = 0; s < ns && rassoc.passed; ++s)
            for (Elem s2 = 0; s2 < ns; ++s2)
                if (M.rmul(m, S.mul(s, s2)) != M.rmul(M.rmul(m, s), s2)) {
                    rassoc.passed = false;
                    rassoc.witness = "(m,s,s')=(" + coords_string(G, m) + "," +
                                     coords_string(S.carrier(), s) + "," +
                                     coords_string(S.carrier(), s2) + ")";
                    break;
                }
    rep.checks.push_back(rassoc);

    CheckResult compat{"compatibility r(ms) = (rm)s", true, ""};
    for (Elem r = 0; r < nr && compat.passed; ++r)
        for (Elem m = 0; m < nm && compat.passed; ++m)
            for (Elem s = 0; s < ns; ++s)
                if (M.lmul(r, M.rmul(m, s)) != M.rmul(M.lmul(r, m), s)) {
                    compat.passed = false;
                    compat.witness = "(r,m,s)=(" + coords_string(R.carrier(), r) + "," +
                                     coords_string(G, m) + "," + coords_string(S.carrier(), s) +
                                     ")";
                    break;
                }
    rep.checks.push_back(compat);
    return rep;
}

BimoduleMap::BimoduleMap(Bimodule::Ptr source, Bimodule::Ptr target, RingIso left, RingIso right,
                         std::vector<Elem> table)
    : src_(std::move(source)), dst_(std::move(target)), left_(std::move(left)),
      right_(std::move(right)), table_(std::move(table)) {
    if (left_.source() != src_->left_ring() || left_.target() != dst_->left_ring())
        throw WiringError("left ring isomorphism does not match bimodule endpoints");
    if (right_.source() != src_->right_ring() || right_.target() != dst_->right_ring())
        throw WiringError("right ring isomorphism does not match bimodule endpoints");
    if (table_.size() != src_->order())
        throw WiringError("bimodule map table has wrong size");
    for (Elem v : table_)
        if (v >= dst_->order()) throw WiringError("bimodule map entry out of range");

    const AbGroup& G = src_->carrier();
    const AbGroup& H = dst_->carrier();

    additive_ = true;
    for (Elem a = 0; a < G.order() && additive_; ++a)
        for (Elem b = 0; b < G.order(); ++b)
            if (table_[G.add(a, b)] != H.add(table_[a], table_[b])) {
                additive_ = false;
                break;
            }

    bijective_ = src_->order() == dst_->order();
    if (bijective_) {
        std::vector<char> hit(dst_->order(), 0);
        for (Elem v : table_) {
            if (hit[v]) {
                bijective_ = false;
                break;
            }
            hit[v] = 1;
        }
    }

    // u(rm) = gamma(r) u(m) and u(ms) = u(m) delta(s); equivalent to the
    // three-factor identity by unitality, and cheaper.
    semilinear_ = true;
    const FinRing& R = *src_->left_ring();
    const FinRing& S = *src_->right_ring();
    for (Elem r = 0; r < R.order() && semilinear_; ++r)
        for (Elem m = 0; m < src_->order(); ++m)
            if (table_[src_->lmul(r, m)] != dst_->lmul(left_(r), table_[m])) {
                semilinear_ = false;
                break;
            }
    for (Elem m = 0; m < src_->order() && semilinear_; ++m)
        for (Elem s = 0; s < S.order(); ++s)
            if (table_[src_->rmul(m, s)] != dst_->rmul(table_[m], right_(s))) {
                semilinear_ = false;
                break;
            }
}

BimoduleMap BimoduleMap::identity(const Bimodule::Ptr& m) {
    std::vector<Elem> t(m->order());
    for (Elem x = 0; x < m->order(); ++x) t[x] = x;
    return BimoduleMap(m, m, RingIso::identity(m->left_ring()),
                       RingIso::identity(m->right_ring()), std::move(t));
}

BimoduleMap BimoduleMap::inverse() const {
    if (!bijective_) throw WiringError("cannot invert a non-bijective bimodule map");
    std::vector<Elem> t(table_.size());
    for (Elem x = 0; x < table_.size(); ++x) t[table_[x]] = x;
    return BimoduleMap(dst_, src_, left_.inverse(), right_.inverse(), std::move(t));
}

BimoduleMap compose(const BimoduleMap& f, const BimoduleMap& g) {
    if (f.target() != g.source())
        throw WiringError("bimodule map composition endpoints do not match");
    std::vector<Elem> t(f.source()->order());
    for (Elem x = 0; x < t.size(); ++x) t[x] = g(f(x));
    return BimoduleMap(f.source(), g.target(), compose(f.left(), g.left()),
                       compose(f.right(), g.right()), std::move(t));
}

bool is_semilinear_iso(const BimoduleMap& u) {
    return u.additive() && u.bijective() && u.semilinear();
}

std::vector<BimoduleMap> enumerate_semilinear_isos(const Bimodule::Ptr& source,
                                                   const Bimodule::Ptr& target,
                                                   const RingIso& gamma, const RingIso& delta) {
    if (gamma.source() != source->left_ring() || gamma.target() != target->left_ring() ||
        delta.source() != source->right_ring() || delta.target() != target->right_ring())
        throw WiringError("semilinear enumeration: ring isomorphisms do not match bimodules");

    std::vector<BimoduleMap> out;
    if (source->order() != target->order()) return out;

    const AbGroup& G = source->carrier();
    const AbGroup& H = target->carrier();
    const FinRing& R = *source->left_ring();
    const FinRing& S = *source->right_ring();

    detail::AdditiveIsoSearch search;
    search.src = &G;
    search.dst = &H;
    search.gens = generating_sequence(G);
    search.candidates.resize(search.gens.size());
    for (std::size_t i = 0; i < search.gens.size(); ++i) {
        std::uint32_t ord = G.elem_order(search.gens[i]);
        for (Elem h = 0; h < H.order(); ++h)
            if (H.elem_order(h) == ord) search.candidates[i].push_back(h);
    }

    search.prune = [&](const std::vector<std::int32_t>& map, const std::vector<Elem>& defined,
                       const std::vector<char>& fresh_mask, const std::vector<Elem>&) {
        for (Elem r = 0; r < R.order(); ++r)
            for (Elem m : defined) {
                Elem p = source->lmul(r, m);
                if (map[p] < 0) continue;
                if (!fresh_mask[m] && !fresh_mask[p]) continue;
                if (target->lmul(gamma(r), static_cast<Elem>(map[m])) !=
                    static_cast<Elem>(map[p]))
                    return false;
            }
        for (Elem m : defined)
            for (Elem s = 0; s < S.order(); ++s) {
                Elem p = source->rmul(m, s);
                if (map[p] < 0) continue;
                if (!fresh_mask[m] && !fresh_mask[p]) continue;
                if (target->rmul(static_cast<Elem>(map[m]), delta(s)) !=
                    static_cast<Elem>(map[p]))
                    return false;
            }
        return true;
    };

    search.emit = [&](const std::vector<Elem>& table) {
        out.emplace_back(source, target, gamma, delta, table);
    };
    search.run();
    return out;
}

}  // namespace gmr
