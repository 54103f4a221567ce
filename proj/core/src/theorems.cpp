#include "gmr/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace gmr {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    std::int64_t micros() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
    }
};

std::vector<RingMap> oracle_iso_maps(const ContextRing::Ptr& T, const ContextRing::Ptr& Tp,
                                     const IsoSearchOptions& opts) {
    std::vector<RingMap> out;
    for (const RingIso& iso : ring_isos_bruteforce(T->ring(), Tp->ring(), opts))
        out.push_back(RingMap::from_ring_iso(T, Tp, iso));
    return out;
}

std::vector<RingMap> realize_all(const Iso0& tuples) {
    std::vector<RingMap> out;
    for (const auto& t : tuples.class0) out.push_back(realize(t));
    for (const auto& t : tuples.class1) out.push_back(realize(t));
    return out;
}

std::set<std::vector<Elem>> table_set(const std::vector<RingMap>& maps) {
    std::set<std::vector<Elem>> out;
    for (const auto& m : maps) out.insert(m.table());
    return out;
}

std::string count_note(const std::string& label, std::size_t n) {
    return label + " = " + std::to_string(n);
}

}  // namespace

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::holds: return "holds";
        case VerdictStatus::refuted: return "refuted";
        default: return "not-applicable";
    }
}

Verdict verify_strict_implies_graded(const ContextRing::Ptr& T, const ContextRing::Ptr& Tp,
                                     const IsoSearchOptions& opts) {
    Timer timer;
    Verdict v;
    v.claim = claims::strict_graded;
    bool strict_t = is_strict(*T->context());
    bool strict_tp = is_strict(*Tp->context());
    v.hypotheses.push_back({"one of the contexts is strict", strict_t || strict_tp});
    if (!v.applicable()) {
        v.micros = timer.micros();
        return v;
    }

    Iso0 iso0 = enumerate_iso0(T, Tp, opts);
    bool ok = true;
    if (iso0.size() > 0 && !(strict_t && strict_tp)) {
        ok = false;
        v.notes.push_back("structured isomorphisms exist but strictness does not transfer");
    }
    for (const auto& t : iso0.class0) {
        auto phi = realize(t);
        if (!(phi.grade_profile().graded || phi.grade_profile().antigraded)) ok = false;
        if (t.m0() != 0 || t.n0() != 0) {
            ok = false;
            v.notes.push_back("a class-0 tuple has nonzero constants");
        }
    }
    for (const auto& t : iso0.class1) {
        auto phi = realize(t);
        if (!(phi.grade_profile().graded || phi.grade_profile().antigraded)) ok = false;
        if (t.mstar() != 0 || t.nstar() != 0) {
            ok = false;
            v.notes.push_back("a class-1 tuple has nonzero constants");
        }
    }
    v.notes.push_back(count_note("|Iso_0|", iso0.size()));
    v.status = ok ? VerdictStatus::holds : VerdictStatus::refuted;
    v.micros = timer.micros();
    return v;
}

Verdict verify_central_idempotent_lemma(const ContextRing::Ptr& T) {
    Timer timer;
    Verdict v;
    v.claim = claims::central_idempotents;
    auto characterized = central_idempotents_via_lemma(*T);
    auto oracle = central_idempotents(*T->ring());
    bool ok = characterized == oracle;
    v.notes.push_back(count_note("characterized", characterized.size()));
    v.notes.push_back(count_note("oracle", oracle.size()));
    if (!ok) v.notes.push_back("characterized and scanned central idempotents differ");
    v.status = ok ? VerdictStatus::holds : VerdictStatus::refuted;
    v.micros = timer.micros();
    return v;
}

Verdict verify_indecomposability(const ContextRing::Ptr& T) {
    Timer timer;
    Verdict v;
    v.claim = claims::indecomposable_context;
    const MoritaContext& c = *T->context();
    v.hypotheses.push_back({"R indecomposable", is_indecomposable(*c.R())});
    v.hypotheses.push_back({"S indecomposable", is_indecomposable(*c.S())});
    v.hypotheses.push_back({"M or N nonzero", c.M()->order() > 1 || c.N()->order() > 1});
    if (!v.applicable()) {
        v.micros = timer.micros();
        return v;
    }
    bool ok = is_indecomposable(*T->ring());
    if (!ok) v.notes.push_back("context ring has a nontrivial central idempotent");
    v.status = ok ? VerdictStatus::holds : VerdictStatus::refuted;
    v.micros = timer.micros();
    return v;
}

Verdict verify_semigraded_theorem(const ContextRing::Ptr& T, const ContextRing::Ptr& Tp,
                                  const IsoSearchOptions& opts) {
    Timer timer;
    Verdict v;
    v.claim = claims::semigraded_classification;
    const MoritaContext& cp = *Tp->context();
    v.hypotheses.push_back({"R' indecomposable", is_indecomposable(*cp.R())});
    v.hypotheses.push_back({"S' indecomposable", is_indecomposable(*cp.S())});
    v.hypotheses.push_back({"M' or N' nonzero", cp.M()->order() > 1 || cp.N()->order() > 1});
    if (!v.applicable()) {
        v.micros = timer.micros();
        return v;
    }

    auto oracle = oracle_iso_maps(T, Tp, opts);
    std::set<std::vector<Elem>> semigraded, antisemigraded, graded_any;
    for (const auto& phi : oracle) {
        if (phi.grade_profile().semigraded) semigraded.insert(phi.table());
        if (phi.grade_profile().antisemigraded) antisemigraded.insert(phi.table());
        if (phi.grade_profile().graded || phi.grade_profile().antigraded)
            graded_any.insert(phi.table());
    }

    Iso0 iso0 = enumerate_iso0(T, Tp, opts);
    std::set<std::vector<Elem>> realized0, realized1, realized_all;
    for (const auto& t : iso0.class0) realized0.insert(realize(t).table());
    for (const auto& t : iso0.class1) realized1.insert(realize(t).table());
    realized_all = realized0;
    realized_all.insert(realized1.begin(), realized1.end());

    bool ok = realized0 == semigraded && realized1 == antisemigraded;
    bool contained = std::includes(realized_all.begin(), realized_all.end(), graded_any.begin(),
                                   graded_any.end());
    if (!contained) {
        ok = false;
        v.notes.push_back("a graded isomorphism is not structured");
    }
    v.notes.push_back(count_note("semigraded", semigraded.size()));
    v.notes.push_back(count_note("class0", realized0.size()));
    v.notes.push_back(count_note("antisemigraded", antisemigraded.size()));
    v.notes.push_back(count_note("class1", realized1.size()));
    v.status = ok ? VerdictStatus::holds : VerdictStatus::refuted;
    v.micros = timer.micros();
    return v;
}

Verdict verify_zero_maps_theorem(const ContextRing::Ptr& T, const ContextRing::Ptr& Tp,
                                 const IsoSearchOptions& opts) {
    Timer timer;
    Verdict v;
    v.claim = claims::zero_maps_complete;
    const MoritaContext& c = *T->context();
    const MoritaContext& cp = *Tp->context();
    v.hypotheses.push_back({"R trivial idempotents", has_only_trivial_idempotents(*c.R())});
    v.hypotheses.push_back({"S trivial idempotents", has_only_trivial_idempotents(*c.S())});
    v.hypotheses.push_back({"R' trivial idempotents", has_only_trivial_idempotents(*cp.R())});
    v.hypotheses.push_back({"S' trivial idempotents", has_only_trivial_idempotents(*cp.S())});
    v.hypotheses.push_back(
        {"pairings zero", c.bracket_is_zero() && c.paren_is_zero() && cp.bracket_is_zero() &&
                              cp.paren_is_zero()});
    if (!v.applicable()) {
        v.micros = timer.micros();
        return v;
    }

    auto oracle = table_set(oracle_iso_maps(T, Tp, opts));
    auto realized = table_set(realize_all(enumerate_iso0(T, Tp, opts)));
    bool ok = oracle == realized;
    v.notes.push_back(count_note("|Iso|", oracle.size()));
    v.notes.push_back(count_note("|Iso_0|", realized.size()));
    if (!ok) v.notes.push_back("oracle and structured isomorphism sets differ");
    v.status = ok ? VerdictStatus::holds : VerdictStatus::refuted;
    v.micros = timer.micros();
    return v;
}

Verdict verify_nonzero_maps_obstruction(const ContextRing::Ptr& T, const IsoSearchOptions& opts) {
    Timer timer;
    Verdict v;
    v.claim = claims::inner_obstruction;
    const MoritaContext& c = *T->context();
    v.hypotheses.push_back({"bracket or paren nonzero",
                            !c.bracket_is_zero() || !c.paren_is_zero()});
    if (!v.applicable()) {
        v.micros = timer.micros();
        return v;
    }

    auto aut = oracle_iso_maps(T, T, opts);
    Iso0 iso0 = enumerate_iso0(T, T, opts);
    v.notes.push_back(count_note("|Aut|", aut.size()));
    v.notes.push_back(count_note("|Aut_0|", iso0.size()));

    std::optional<Elem> witness;
    for (Elem m = 1; m < c.M()->order(); ++m) {
        Elem unit = T->fuse(c.R()->one(), m, 0, c.S()->one());
        auto eta = RingMap::from_ring_iso(T, T, inner_automorphism(T->ring(), unit));
        if (membership_test(eta).neither()) {
            witness = m;
            break;
        }
        v.notes.push_back("no obstruction from m=" + coords_string(c.M()->carrier(), m));
    }
    bool ok = witness.has_value() && iso0.size() < aut.size();
    if (witness)
        v.notes.push_back("witness unit (1, m; 0, 1) with m=" +
                          coords_string(c.M()->carrier(), *witness));
    else
        v.notes.push_back("no unit of the form (1, m; 0, 1) escapes the structured classes");
    v.status = ok ? VerdictStatus::holds : VerdictStatus::refuted;
    v.micros = timer.micros();
    return v;
}

Verdict verify_group_structure(const ContextRing::Ptr& T, const IsoSearchOptions& opts) {
    Timer timer;
    Verdict v;
    v.claim = claims::group_structure;

    auto aut = oracle_iso_maps(T, T, opts);
    auto aut_set = table_set(aut);

    Iso0 iso0 = enumerate_iso0(T, T, opts);
    std::vector<RingMap> aut0 = realize_all(iso0);
    auto aut0_set = table_set(aut0);
    std::set<std::vector<Elem>> aut00_set;
    for (const auto& t : iso0.class0) aut00_set.insert(realize(t).table());

    std::vector<RingMap> autg;
    std::set<std::vector<Elem>> autg_set, autgp_set;
    for (const auto& phi : aut) {
        if (phi.grade_profile().graded || phi.grade_profile().antigraded) {
            autg.push_back(phi);
            autg_set.insert(phi.table());
            if (phi.grade_profile().graded) autgp_set.insert(phi.table());
        }
    }

    bool ok = true;
    auto subset = [](const std::set<std::vector<Elem>>& a, const std::set<std::vector<Elem>>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    if (!subset(aut0_set, aut_set)) {
        ok = false;
        v.notes.push_back("Aut_0 is not contained in Aut");
    }

    auto closed_subgroup = [&](const std::vector<RingMap>& maps,
                               const std::set<std::vector<Elem>>& set, const char* label) {
        for (const auto& a : maps) {
            if (!set.count(a.inverse().table())) {
                ok = false;
                v.notes.push_back(std::string(label) + " not closed under inverse");
                return;
            }
            for (const auto& b : maps)
                if (!set.count(compose(a, b).table())) {
                    ok = false;
                    v.notes.push_back(std::string(label) + " not closed under composition");
                    return;
                }
        }
    };
    closed_subgroup(aut0, aut0_set, "Aut_0");
    closed_subgroup(autg, autg_set, "Aut_g");

    auto normal_in = [&](const std::set<std::vector<Elem>>& sub, const std::vector<RingMap>& group,
                         const char* label) {
        for (const auto& g : group) {
            auto ginv = g.inverse();
            for (const auto& h : group) {
                if (!sub.count(h.table())) continue;
                auto conj = compose(compose(ginv, h), g);
                if (!sub.count(conj.table())) {
                    ok = false;
                    v.notes.push_back(std::string(label) + " is not normal");
                    return;
                }
            }
        }
    };
    normal_in(aut00_set, aut0, "Aut_0^0 in Aut_0");
    normal_in(autgp_set, autg, "Aut_g^+ in Aut_g");

    v.notes.push_back(count_note("|Aut|", aut_set.size()));
    v.notes.push_back(count_note("|Aut_0|", aut0_set.size()));
    v.notes.push_back(count_note("|Aut_g|", autg_set.size()));
    v.status = ok ? VerdictStatus::holds : VerdictStatus::refuted;
    v.micros = timer.micros();
    return v;
}

Verdict verify_decomposable_remark(const ContextRing::Ptr& T, const FinRing::Ptr& factor,
                                   const IsoSearchOptions& opts) {
    Timer timer;
    Verdict v;
    v.claim = claims::decomposable_swap;
    const MoritaContext& c = *T->context();
    bool zero_modules = c.M()->order() == 1 && c.N()->order() == 1;
    v.hypotheses.push_back({"M = N = 0", zero_modules});

    std::vector<RingIso> ident;
    if (zero_modules) {
        auto ss = FinRing::direct_product(factor, factor);
        ident = ring_isos_bruteforce(ss, c.R(), opts);
    }
    v.hypotheses.push_back({"R is S x S", !ident.empty()});
    if (!v.applicable()) {
        v.micros = timer.micros();
        return v;
    }

    const RingIso& iota = ident.front();
    auto iota_inv = iota.inverse();
    const std::uint32_t ns = factor->order();

    // (s1, s2, s3) -> (s1, s3, s2) through the identification R = S x S.
    std::vector<Elem> table(T->order());
    for (Elem x = 0; x < T->order(); ++x) {
        auto q = T->split(x);
        Elem pre = iota_inv(q.r);
        Elem s1 = pre / ns, s2 = pre % ns;
        table[x] = T->fuse(iota(s1 * ns + q.s), 0, 0, s2);
    }
    RingMap phi(T, T, std::move(table));

    bool ok = phi.is_isomorphism();
    if (!ok) v.notes.push_back("coordinate swap is not an automorphism");
    if (ok && !phi.grade_profile().graded) {
        ok = false;
        v.notes.push_back("coordinate swap is not graded");
    }
    if (ok && !membership_test(phi).neither()) {
        ok = false;
        v.notes.push_back("coordinate swap is structured after all");
    }
    if (ok) v.notes.push_back("graded automorphism outside Iso_0 exhibited");
    v.status = ok ? VerdictStatus::holds : VerdictStatus::refuted;
    v.micros = timer.micros();
    return v;
}

Verdict verify_example_3_4(const FinRing::Ptr& R, const IsoSearchOptions& opts) {
    (void)opts;
    Timer timer;
    Verdict v;
    v.claim = claims::regular_module_indecomposable;
    v.hypotheses.push_back({"R decomposable", !is_indecomposable(*R)});

    const std::uint32_t q = R->characteristic();
    bool prime_power = [&] {
        std::uint32_t n = q, p = 0;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                p = d;
                break;
            }
        if (p == 0) return true;  // q prime
        while (n % p == 0) n /= p;
        return n == 1;
    }();
    v.hypotheses.push_back({"char(R) is a prime power (trivial-idempotent Z/q exists)",
                            prime_power});
    if (!v.applicable()) {
        v.micros = timer.micros();
        return v;
    }

    auto S = FinRing::cyclic(q);
    // M = R, left regular; right action through s -> s * 1_R.
    std::vector<Elem> lact = R->mul_table();
    std::vector<Elem> ract(std::size_t(R->order()) * q);
    for (Elem m = 0; m < R->order(); ++m)
        for (Elem s = 0; s < q; ++s)
            ract[std::size_t(m) * q + s] = R->mul(m, R->carrier().scale(s, R->one()));
    auto M = Bimodule::from_tables(R->carrier(), R, S, std::move(lact), std::move(ract));
    auto N = Bimodule::zero(S, R);
    auto T = ContextRing::build(MoritaContext::zero_maps(R, S, M, N));

    bool ok = has_only_trivial_idempotents(*S) && is_indecomposable(*T->ring());
    v.notes.push_back(count_note("|T|", T->order()));
    auto lemma = central_idempotents_via_lemma(*T);
    if (lemma != central_idempotents(*T->ring())) {
        ok = false;
        v.notes.push_back("characterized central idempotents disagree with the scan");
    }
    v.status = ok ? VerdictStatus::holds : VerdictStatus::refuted;
    v.micros = timer.micros();
    return v;
}

}  // namespace gmr
