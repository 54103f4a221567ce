#include "gmr/sixtuple.hpp"

#include <algorithm>

namespace gmr {

SixTuple::SixTuple(TupleKind kind, ContextRing::Ptr src, ContextRing::Ptr dst, RingIso a,
                   RingIso b, BimoduleMap ma, BimoduleMap mb, Elem cm, Elem cn)
    : kind_(kind), src_(std::move(src)), dst_(std::move(dst)), ring_a_(std::move(a)),
      ring_b_(std::move(b)), mod_a_(std::move(ma)), mod_b_(std::move(mb)), c_m_(cm), c_n_(cn) {
    const MoritaContext& c = *src_->context();
    const MoritaContext& cp = *dst_->context();
    if (kind_ == TupleKind::class0) {
        if (ring_a_.source() != c.R() || ring_a_.target() != cp.R())
            throw WiringError("gamma must map R -> R'");
        if (ring_b_.source() != c.S() || ring_b_.target() != cp.S())
            throw WiringError("delta must map S -> S'");
        if (mod_a_.source() != c.M() || mod_a_.target() != cp.M())
            throw WiringError("u must map M -> M'");
        if (mod_b_.source() != c.N() || mod_b_.target() != cp.N())
            throw WiringError("v must map N -> N'");
    } else {
        if (ring_a_.source() != c.R() || ring_a_.target() != cp.S())
            throw WiringError("rho must map R -> S'");
        if (ring_b_.source() != c.S() || ring_b_.target() != cp.R())
            throw WiringError("sigma must map S -> R'");
        if (mod_a_.source() != c.M() || mod_a_.target() != cp.N())
            throw WiringError("mu must map M -> N'");
        if (mod_b_.source() != c.N() || mod_b_.target() != cp.M())
            throw WiringError("nu must map N -> M'");
    }
    if (c_m_ >= cp.M()->order() || c_n_ >= cp.N()->order())
        throw WiringError("tuple constants must lie in M' and N'");
}

SixTuple SixTuple::class0(ContextRing::Ptr source, ContextRing::Ptr target, RingIso gamma,
                          RingIso delta, BimoduleMap u, BimoduleMap v, Elem m0, Elem n0) {
    return SixTuple(TupleKind::class0, std::move(source), std::move(target), std::move(gamma),
                    std::move(delta), std::move(u), std::move(v), m0, n0);
}

SixTuple SixTuple::class1(ContextRing::Ptr source, ContextRing::Ptr target, RingIso rho,
                          RingIso sigma, BimoduleMap mu, BimoduleMap nu, Elem mstar, Elem nstar) {
    return SixTuple(TupleKind::class1, std::move(source), std::move(target), std::move(rho),
                    std::move(sigma), std::move(mu), std::move(nu), mstar, nstar);
}

SixTuple SixTuple::identity(const ContextRing::Ptr& T) {
    const MoritaContext& c = *T->context();
    return class0(T, T, RingIso::identity(c.R()), RingIso::identity(c.S()),
                  BimoduleMap::identity(c.M()), BimoduleMap::identity(c.N()), 0, 0);
}

ValidationReport validate_six_tuple(const SixTuple& t) {
    ValidationReport rep;
    const MoritaContext& cp = *t.target()->context();
    const MoritaContext& cs = *t.source()->context();
    const bool class0 = t.kind() == TupleKind::class0;

    // Component semilinearity; the governing isomorphisms must be the tuple's
    // own ring isos: first map by (a, b), second by (b, a), in both kinds.
    CheckResult comp{"components are semilinear isomorphisms", true, ""};
    if (!is_semilinear_iso(t.u()))
        comp = {comp.name, false, class0 ? "u is not a semilinear isomorphism"
                                         : "mu is not a semilinear isomorphism"};
    else if (!is_semilinear_iso(t.v()))
        comp = {comp.name, false, class0 ? "v is not a semilinear isomorphism"
                                         : "nu is not a semilinear isomorphism"};
    else if (!(t.u().left() == t.gamma()) || !(t.u().right() == t.delta()))
        comp = {comp.name, false, "first module map is not governed by the tuple's ring isos"};
    else if (!(t.v().left() == t.delta()) || !(t.v().right() == t.gamma()))
        comp = {comp.name, false, "second module map is not governed by the tuple's ring isos"};
    rep.checks.push_back(comp);

    const Bimodule& Mp = *cp.M();
    const Bimodule& Np = *cp.N();

    CheckResult ci{"(i) [m0, N'] = 0 and (N', m0) = 0", true, ""};
    for (Elem n = 0; n < Np.order(); ++n)
        if (cp.bracket(t.m0(), n) != 0 || cp.paren(n, t.m0()) != 0) {
            ci.passed = false;
            ci.witness = "n'=" + coords_string(Np.carrier(), n);
            break;
        }
    rep.checks.push_back(ci);

    CheckResult cii{"(ii) [M', n0] = 0 and (n0, M') = 0", true, ""};
    for (Elem m = 0; m < Mp.order(); ++m)
        if (cp.bracket(m, t.n0()) != 0 || cp.paren(t.n0(), m) != 0) {
            cii.passed = false;
            cii.witness = "m'=" + coords_string(Mp.carrier(), m);
            break;
        }
    rep.checks.push_back(cii);

    // (iii) pairing compatibility; vacuous when both contexts are zero-maps.
    bool all_zero = cs.bracket_is_zero() && cs.paren_is_zero() && cp.bracket_is_zero() &&
                    cp.paren_is_zero();
    CheckResult ciii{"(iii) pairings are transported", true, ""};
    if (all_zero) {
        ciii.name = "(iii) pairings are transported (vacuous: zero maps)";
    } else if (comp.passed) {
        const Bimodule& M = *cs.M();
        const Bimodule& N = *cs.N();
        for (Elem m = 0; m < M.order() && ciii.passed; ++m)
            for (Elem n = 0; n < N.order(); ++n) {
                bool ok;
                if (class0)
                    ok = cp.bracket(t.u()(m), t.v()(n)) == t.gamma()(cs.bracket(m, n)) &&
                         cp.paren(t.v()(n), t.u()(m)) == t.delta()(cs.paren(n, m));
                else
                    ok = cp.paren(t.mu()(m), t.nu()(n)) == t.rho()(cs.bracket(m, n)) &&
                         cp.bracket(t.nu()(n), t.mu()(m)) == t.sigma()(cs.paren(n, m));
                if (!ok) {
                    ciii.passed = false;
                    ciii.witness = "(m,n)=(" + coords_string(M.carrier(), m) + "," +
                                   coords_string(N.carrier(), n) + ")";
                    break;
                }
            }
    } else {
        ciii.passed = false;
        ciii.witness = "not evaluated: component maps invalid";
    }
    rep.checks.push_back(ciii);
    return rep;
}

bool six_tuple_valid(const SixTuple& t) { return validate_six_tuple(t).ok(); }

RingMap realize(const SixTuple& t) {
    auto rep = validate_six_tuple(t);
    if (!rep.ok()) throw ValidationError(std::move(rep));

    const ContextRing& T = *t.source();
    const ContextRing& Tp = *t.target();
    const MoritaContext& cp = *Tp.context();
    const Bimodule& Mp = *cp.M();
    const Bimodule& Np = *cp.N();

    std::vector<Elem> table(T.order());
    if (t.kind() == TupleKind::class0) {
        for (Elem x = 0; x < T.order(); ++x) {
            auto q = T.split(x);
            Elem gr = t.gamma()(q.r), ds = t.delta()(q.s);
            Elem m = Mp.add(Mp.sub(Mp.lmul(gr, t.m0()), Mp.rmul(t.m0(), ds)), t.u()(q.m));
            Elem n = Np.add(Np.sub(Np.rmul(t.n0(), gr), Np.lmul(ds, t.n0())), t.v()(q.n));
            table[x] = Tp.fuse(gr, m, n, ds);
        }
    } else {
        for (Elem x = 0; x < T.order(); ++x) {
            auto q = T.split(x);
            Elem rr = t.rho()(q.r), ss = t.sigma()(q.s);
            Elem m = Mp.add(Mp.sub(Mp.rmul(t.mstar(), rr), Mp.lmul(ss, t.mstar())), t.nu()(q.n));
            Elem n = Np.add(Np.sub(Np.lmul(rr, t.nstar()), Np.rmul(t.nstar(), ss)), t.mu()(q.m));
            table[x] = Tp.fuse(ss, m, n, rr);
        }
    }
    return RingMap(t.source(), t.target(), std::move(table));
}

namespace {

std::optional<SixTuple> try_extract(const RingMap& phi, TupleKind kind) {
    const ContextRing& T = *phi.source();
    const ContextRing& Tp = *phi.target();
    const MoritaContext& c = *T.context();
    const MoritaContext& cp = *Tp.context();
    const bool class0 = kind == TupleKind::class0;

    try {
        std::vector<Elem> ga(c.R()->order()), db(c.S()->order());
        for (Elem r = 0; r < c.R()->order(); ++r) {
            auto q = Tp.split(phi(T.fuse(r, 0, 0, 0)));
            ga[r] = class0 ? q.r : q.s;
        }
        for (Elem s = 0; s < c.S()->order(); ++s) {
            auto q = Tp.split(phi(T.fuse(0, 0, 0, s)));
            db[s] = class0 ? q.s : q.r;
        }
        RingIso a(c.R(), class0 ? cp.R() : cp.S(), std::move(ga));
        RingIso b(c.S(), class0 ? cp.S() : cp.R(), std::move(db));

        std::vector<Elem> ut(c.M()->order()), vt(c.N()->order());
        for (Elem m = 0; m < c.M()->order(); ++m) {
            auto q = Tp.split(phi(T.fuse(0, m, 0, 0)));
            ut[m] = class0 ? q.m : q.n;
        }
        for (Elem n = 0; n < c.N()->order(); ++n) {
            auto q = Tp.split(phi(T.fuse(0, 0, n, 0)));
            vt[n] = class0 ? q.n : q.m;
        }
        BimoduleMap ma(c.M(), class0 ? cp.M() : cp.N(), a, b, std::move(ut));
        BimoduleMap mb(c.N(), class0 ? cp.N() : cp.M(), b, a, std::move(vt));

        auto e11 = Tp.split(phi(T.e11()));

        SixTuple cand = class0
                            ? SixTuple::class0(phi.source(), phi.target(), std::move(a),
                                               std::move(b), std::move(ma), std::move(mb), e11.m,
                                               e11.n)
                            : SixTuple::class1(phi.source(), phi.target(), std::move(a),
                                               std::move(b), std::move(ma), std::move(mb), e11.m,
                                               e11.n);
        if (!six_tuple_valid(cand)) return std::nullopt;
        if (!(realize(cand).table() == phi.table())) return std::nullopt;
        return cand;
    } catch (const ValidationError&) {
        return std::nullopt;
    } catch (const WiringError&) {
        return std::nullopt;
    }
}

}  // namespace

Membership membership_test(const RingMap& phi) {
    if (!phi.is_isomorphism())
        throw WiringError("membership test requires a verified ring isomorphism");
    Membership out;
    out.class0 = try_extract(phi, TupleKind::class0);
    const MoritaContext& cp = *phi.target()->context();
    bool degenerate = cp.M()->order() == 1 && cp.N()->order() == 1;
    if (!out.class0 || degenerate) out.class1 = try_extract(phi, TupleKind::class1);
    return out;
}

SixTuple compose(const SixTuple& t1, const SixTuple& t2) {
    if (t1.target() != t2.source())
        throw WiringError("tuple composition endpoints do not match");
    const bool k1 = t1.kind() == TupleKind::class1;
    const bool k2 = t2.kind() == TupleKind::class1;
    const MoritaContext& cpp = *t2.target()->context();
    const Bimodule& Mpp = *cpp.M();
    const Bimodule& Npp = *cpp.N();

    if (!k1 && !k2) {
        // (gamma' gamma, delta' delta, u'u, v'v, m0'' + u'(m0'), n0'' + v'(n0'))
        return SixTuple::class0(t1.source(), t2.target(), compose(t1.gamma(), t2.gamma()),
                                compose(t1.delta(), t2.delta()), compose(t1.u(), t2.u()),
                                compose(t1.v(), t2.v()),
                                Mpp.add(t2.m0(), t2.u()(t1.m0())),
                                Npp.add(t2.n0(), t2.v()(t1.n0())));
    }
    if (k1 && k2) {
        // (sigma' rho, rho' sigma, nu' mu, mu' nu, nu'(n*') - m*'', mu'(m*') - n*'')
        return SixTuple::class0(t1.source(), t2.target(), compose(t1.rho(), t2.sigma()),
                                compose(t1.sigma(), t2.rho()), compose(t1.mu(), t2.nu()),
                                compose(t1.nu(), t2.mu()),
                                Mpp.sub(t2.nu()(t1.nstar()), t2.mstar()),
                                Npp.sub(t2.mu()(t1.mstar()), t2.nstar()));
    }
    if (k1 && !k2) {
        // phi' o psi: (delta' rho, gamma' sigma, v' mu, u' nu, u'(m*') - m0'', v'(n*') - n0'')
        return SixTuple::class1(t1.source(), t2.target(), compose(t1.rho(), t2.delta()),
                                compose(t1.sigma(), t2.gamma()), compose(t1.mu(), t2.v()),
                                compose(t1.nu(), t2.u()),
                                Mpp.sub(t2.u()(t1.mstar()), t2.m0()),
                                Npp.sub(t2.v()(t1.nstar()), t2.n0()));
    }
    // psi' o phi: (rho' gamma, sigma' delta, mu' u, nu' v, nu'(n0') + m*'', mu'(m0') + n*'')
    return SixTuple::class1(t1.source(), t2.target(), compose(t1.gamma(), t2.rho()),
                            compose(t1.delta(), t2.sigma()), compose(t1.u(), t2.mu()),
                            compose(t1.v(), t2.nu()),
                            Mpp.add(t2.nu()(t1.n0()), t2.mstar()),
                            Npp.add(t2.mu()(t1.m0()), t2.nstar()));
}

SixTuple invert(const SixTuple& t) {
    if (t.kind() == TupleKind::class0) {
        // (gamma^-1, delta^-1, u^-1, v^-1, u^-1(-m0), v^-1(-n0))
        auto uinv = t.u().inverse();
        auto vinv = t.v().inverse();
        const Bimodule& Mp = *t.target()->context()->M();
        const Bimodule& Np = *t.target()->context()->N();
        Elem m = uinv(Mp.neg(t.m0()));
        Elem n = vinv(Np.neg(t.n0()));
        return SixTuple::class0(t.target(), t.source(), t.gamma().inverse(), t.delta().inverse(),
                                std::move(uinv), std::move(vinv), m, n);
    }
    // (sigma^-1, rho^-1, nu^-1, mu^-1, mu^-1(n*), nu^-1(m*))
    auto muinv = t.mu().inverse();
    auto nuinv = t.nu().inverse();
    Elem m = muinv(t.nstar());
    Elem n = nuinv(t.mstar());
    return SixTuple::class1(t.target(), t.source(), t.sigma().inverse(), t.rho().inverse(),
                            std::move(nuinv), std::move(muinv), m, n);
}

namespace {

// The two annihilator sets of conditions (i) and (ii).
std::vector<Elem> annihilator_m(const MoritaContext& cp) {
    std::vector<Elem> out;
    for (Elem m = 0; m < cp.M()->order(); ++m) {
        bool ok = true;
        for (Elem n = 0; n < cp.N()->order() && ok; ++n)
            ok = cp.bracket(m, n) == 0 && cp.paren(n, m) == 0;
        if (ok) out.push_back(m);
    }
    return out;
}

std::vector<Elem> annihilator_n(const MoritaContext& cp) {
    std::vector<Elem> out;
    for (Elem n = 0; n < cp.N()->order(); ++n) {
        bool ok = true;
        for (Elem m = 0; m < cp.M()->order() && ok; ++m)
            ok = cp.bracket(m, n) == 0 && cp.paren(n, m) == 0;
        if (ok) out.push_back(n);
    }
    return out;
}

bool condition_iii(const MoritaContext& cs, const MoritaContext& cp, TupleKind kind,
                   const RingIso& a, const RingIso& b, const BimoduleMap& ma,
                   const BimoduleMap& mb) {
    for (Elem m = 0; m < cs.M()->order(); ++m)
        for (Elem n = 0; n < cs.N()->order(); ++n) {
            bool ok;
            if (kind == TupleKind::class0)
                ok = cp.bracket(ma(m), mb(n)) == a(cs.bracket(m, n)) &&
                     cp.paren(mb(n), ma(m)) == b(cs.paren(n, m));
            else
                ok = cp.paren(ma(m), mb(n)) == a(cs.bracket(m, n)) &&
                     cp.bracket(mb(n), ma(m)) == b(cs.paren(n, m));
            if (!ok) return false;
        }
    return true;
}

}  // namespace

Iso0 enumerate_iso0(const ContextRing::Ptr& T, const ContextRing::Ptr& Tp,
                    const IsoSearchOptions& opts) {
    const MoritaContext& cs = *T->context();
    const MoritaContext& cp = *Tp->context();
    Iso0 out;

    auto ann_m = annihilator_m(cp);
    auto ann_n = annihilator_n(cp);

    // class0: gamma: R->R', delta: S->S', u: M->M', v: N->N'
    for (const RingIso& gamma : ring_isos_bruteforce(cs.R(), cp.R(), opts))
        for (const RingIso& delta : ring_isos_bruteforce(cs.S(), cp.S(), opts))
            for (const BimoduleMap& u : enumerate_semilinear_isos(cs.M(), cp.M(), gamma, delta))
                for (const BimoduleMap& v :
                     enumerate_semilinear_isos(cs.N(), cp.N(), delta, gamma)) {
                    if (!condition_iii(cs, cp, TupleKind::class0, gamma, delta, u, v)) continue;
                    for (Elem m0 : ann_m)
                        for (Elem n0 : ann_n)
                            out.class0.push_back(
                                SixTuple::class0(T, Tp, gamma, delta, u, v, m0, n0));
                }

    // class1: rho: R->S', sigma: S->R', mu: M->N', nu: N->M'
    for (const RingIso& rho : ring_isos_bruteforce(cs.R(), cp.S(), opts))
        for (const RingIso& sigma : ring_isos_bruteforce(cs.S(), cp.R(), opts))
            for (const BimoduleMap& mu : enumerate_semilinear_isos(cs.M(), cp.N(), rho, sigma))
                for (const BimoduleMap& nu :
                     enumerate_semilinear_isos(cs.N(), cp.M(), sigma, rho)) {
                    if (!condition_iii(cs, cp, TupleKind::class1, rho, sigma, mu, nu)) continue;
                    for (Elem mstar : ann_m)
                        for (Elem nstar : ann_n)
                            out.class1.push_back(
                                SixTuple::class1(T, Tp, rho, sigma, mu, nu, mstar, nstar));
                }
    return out;
}

}  // namespace gmr
