#include "gmr/context.hpp"

#include <algorithm>

namespace gmr {

MoritaContext::MoritaContext(FinRing::Ptr R, FinRing::Ptr S, Bimodule::Ptr M, Bimodule::Ptr N,
                             std::vector<Elem> bracket, std::vector<Elem> paren)
    : R_(std::move(R)), S_(std::move(S)), M_(std::move(M)), N_(std::move(N)),
      bracket_(std::move(bracket)), paren_(std::move(paren)) {
    if (M_->left_ring() != R_ || M_->right_ring() != S_)
        throw WiringError("M must be a left-R right-S bimodule");
    if (N_->left_ring() != S_ || N_->right_ring() != R_)
        throw WiringError("N must be a left-S right-R bimodule");
    if (bracket_.size() != std::size_t(M_->order()) * N_->order())
        throw WiringError("bracket table must be |M| x |N|");
    if (paren_.size() != std::size_t(N_->order()) * M_->order())
        throw WiringError("paren table must be |N| x |M|");
    for (Elem v : bracket_)
        if (v >= R_->order()) throw WiringError("bracket entry out of range");
    for (Elem v : paren_)
        if (v >= S_->order()) throw WiringError("paren entry out of range");
}

MoritaContext::Ptr MoritaContext::create(FinRing::Ptr R, FinRing::Ptr S, Bimodule::Ptr M,
                                         Bimodule::Ptr N, std::vector<Elem> bracket,
                                         std::vector<Elem> paren) {
    auto* raw = new MoritaContext(std::move(R), std::move(S), std::move(M), std::move(N),
                                  std::move(bracket), std::move(paren));
    Ptr ctx(raw);
    auto rep = validate_context(*ctx);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    raw->validated_ = true;
    return ctx;
}

MoritaContext::Ptr MoritaContext::create_unchecked(FinRing::Ptr R, FinRing::Ptr S, Bimodule::Ptr M,
                                                   Bimodule::Ptr N, std::vector<Elem> bracket,
                                                   std::vector<Elem> paren) {
    return Ptr(new MoritaContext(std::move(R), std::move(S), std::move(M), std::move(N),
                                 std::move(bracket), std::move(paren)));
}

MoritaContext::Ptr MoritaContext::from_basis_pairings(FinRing::Ptr R, FinRing::Ptr S,
                                                      Bimodule::Ptr M, Bimodule::Ptr N,
                                                      const std::vector<Elem>& bracket_basis,
                                                      const std::vector<Elem>& paren_basis) {
    const std::size_t km = M->carrier().rank(), kn = N->carrier().rank();
    if (bracket_basis.size() != km * kn)
        throw WiringError("bracket basis table must be rank(M) x rank(N)");
    if (paren_basis.size() != kn * km)
        throw WiringError("paren basis table must be rank(N) x rank(M)");
    const std::uint32_t nm = M->order(), nn = N->order();
    std::vector<Elem> bracket(std::size_t(nm) * nn, 0);
    for (Elem m = 0; m < nm; ++m) {
        auto cm = M->carrier().coords(m);
        for (Elem n = 0; n < nn; ++n) {
            auto cn = N->carrier().coords(n);
            Elem acc = 0;
            for (std::size_t i = 0; i < km; ++i)
                for (std::size_t j = 0; j < kn; ++j)
                    acc = R->carrier().add(
                        acc, R->carrier().scale(std::int64_t(cm[i]) * cn[j],
                                                bracket_basis[i * kn + j]));
            bracket[std::size_t(m) * nn + n] = acc;
        }
    }
    std::vector<Elem> paren(std::size_t(nn) * nm, 0);
    for (Elem n = 0; n < nn; ++n) {
        auto cn = N->carrier().coords(n);
        for (Elem m = 0; m < nm; ++m) {
            auto cm = M->carrier().coords(m);
            Elem acc = 0;
            for (std::size_t j = 0; j < kn; ++j)
                for (std::size_t i = 0; i < km; ++i)
                    acc = S->carrier().add(
                        acc,
                        S->carrier().scale(std::int64_t(cn[j]) * cm[i], paren_basis[j * km + i]));
            paren[std::size_t(n) * nm + m] = acc;
        }
    }
    return create(std::move(R), std::move(S), std::move(M), std::move(N), std::move(bracket),
                  std::move(paren));
}

MoritaContext::Ptr MoritaContext::zero_maps(FinRing::Ptr R, FinRing::Ptr S, Bimodule::Ptr M,
                                            Bimodule::Ptr N) {
    std::vector<Elem> bracket(std::size_t(M->order()) * N->order(), 0);
    std::vector<Elem> paren(std::size_t(N->order()) * M->order(), 0);
    return create(std::move(R), std::move(S), std::move(M), std::move(N), std::move(bracket),
                  std::move(paren));
}

bool MoritaContext::bracket_is_zero() const {
    return std::all_of(bracket_.begin(), bracket_.end(), [](Elem v) { return v == 0; });
}

bool MoritaContext::paren_is_zero() const {
    return std::all_of(paren_.begin(), paren_.end(), [](Elem v) { return v == 0; });
}

ValidationReport validate_context(const MoritaContext& c) {
    ValidationReport rep;
    const FinRing& R = *c.R();
    const FinRing& S = *c.S();
    const Bimodule& M = *c.M();
    const Bimodule& N = *c.N();
    const std::uint32_t nm = M.order(), nn = N.order();

    auto mk = [&](const char* name) { return CheckResult{name, true, ""}; };
    auto mn = [&](Elem m, Elem n) {
        return "(m,n)=(" + coords_string(M.carrier(), m) + "," + coords_string(N.carrier(), n) +
               ")";
    };

    CheckResult badd = mk("bracket bi-additive");
    for (Elem m = 0; m < nm && badd.passed; ++m)
        for (Elem m2 = 0; m2 < nm && badd.passed; ++m2)
            for (Elem n = 0; n < nn; ++n)
                if (c.bracket(M.add(m, m2), n) != R.add(c.bracket(m, n), c.bracket(m2, n))) {
                    badd.passed = false;
                    badd.witness = mn(m, n);
                    break;
                }
    for (Elem m = 0; m < nm && badd.passed; ++m)
        for (Elem n = 0; n < nn && badd.passed; ++n)
            for (Elem n2 = 0; n2 < nn; ++n2)
                if (c.bracket(m, N.add(n, n2)) != R.add(c.bracket(m, n), c.bracket(m, n2))) {
                    badd.passed = false;
                    badd.witness = mn(m, n);
                    break;
                }
    rep.checks.push_back(badd);

    CheckResult padd = mk("paren bi-additive");
    for (Elem n = 0; n < nn && padd.passed; ++n)
        for (Elem n2 = 0; n2 < nn && padd.passed; ++n2)
            for (Elem m = 0; m < nm; ++m)
                if (c.paren(N.add(n, n2), m) != S.add(c.paren(n, m), c.paren(n2, m))) {
                    padd.passed = false;
                    padd.witness = mn(m, n);
                    break;
                }
    for (Elem n = 0; n < nn && padd.passed; ++n)
        for (Elem m = 0; m < nm && padd.passed; ++m)
            for (Elem m2 = 0; m2 < nm; ++m2)
                if (c.paren(n, M.add(m, m2)) != S.add(c.paren(n, m), c.paren(n, m2))) {
                    padd.passed = false;
                    padd.witness = mn(m, n);
                    break;
                }
    rep.checks.push_back(padd);

    CheckResult bal = mk("balance [ms,n] = [m,sn] and (nr,m) = (n,rm)");
    for (Elem m = 0; m < nm && bal.passed; ++m)
        for (Elem s = 0; s < S.order() && bal.passed; ++s)
            for (Elem n = 0; n < nn; ++n)
                if (c.bracket(M.rmul(m, s), n) != c.bracket(m, N.lmul(s, n))) {
                    bal.passed = false;
                    bal.witness = mn(m, n) + " s=" + coords_string(S.carrier(), s);
                    break;
                }
    for (Elem n = 0; n < nn && bal.passed; ++n)
        for (Elem r = 0; r < R.order() && bal.passed; ++r)
            for (Elem m = 0; m < nm; ++m)
                if (c.paren(N.rmul(n, r), m) != c.paren(n, M.lmul(r, m))) {
                    bal.passed = false;
                    bal.witness = mn(m, n) + " r=" + coords_string(R.carrier(), r);
                    break;
                }
    rep.checks.push_back(bal);

    CheckResult blin = mk("bracket R-R-linear");
    for (Elem r = 0; r < R.order() && blin.passed; ++r)
        for (Elem m = 0; m < nm && blin.passed; ++m)
            for (Elem n = 0; n < nn; ++n) {
                if (c.bracket(M.lmul(r, m), n) != R.mul(r, c.bracket(m, n)) ||
                    c.bracket(m, N.rmul(n, r)) != R.mul(c.bracket(m, n), r)) {
                    blin.passed = false;
                    blin.witness = mn(m, n) + " r=" + coords_string(R.carrier(), r);
                    break;
                }
            }
    rep.checks.push_back(blin);

    CheckResult plin = mk("paren S-S-linear");
    for (Elem s = 0; s < S.order() && plin.passed; ++s)
        for (Elem n = 0; n < nn && plin.passed; ++n)
            for (Elem m = 0; m < nm; ++m) {
                if (c.paren(N.lmul(s, n), m) != S.mul(s, c.paren(n, m)) ||
                    c.paren(n, M.rmul(m, s)) != S.mul(c.paren(n, m), s)) {
                    plin.passed = false;
                    plin.witness = mn(m, n) + " s=" + coords_string(S.carrier(), s);
                    break;
                }
            }
    rep.checks.push_back(plin);

    CheckResult assoc = mk("associativity [m,n]m' = m(n,m') and n[m,n'] = (n,m)n'");
    for (Elem m = 0; m < nm && assoc.passed; ++m)
        for (Elem n = 0; n < nn && assoc.passed; ++n) {
            for (Elem m2 = 0; m2 < nm; ++m2)
                if (M.lmul(c.bracket(m, n), m2) != M.rmul(m, c.paren(n, m2))) {
                    assoc.passed = false;
                    assoc.witness = mn(m, n) + " m'=" + coords_string(M.carrier(), m2);
                    break;
                }
            if (!assoc.passed) break;
            for (Elem n2 = 0; n2 < nn; ++n2)
                if (N.rmul(n, c.bracket(m, n2)) != N.lmul(c.paren(n, m), n2)) {
                    assoc.passed = false;
                    assoc.witness = mn(m, n) + " n'=" + coords_string(N.carrier(), n2);
                    break;
                }
        }
    rep.checks.push_back(assoc);
    return rep;
}

bool is_strict(const MoritaContext& ctx) {
    std::vector<Elem> bimage, pimage;
    for (Elem m = 0; m < ctx.M()->order(); ++m)
        for (Elem n = 0; n < ctx.N()->order(); ++n) {
            bimage.push_back(ctx.bracket(m, n));
            pimage.push_back(ctx.paren(n, m));
        }
    return subgroup_closure(ctx.R()->carrier(), bimage).size() == ctx.R()->order() &&
           subgroup_closure(ctx.S()->carrier(), pimage).size() == ctx.S()->order();
}

MoritaContext::Ptr context_transpose(const MoritaContext::Ptr& ctx) {
    return MoritaContext::create(ctx->S(), ctx->R(), ctx->N(), ctx->M(), ctx->paren_table(),
                                 ctx->bracket_table());
}

MoritaContext::Ptr full_matrix_context(const FinRing::Ptr& r) {
    auto reg = Bimodule::regular(r);
    std::vector<Elem> bracket(std::size_t(r->order()) * r->order());
    for (Elem m = 0; m < r->order(); ++m)
        for (Elem n = 0; n < r->order(); ++n) bracket[std::size_t(m) * r->order() + n] = r->mul(m, n);
    std::vector<Elem> paren = bracket;
    return MoritaContext::create(r, r, reg, reg, std::move(bracket), std::move(paren));
}

MoritaContext::Ptr triangular_context(const FinRing::Ptr& R, const FinRing::Ptr& S,
                                      const Bimodule::Ptr& M) {
    return MoritaContext::zero_maps(R, S, M, Bimodule::zero(S, R));
}

ContextRing::ContextRing(MoritaContext::Ptr ctx, FinRing::Ptr ring)
    : ctx_(std::move(ctx)), ring_(std::move(ring)) {
    ss_ = ctx_->S()->order();
    sn_ = ctx_->N()->order() * ss_;
    sm_ = ctx_->M()->order() * sn_;
}

namespace {

std::vector<Elem> context_ring_table(const MoritaContext& c, AbGroup& carrier_out, Elem& one_out) {
    const FinRing& R = *c.R();
    const FinRing& S = *c.S();
    const Bimodule& M = *c.M();
    const Bimodule& N = *c.N();

    std::vector<std::uint32_t> orders = R.carrier().cyclic_orders();
    auto append = [&orders](const std::vector<std::uint32_t>& v) {
        orders.insert(orders.end(), v.begin(), v.end());
    };
    append(M.carrier().cyclic_orders());
    append(N.carrier().cyclic_orders());
    append(S.carrier().cyclic_orders());
    carrier_out = AbGroup(orders);

    const std::uint32_t ss = S.order();
    const std::uint32_t sn = N.order() * ss;
    const std::uint32_t sm = M.order() * sn;
    const std::uint32_t n = carrier_out.order();

    auto fuse = [&](Elem r, Elem m, Elem nn, Elem s) { return r * sm + m * sn + nn * ss + s; };

    std::vector<Elem> table(std::size_t(n) * n);
    for (Elem x = 0; x < n; ++x) {
        Elem xr = x / sm, xm = (x / sn) % M.order(), xn = (x / ss) % N.order(), xs = x % ss;
        for (Elem y = 0; y < n; ++y) {
            Elem yr = y / sm, ym = (y / sn) % M.order(), yn = (y / ss) % N.order(), ys = y % ss;
            Elem zr = R.add(R.mul(xr, yr), c.bracket(xm, yn));
            Elem zm = M.add(M.lmul(xr, ym), M.rmul(xm, ys));
            Elem zn = N.add(N.rmul(xn, yr), N.lmul(xs, yn));
            Elem zs = S.add(c.paren(xn, ym), S.mul(xs, ys));
            table[std::size_t(x) * n + y] = fuse(zr, zm, zn, zs);
        }
    }
    one_out = fuse(R.one(), 0, 0, S.one());
    return table;
}

}  // namespace

ContextRing::Ptr ContextRing::build(const MoritaContext::Ptr& ctx) {
    if (!ctx->validated())
        throw ValidationError(ValidationReport{
            {CheckResult{"context validated", false, "refusing to build the context ring"}}});
    AbGroup carrier{std::vector<std::uint32_t>{}};
    Elem one = 0;
    auto table = context_ring_table(*ctx, carrier, one);
    auto ring = FinRing::from_table(std::move(carrier), std::move(table), one);
    return Ptr(new ContextRing(ctx, std::move(ring)));
}

ContextRing::Ptr ContextRing::build_unchecked(const MoritaContext::Ptr& ctx) {
    AbGroup carrier{std::vector<std::uint32_t>{}};
    Elem one = 0;
    auto table = context_ring_table(*ctx, carrier, one);
    auto ring = FinRing::from_table_unchecked(std::move(carrier), std::move(table), one);
    return Ptr(new ContextRing(ctx, std::move(ring)));
}

ContextRing::Quad ContextRing::split(Elem t) const {
    return Quad{t / sm_, (t / sn_) % ctx_->M()->order(), (t / ss_) % ctx_->N()->order(), t % ss_};
}

Elem ContextRing::fuse(const Quad& q) const { return q.r * sm_ + q.m * sn_ + q.n * ss_ + q.s; }

Grade ContextRing::grade_of(Elem t) const {
    Quad q = split(t);
    bool diag = q.r != 0 || q.s != 0;
    bool up = q.m != 0;
    bool down = q.n != 0;
    if (up && !diag && !down) return Grade::plus_one;
    if (down && !diag && !up) return Grade::minus_one;
    if (!up && !down) return Grade::zero;  // includes the zero element
    return Grade::mixed;
}

bool ContextRing::in_component(Elem t, int i) const {
    Quad q = split(t);
    switch (i) {
        case 0: return q.m == 0 && q.n == 0;
        case 1: return q.r == 0 && q.n == 0 && q.s == 0;
        case -1: return q.r == 0 && q.m == 0 && q.s == 0;
        default: return t == 0;
    }
}

std::vector<Elem> ContextRing::homogeneous_component(int i) const {
    std::vector<Elem> out;
    for (Elem t = 0; t < order(); ++t)
        if (in_component(t, i)) out.push_back(t);
    return out;
}

IdempotentClass classify_idempotent(const ContextRing& T, Elem e) {
    if (T.ring()->mul(e, e) != e)
        throw NotIdempotentError("element " + coords_string(T.ring()->carrier(), e) +
                                 " is not idempotent");
    if (e == 0) return IdempotentClass::zero;
    if (e == T.ring()->one()) return IdempotentClass::one;
    auto q = T.split(e);
    const Elem r1 = T.context()->R()->one(), s1 = T.context()->S()->one();
    if (q.r == r1 && q.s == 0) return IdempotentClass::type1;
    if (q.r == 0 && q.s == s1) return IdempotentClass::type2;
    return IdempotentClass::other;
}

std::vector<Elem> central_idempotents_via_lemma(const ContextRing& T) {
    const MoritaContext& c = *T.context();
    const Bimodule& M = *c.M();
    const Bimodule& N = *c.N();
    std::vector<Elem> out;
    for (Elem r : central_idempotents(*c.R()))
        for (Elem s : central_idempotents(*c.S())) {
            bool ok = true;
            for (Elem m = 0; m < M.order() && ok; ++m) ok = M.lmul(r, m) == M.rmul(m, s);
            for (Elem n = 0; n < N.order() && ok; ++n) ok = N.lmul(s, n) == N.rmul(n, r);
            if (ok) out.push_back(T.fuse(r, 0, 0, s));
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gmr
