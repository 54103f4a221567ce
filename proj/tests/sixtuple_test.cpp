#include <set>

#include "doctest.h"
#include "gmr/sixtuple.hpp"
#include "support/fixtures.hpp"

using namespace gmr;

namespace {

std::set<std::vector<Elem>> realized_tables(const Iso0& iso0) {
    std::set<std::vector<Elem>> out;
    for (const auto& t : iso0.class0) out.insert(realize(t).table());
    for (const auto& t : iso0.class1) out.insert(realize(t).table());
    return out;
}

}  // namespace

TEST_CASE("six-tuple validation") {
    // zero-maps context: any constants pass
    auto T = gmrtest::zero_maps_context_ring(2);
    const auto& c = *T->context();
    for (Elem m0 = 0; m0 < 2; ++m0)
        for (Elem n0 = 0; n0 < 2; ++n0) {
            auto t = SixTuple::class0(T, T, RingIso::identity(c.R()), RingIso::identity(c.S()),
                                      BimoduleMap::identity(c.M()), BimoduleMap::identity(c.N()),
                                      m0, n0);
            CHECK(six_tuple_valid(t));
        }

    // strict context: m0 = 1 violates condition (i)
    auto M2 = gmrtest::m2_context_ring(2);
    const auto& cm = *M2->context();
    auto bad = SixTuple::class0(M2, M2, RingIso::identity(cm.R()), RingIso::identity(cm.S()),
                                BimoduleMap::identity(cm.M()), BimoduleMap::identity(cm.N()), 1,
                                0);
    auto rep = validate_six_tuple(bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.checks[1].name.find("(i)") != std::string::npos);
    CHECK_FALSE(rep.checks[1].passed);
    CHECK_THROWS_AS(realize(bad), ValidationError);

    // class1 on the triangular ring is blocked: mu cannot be bijective
    auto U = gmrtest::u2_context_ring();
    const auto& cu = *U->context();
    BimoduleMap mu(cu.M(), cu.N(), RingIso::identity(cu.R()), RingIso::identity(cu.S()),
                   std::vector<Elem>(cu.M()->order(), 0));
    BimoduleMap nu(cu.N(), cu.M(), RingIso::identity(cu.S()), RingIso::identity(cu.R()),
                   std::vector<Elem>{0});
    auto bad1 = SixTuple::class1(U, U, RingIso::identity(cu.R()), RingIso::identity(cu.S()), mu,
                                 nu, 0, 0);
    auto rep1 = validate_six_tuple(bad1);
    CHECK_FALSE(rep1.ok());
    CHECK_FALSE(rep1.checks[0].passed);
}

TEST_CASE("realization formulas") {
    // identity tuple realizes the identity map
    auto T = gmrtest::zero_maps_context_ring(2);
    auto id = realize(SixTuple::identity(T));
    CHECK(id.table() == RingMap::identity(T).table());

    // triangular ring, tuple with m0 = 1: phi(E11) = (1, 1, 0, 0)
    auto U = gmrtest::u2_context_ring();
    const auto& cu = *U->context();
    auto t = SixTuple::class0(U, U, RingIso::identity(cu.R()), RingIso::identity(cu.S()),
                              BimoduleMap::identity(cu.M()), BimoduleMap::identity(cu.N()), 1, 0);
    REQUIRE(six_tuple_valid(t));
    auto phi = realize(t);
    CHECK(phi.is_isomorphism());
    CHECK(phi(U->e11()) == U->fuse(1, 1, 0, 0));
    CHECK(phi.grade_profile().semigraded);
    CHECK_FALSE(phi.grade_profile().graded);

    // constants zero realize a graded map
    auto g = realize(SixTuple::identity(gmrtest::m2_context_ring(3)));
    CHECK(g.grade_profile().graded);
}

TEST_CASE("membership: identity, swap, and an unstructured inner automorphism") {
    auto T = gmrtest::zero_maps_context_ring(2);
    auto mem = membership_test(RingMap::identity(T));
    REQUIRE(mem.class0.has_value());
    CHECK(*mem.class0 == SixTuple::identity(T));
    CHECK_FALSE(mem.class1.has_value());  // M' is nonzero, no degenerate report

    auto alpha = swap_iso(T);
    auto amem = membership_test(alpha);
    CHECK_FALSE(amem.class0.has_value());
    REQUIRE(amem.class1.has_value());
    CHECK(realize(*amem.class1).table() == alpha.table());

    // inner automorphism of M_2(F_2) by (1,1;0,1) is neither
    auto M2 = gmrtest::m2_context_ring(2);
    Elem unit = M2->fuse(1, 1, 0, 1);
    auto eta = RingMap::from_ring_iso(M2, M2, inner_automorphism(M2->ring(), unit));
    CHECK(membership_test(eta).neither());

    // the image of a grade -1 element under conjugation by (1, m; 0, 1)
    // matches the displayed formula ([m,n], -[m,n]m, n, -(n,m)); the odd
    // characteristic case exercises the signs
    for (auto TT : {M2, gmrtest::m2_context_ring(3)}) {
        const auto& c = *TT->context();
        for (Elem m = 0; m < c.M()->order(); ++m) {
            Elem u = TT->fuse(c.R()->one(), m, 0, c.S()->one());
            auto inner = inner_automorphism(TT->ring(), u);
            for (Elem n = 0; n < c.N()->order(); ++n) {
                Elem x = TT->fuse(0, 0, n, 0);
                Elem b = c.bracket(m, n);
                Elem expected = TT->fuse(b, c.M()->neg(c.M()->lmul(b, m)), n,
                                         c.S()->neg(c.paren(n, m)));
                CHECK(inner(x) == expected);
            }
        }
    }

    // degenerate M = N = 0: both classes are attempted, but the classes stay
    // disjoint even here; the identity has no class-1 structure
    auto D = gmrtest::dec_context_ring(2);
    auto dmem = membership_test(RingMap::identity(D));
    CHECK(dmem.class0.has_value());
    CHECK_FALSE(dmem.class1.has_value());
    CHECK_FALSE(dmem.both());

    // the coordinate swap on (F_2, F_2, 0, 0) is class1 and only class1
    auto f2 = FinRing::cyclic(2);
    auto dd = ContextRing::build(
        MoritaContext::zero_maps(f2, f2, Bimodule::zero(f2, f2), Bimodule::zero(f2, f2)));
    std::vector<Elem> swap_tab(dd->order());
    for (Elem x = 0; x < dd->order(); ++x) {
        auto q = dd->split(x);
        swap_tab[x] = dd->fuse(q.s, 0, 0, q.r);
    }
    auto smem = membership_test(RingMap(dd, dd, std::move(swap_tab)));
    CHECK_FALSE(smem.class0.has_value());
    CHECK(smem.class1.has_value());
}

TEST_CASE("grade profile of the identity") {
    // identity is graded and semigraded; antigraded only when M = N = 0
    auto T = gmrtest::zero_maps_context_ring(2);
    auto p = RingMap::identity(T).grade_profile();
    CHECK(p.graded);
    CHECK(p.semigraded);
    CHECK_FALSE(p.antigraded);
    CHECK_FALSE(p.antisemigraded);

    auto D = gmrtest::dec_context_ring(2);
    auto q = RingMap::identity(D).grade_profile();
    CHECK(q.graded);
    CHECK(q.antigraded);
    CHECK(q.semigraded);
    CHECK(q.antisemigraded);
}

TEST_CASE("membership requires a verified isomorphism") {
    auto T = gmrtest::zero_maps_context_ring(2);
    std::vector<Elem> zero(T->order(), 0);
    RingMap not_iso(T, T, std::move(zero));
    CHECK_FALSE(not_iso.is_isomorphism());
    CHECK_THROWS_AS(membership_test(not_iso), WiringError);
}

TEST_CASE("enumeration counts") {
    auto T = gmrtest::zero_maps_context_ring(2);
    auto iso0 = enumerate_iso0(T, T);
    CHECK(iso0.class0.size() == 4);
    CHECK(iso0.class1.size() == 4);
    CHECK(realized_tables(iso0).size() == 8);  // realizations pairwise distinct

    auto U = gmrtest::u2_context_ring();
    auto uiso = enumerate_iso0(U, U);
    CHECK(uiso.class0.size() == 2);
    CHECK(uiso.class1.size() == 0);

    auto M2 = gmrtest::m2_context_ring(2);
    auto miso = enumerate_iso0(M2, M2);
    CHECK(miso.class0.size() == 1);
    CHECK(miso.class1.size() == 1);
    for (const auto& t : miso.class0) {
        CHECK(t.m0() == 0);
        CHECK(t.n0() == 0);
        CHECK(realize(t).grade_profile().graded);
    }
    for (const auto& t : miso.class1) CHECK(realize(t).grade_profile().antigraded);

    auto M3 = gmrtest::m2_context_ring(3);
    auto m3iso = enumerate_iso0(M3, M3);
    CHECK(m3iso.class0.size() == 2);
    CHECK(m3iso.class1.size() == 2);

    auto Z = gmrtest::tri_z4_context_ring();
    auto ziso = enumerate_iso0(Z, Z);
    CHECK(ziso.class0.size() == 2);
    CHECK(ziso.class1.size() == 0);

    auto Z4 = gmrtest::tri_z4reg_context_ring();
    auto z4iso = enumerate_iso0(Z4, Z4);
    CHECK(z4iso.class0.size() == 8);
    CHECK(z4iso.class1.size() == 0);
}

TEST_CASE("class realizations are semigraded or antisemigraded and disjoint") {
    for (auto T : {gmrtest::zero_maps_context_ring(2), gmrtest::u2_context_ring(),
                   gmrtest::m2_context_ring(3), gmrtest::tri_z4reg_context_ring()}) {
        auto iso0 = enumerate_iso0(T, T);
        std::set<std::vector<Elem>> c0, c1;
        for (const auto& t : iso0.class0) {
            auto phi = realize(t);
            CHECK(phi.is_isomorphism());
            CHECK(phi.grade_profile().semigraded);
            c0.insert(phi.table());
        }
        for (const auto& t : iso0.class1) {
            auto phi = realize(t);
            CHECK(phi.is_isomorphism());
            CHECK(phi.grade_profile().antisemigraded);
            c1.insert(phi.table());
        }
        // disjoint classes when an off-diagonal component is nonzero
        if (T->context()->M()->order() > 1 || T->context()->N()->order() > 1)
            for (const auto& t : c0) CHECK(c1.count(t) == 0);
    }
}

TEST_CASE("membership round trip recovers every enumerated tuple") {
    for (auto T : {gmrtest::zero_maps_context_ring(2), gmrtest::u2_context_ring(),
                   gmrtest::m2_context_ring(2), gmrtest::tri_z4_context_ring()}) {
        auto iso0 = enumerate_iso0(T, T);
        for (const auto& t : iso0.class0) {
            auto mem = membership_test(realize(t));
            REQUIRE(mem.class0.has_value());
            CHECK(*mem.class0 == t);
        }
        for (const auto& t : iso0.class1) {
            auto mem = membership_test(realize(t));
            REQUIRE(mem.class1.has_value());
            CHECK(*mem.class1 == t);
        }
    }
}

TEST_CASE("composition follows the structured table") {
    auto T = gmrtest::zero_maps_context_ring(2);
    auto iso0 = enumerate_iso0(T, T);

    // identity composes neutrally
    auto id = SixTuple::identity(T);
    for (const auto& t : iso0.class0) {
        CHECK(compose(id, t) == t);
        CHECK(compose(t, id) == t);
    }

    // class0 o class0 constants: m0'' + u'(m0')
    const auto& c = *T->context();
    auto mk0 = [&](Elem m0, Elem n0) {
        return SixTuple::class0(T, T, RingIso::identity(c.R()), RingIso::identity(c.S()),
                                BimoduleMap::identity(c.M()), BimoduleMap::identity(c.N()), m0,
                                n0);
    };
    auto comp = compose(mk0(1, 0), mk0(1, 1));
    CHECK(comp.kind() == TupleKind::class0);
    CHECK(comp.m0() == c.M()->add(1, 1));
    CHECK(comp.n0() == 1);

    // kinds combine: equal kinds give class0, mixed give class1
    REQUIRE(iso0.class1.size() == 4);
    auto psi = iso0.class1[1];
    CHECK(compose(psi, psi).kind() == TupleKind::class0);
    CHECK(compose(mk0(1, 0), psi).kind() == TupleKind::class1);
    CHECK(compose(psi, mk0(1, 0)).kind() == TupleKind::class1);
}

TEST_CASE("inverse follows the structured table") {
    // char 2: u^{-1}(-m0) = m0
    auto T = gmrtest::zero_maps_context_ring(2);
    const auto& c = *T->context();
    auto t = SixTuple::class0(T, T, RingIso::identity(c.R()), RingIso::identity(c.S()),
                              BimoduleMap::identity(c.M()), BimoduleMap::identity(c.N()), 1, 0);
    auto inv = invert(t);
    CHECK(inv.m0() == 1);
    CHECK(realize(compose(t, inv)).table() == RingMap::identity(T).table());

    // char 3: u^{-1}(-m0) = -m0 = 2 m0
    auto T3 = gmrtest::zero_maps_context_ring(3);
    const auto& c3 = *T3->context();
    auto t3 = SixTuple::class0(T3, T3, RingIso::identity(c3.R()), RingIso::identity(c3.S()),
                               BimoduleMap::identity(c3.M()), BimoduleMap::identity(c3.N()), 1, 2);
    auto inv3 = invert(t3);
    CHECK(inv3.m0() == 2);
    CHECK(inv3.n0() == 1);
    CHECK(realize(invert(t3)).table() == realize(t3).inverse().table());

    // class1 inverse swaps the constants through the module maps
    auto iso0 = enumerate_iso0(T3, T3);
    REQUIRE_FALSE(iso0.class1.empty());
    for (const auto& psi : iso0.class1) {
        auto ipsi = invert(psi);
        CHECK(ipsi.kind() == TupleKind::class1);
        CHECK(realize(ipsi).table() == realize(psi).inverse().table());
    }
}

TEST_CASE("realization is functorial over many pairs including odd characteristic") {
    std::size_t pairs = 0;
    for (auto T : {gmrtest::zero_maps_context_ring(2), gmrtest::zero_maps_context_ring(3),
                   gmrtest::m2_context_ring(3), gmrtest::tri_z4reg_context_ring()}) {
        auto iso0 = enumerate_iso0(T, T);
        std::vector<SixTuple> all(iso0.class0.begin(), iso0.class0.end());
        all.insert(all.end(), iso0.class1.begin(), iso0.class1.end());
        if (all.size() > 12) all.erase(all.begin() + 12, all.end());
        for (const auto& a : all)
            for (const auto& b : all) {
                auto lhs = realize(compose(a, b));
                auto rhs = compose(realize(a), realize(b));
                CHECK(lhs.table() == rhs.table());
                ++pairs;
            }
        for (const auto& a : all)
            CHECK(realize(invert(a)).table() == realize(a).inverse().table());
    }
    CHECK(pairs >= 100);
}

TEST_CASE("swap isomorphisms relate the two classes") {
    // class1(T,T') = { alpha_T then t : t in class0(T^{-1}, T') } as maps
    for (auto T : {gmrtest::zero_maps_context_ring(3), gmrtest::u2_context_ring()}) {
        auto alpha = swap_iso(T);
        auto Tinv = alpha.target();
        auto direct = enumerate_iso0(T, T);
        auto shifted = enumerate_iso0(Tinv, T);

        std::set<std::vector<Elem>> lhs;
        for (const auto& t : direct.class1) lhs.insert(realize(t).table());
        std::set<std::vector<Elem>> rhs;
        for (const auto& t : shifted.class0) rhs.insert(compose(alpha, realize(t)).table());
        CHECK(lhs == rhs);
    }
}
