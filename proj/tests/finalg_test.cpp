#include <algorithm>
#include <set>

#include "doctest.h"
#include "gmr/iso_search.hpp"
#include "support/fixtures.hpp"
#include "support/naive_iso.hpp"

using namespace gmr;

TEST_CASE("cyclic ring arithmetic") {
    auto z2 = FinRing::cyclic(2);
    CHECK(z2->add(1, 1) == 0);
    auto z4 = FinRing::cyclic(4);
    CHECK(z4->mul(2, 2) == 0);
    auto z6 = FinRing::cyclic(6);
    CHECK(z6->mul(3, 4) == 0);
    CHECK_THROWS_AS(FinRing::cyclic(1), InvalidOrderError);
    CHECK_THROWS_AS(FinRing::cyclic(0), InvalidOrderError);
}

TEST_CASE("direct products") {
    auto z2 = FinRing::cyclic(2);
    auto z3 = FinRing::cyclic(3);

    auto p22 = FinRing::direct_product(z2, z2);
    CHECK(p22->order() == 4);
    CHECK(idempotents(*p22) == std::vector<Elem>{0, 1, 2, 3});

    auto p23 = FinRing::direct_product(z2, z3);
    CHECK(p23->order() == 6);
    auto isos = ring_isos_bruteforce(FinRing::cyclic(6), p23);
    CHECK(isos.size() == 1);  // Chinese remainder

    auto p33 = FinRing::direct_product(z3, z3);
    CHECK_FALSE(is_indecomposable(*p33));
}

TEST_CASE("validate_ring reports witnesses") {
    auto z4 = FinRing::cyclic(4);
    CHECK(validate_ring(*z4).ok());

    // corrupt 2*2 := 1 inside Z/4; associativity must fail with a witness
    auto table = z4->mul_table();
    table[2 * 4 + 2] = 1;
    auto bad = FinRing::from_table_unchecked(z4->carrier(), std::move(table), 1);
    auto rep = validate_ring(*bad);
    CHECK_FALSE(rep.ok());
    const CheckResult* fail = rep.first_failure();
    REQUIRE(fail != nullptr);
    CHECK(fail->witness.find("(") != std::string::npos);

    // checked constructor rejects the same table
    auto table2 = z4->mul_table();
    table2[2 * 4 + 2] = 1;
    CHECK_THROWS_AS(FinRing::from_table(z4->carrier(), std::move(table2), 1), ValidationError);
}

TEST_CASE("idempotents and centrality") {
    auto z4 = FinRing::cyclic(4);
    CHECK(idempotents(*z4) == std::vector<Elem>{0, 1});
    CHECK(has_only_trivial_idempotents(*z4));
    CHECK(is_indecomposable(*z4));

    auto z6 = FinRing::cyclic(6);
    std::vector<Elem> expected;  // independent recomputation
    for (Elem k = 0; k < 6; ++k)
        if ((k * k) % 6 == k) expected.push_back(k);
    CHECK(idempotents(*z6) == expected);
    CHECK(idempotents(*z6) == std::vector<Elem>{0, 1, 3, 4});
    CHECK(central_idempotents(*z6) == idempotents(*z6));  // commutative
    CHECK_FALSE(is_indecomposable(*z6));
    CHECK_FALSE(has_only_trivial_idempotents(*z6));

    auto u2 = gmrtest::upper2_ring(2);
    CHECK(idempotents(*u2).size() == 6);
    CHECK(central_idempotents(*u2) == std::vector<Elem>{0, u2->one()});
    CHECK(is_indecomposable(*u2));

    auto m2 = gmrtest::matrix2_ring(2);
    CHECK(is_indecomposable(*m2));
    CHECK(central_idempotents(*m2).size() == 2);

    // x idempotent implies 1 - x idempotent
    for (const FinRing::Ptr& r : {z6, u2, m2})
        for (Elem x : idempotents(*r)) {
            Elem y = r->sub(r->one(), x);
            CHECK(r->mul(y, y) == y);
        }
}

TEST_CASE("units and inverses") {
    auto z4 = FinRing::cyclic(4);
    auto us = units(*z4);
    REQUIRE(us.size() == 2);
    CHECK(us[0] == std::pair<Elem, Elem>{1, 1});
    CHECK(us[1] == std::pair<Elem, Elem>{3, 3});

    auto z6 = FinRing::cyclic(6);
    auto us6 = units(*z6);
    REQUIRE(us6.size() == 2);
    CHECK(us6[1] == std::pair<Elem, Elem>{5, 5});

    CHECK(units(*gmrtest::upper2_ring(2)).size() == 2);
}

TEST_CASE("inner automorphisms") {
    auto m2 = gmrtest::matrix2_ring(2);
    auto id = inner_automorphism(m2, m2->one());
    for (Elem x = 0; x < m2->order(); ++x) CHECK(id(x) == x);

    // conjugation by the antidiagonal unit swaps E11 and E22
    Elem j = m2->carrier().from_coords({0, 1, 1, 0});
    Elem e11 = m2->carrier().from_coords({1, 0, 0, 0});
    Elem e22 = m2->carrier().from_coords({0, 0, 0, 1});
    auto swap = inner_automorphism(m2, j);
    CHECK(swap(e11) == e22);
    CHECK(swap(e22) == e11);

    CHECK_THROWS_AS(inner_automorphism(m2, e11), NotAUnitError);

    // inner(x) then inner(y) equals inner(yx)
    auto us = units(*m2);
    for (std::size_t i = 0; i < us.size(); i += 3)
        for (std::size_t k = 0; k < us.size(); k += 3) {
            auto a = inner_automorphism(m2, us[i].first);
            auto b = inner_automorphism(m2, us[k].first);
            auto c = inner_automorphism(m2, m2->mul(us[k].first, us[i].first));
            CHECK(compose(a, b).table() == c.table());
        }
}

TEST_CASE("oracle counts on small rings") {
    auto u2 = gmrtest::upper2_ring(2);
    auto autos = ring_automorphisms(u2);
    CHECK(autos.size() == 2);

    auto m2 = gmrtest::matrix2_ring(2);
    auto m2autos = ring_automorphisms(m2);
    CHECK(m2autos.size() == 6);

    // nonabelian of order 6, i.e. S_3
    bool abelian = true;
    for (const auto& a : m2autos)
        for (const auto& b : m2autos)
            if (!(compose(a, b).table() == compose(b, a).table())) abelian = false;
    CHECK_FALSE(abelian);

    // all six are inner
    std::set<std::vector<Elem>> inner;
    for (auto [x, inv] : units(*m2)) inner.insert(inner_automorphism(m2, x).table());
    CHECK(inner.size() == 6);
    for (const auto& a : m2autos) CHECK(inner.count(a.table()) == 1);

    CHECK(ring_automorphisms(FinRing::cyclic(8)).size() == 1);
}

TEST_CASE("oracle group laws") {
    auto m2 = gmrtest::matrix2_ring(2);
    auto autos = ring_automorphisms(m2);
    std::set<std::vector<Elem>> tables;
    for (const auto& a : autos) tables.insert(a.table());
    for (const auto& a : autos) {
        auto inv = a.inverse();
        CHECK(tables.count(inv.table()) == 1);
        auto round = compose(a, inv);
        CHECK(round.table() == RingIso::identity(m2).table());
        for (const auto& b : autos) CHECK(tables.count(compose(a, b).table()) == 1);
    }
}

TEST_CASE("oracle handles size mismatch and bound") {
    auto z4 = FinRing::cyclic(4);
    auto z6 = FinRing::cyclic(6);
    CHECK(ring_isos_bruteforce(z4, z6).empty());

    IsoSearchOptions tight;
    tight.bound = 4;
    CHECK_THROWS_AS(ring_isos_bruteforce(z6, z6, tight), SearchBoundExceeded);
}

TEST_CASE("oracle agrees with the naive enumeration on small rings") {
    auto check_pair = [](const FinRing::Ptr& a, const FinRing::Ptr& b) {
        auto pruned = ring_isos_bruteforce(a, b);
        auto naive = gmrtest::naive_ring_isos(*a, *b);
        std::set<std::vector<Elem>> ps, ns(naive.begin(), naive.end());
        for (const auto& i : pruned) ps.insert(i.table());
        CHECK(ps == ns);
    };
    check_pair(FinRing::cyclic(6), FinRing::direct_product(FinRing::cyclic(2), FinRing::cyclic(3)));
    check_pair(FinRing::cyclic(8), FinRing::cyclic(8));
    check_pair(gmrtest::upper2_ring(2), gmrtest::upper2_ring(2));
    check_pair(gmrtest::matrix2_ring(2), gmrtest::matrix2_ring(2));
}

TEST_CASE("deterministic oracle ordering") {
    auto m2 = gmrtest::matrix2_ring(2);
    auto a = ring_automorphisms(m2);
    auto b = ring_automorphisms(m2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].table() == b[i].table());
}

TEST_CASE("subgroup presentation round trip") {
    // 2Z/8 inside Z/8 is Z/4
    AbGroup z8({8});
    auto sub = subgroup_closure(z8, {2});
    auto pres = present_subgroup(z8, sub);
    CHECK(pres.group.order() == 4);
    CHECK(pres.group.cyclic_orders() == std::vector<std::uint32_t>{4});

    // diagonal of (Z/2)^2
    AbGroup v4({2, 2});
    auto diag = subgroup_closure(v4, {3});
    auto dpres = present_subgroup(v4, diag);
    CHECK(dpres.group.order() == 2);

    // mixed: subgroup of Z/4 x Z/2 generated by (2,0) and (0,1)
    AbGroup g({4, 2});
    auto h = subgroup_closure(g, {g.from_coords({2, 0}), g.from_coords({0, 1})});
    auto hp = present_subgroup(g, h);
    CHECK(hp.group.order() == 4);
    std::multiset<std::uint32_t> orders(hp.group.cyclic_orders().begin(),
                                        hp.group.cyclic_orders().end());
    CHECK(orders == std::multiset<std::uint32_t>{2, 2});
}
