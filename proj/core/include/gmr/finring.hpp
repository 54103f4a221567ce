#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gmr/abgroup.hpp"
#include "gmr/validation.hpp"

namespace gmr {

/// Finite unital ring: an AbGroup carrier plus a full multiplication table.
/// Rings built from basis structure constants are bi-additive (hence
/// distributive) by construction; rings built from raw tables are validated.
class FinRing {
public:
    using Ptr = std::shared_ptr<const FinRing>;

    /// Z/n with the usual operations. n < 2 is an invalid-order error.
    static Ptr cyclic(std::uint32_t n);

    static Ptr direct_product(const Ptr& a, const Ptr& b);

    /// Multiplication given on the additive basis (k x k element table),
    /// extended bi-additively. Validated on construction.
    static Ptr from_basis_products(AbGroup carrier, const std::vector<Elem>& basis_products,
                                   Elem one);

    /// Full carrier x carrier table. Validated on construction.
    static Ptr from_table(AbGroup carrier, std::vector<Elem> table, Elem one);

    /// No validation; for negative tests and validator input.
    static Ptr from_table_unchecked(AbGroup carrier, std::vector<Elem> table, Elem one);

    const AbGroup& carrier() const { return add_; }
    std::uint32_t order() const { return order_; }
    Elem zero() const { return 0; }
    Elem one() const { return one_; }
    Elem add(Elem a, Elem b) const { return add_.add(a, b); }
    Elem neg(Elem a) const { return add_.neg(a); }
    Elem sub(Elem a, Elem b) const { return add_.sub(a, b); }
    Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * order_ + b]; }
    const std::vector<Elem>& mul_table() const { return mul_; }

    /// Additive order of 1, i.e. the characteristic.
    std::uint32_t characteristic() const { return add_.elem_order(one_); }

private:
    FinRing(AbGroup g, std::vector<Elem> table, Elem one);

    AbGroup add_;
    std::uint32_t order_;
    std::vector<Elem> mul_;
    Elem one_;
};

/// Full report: associativity over all triples, identity axioms, one != zero,
/// distributivity spot checks. Failures carry a witness triple.
ValidationReport validate_ring(const FinRing& r);

/// All x with x*x = x, ascending. Always contains 0 and 1 for a valid ring.
std::vector<Elem> idempotents(const FinRing& r);

/// Idempotents commuting with every element.
std::vector<Elem> central_idempotents(const FinRing& r);

/// True iff the only central idempotents are 0 and 1.
bool is_indecomposable(const FinRing& r);

/// True iff the only idempotents are 0 and 1.
bool has_only_trivial_idempotents(const FinRing& r);

/// Elements with a two-sided inverse, as (unit, inverse) pairs, ascending.
std::vector<std::pair<Elem, Elem>> units(const FinRing& r);

std::optional<Elem> inverse_of(const FinRing& r, Elem x);

/// Function-table bijection between two rings; the four structural flags
/// (additive, multiplicative, unital, bijective) are asserted on construction.
class RingIso {
public:
    RingIso(FinRing::Ptr source, FinRing::Ptr target, std::vector<Elem> table);

    static RingIso identity(const FinRing::Ptr& r);

    const FinRing::Ptr& source() const { return src_; }
    const FinRing::Ptr& target() const { return dst_; }
    Elem operator()(Elem a) const { return table_[a]; }
    const std::vector<Elem>& table() const { return table_; }

    RingIso inverse() const;

    bool operator==(const RingIso& o) const {
        return src_ == o.src_ && dst_ == o.dst_ && table_ == o.table_;
    }

private:
    FinRing::Ptr src_, dst_;
    std::vector<Elem> table_;
};

/// f then g (i.e. the composite g o f).
RingIso compose(const RingIso& f, const RingIso& g);

/// y -> x y x^{-1}; x must be a unit.
RingIso inner_automorphism(const FinRing::Ptr& r, Elem x);

}  // namespace gmr
