#pragma once

#include <memory>
#include <vector>

#include "gmr/finring.hpp"
#include "gmr/iso_search.hpp"

namespace gmr {

/// Finite left-R right-S bimodule: an AbGroup carrier with full action tables.
class Bimodule {
public:
    using Ptr = std::shared_ptr<const Bimodule>;

    /// One-element carrier, trivial actions.
    static Ptr zero(FinRing::Ptr left, FinRing::Ptr right);

    /// The ring as a bimodule over itself via ring multiplication.
    static Ptr regular(const FinRing::Ptr& r);

    /// Actions given on basis pairs (ring basis x module basis -> module
    /// element), extended bi-additively. Validated on construction.
    static Ptr from_basis_actions(AbGroup carrier, FinRing::Ptr left, FinRing::Ptr right,
                                  const std::vector<Elem>& left_basis,
                                  const std::vector<Elem>& right_basis);

    /// Full action tables (|R| x |M| and |M| x |S|). Validated on construction.
    static Ptr from_tables(AbGroup carrier, FinRing::Ptr left, FinRing::Ptr right,
                           std::vector<Elem> left_action, std::vector<Elem> right_action);

    static Ptr from_tables_unchecked(AbGroup carrier, FinRing::Ptr left, FinRing::Ptr right,
                                     std::vector<Elem> left_action,
                                     std::vector<Elem> right_action);

    const AbGroup& carrier() const { return add_; }
    std::uint32_t order() const { return add_.order(); }
    const FinRing::Ptr& left_ring() const { return left_; }
    const FinRing::Ptr& right_ring() const { return right_; }

    Elem zero_elem() const { return 0; }
    Elem add(Elem a, Elem b) const { return add_.add(a, b); }
    Elem neg(Elem a) const { return add_.neg(a); }
    Elem sub(Elem a, Elem b) const { return add_.sub(a, b); }
    Elem lmul(Elem r, Elem m) const { return lact_[std::size_t(r) * add_.order() + m]; }
    Elem rmul(Elem m, Elem s) const { return ract_[std::size_t(m) * right_->order() + s]; }

private:
    Bimodule(AbGroup g, FinRing::Ptr left, FinRing::Ptr right, std::vector<Elem> lact,
             std::vector<Elem> ract);

    AbGroup add_;
    FinRing::Ptr left_, right_;
    std::vector<Elem> lact_;  // |R| x |M|
    std::vector<Elem> ract_;  // |M| x |S|
};

/// Exhaustive per-axiom report: action additivity, unitality, associativity of
/// both actions, and the compatibility r(ms) = (rm)s, with witnesses.
ValidationReport validate_bimodule(const Bimodule& m);

/// Additive map between bimodule carriers carrying the ring isomorphisms that
/// govern its semilinearity: u(r m s) = left(r) u(m) right(s). Structural
/// flags are computed at construction; wiring mismatches throw.
class BimoduleMap {
public:
    BimoduleMap(Bimodule::Ptr source, Bimodule::Ptr target, RingIso left, RingIso right,
                std::vector<Elem> table);

    static BimoduleMap identity(const Bimodule::Ptr& m);

    const Bimodule::Ptr& source() const { return src_; }
    const Bimodule::Ptr& target() const { return dst_; }
    const RingIso& left() const { return left_; }
    const RingIso& right() const { return right_; }
    Elem operator()(Elem m) const { return table_[m]; }
    const std::vector<Elem>& table() const { return table_; }

    bool additive() const { return additive_; }
    bool bijective() const { return bijective_; }
    bool semilinear() const { return semilinear_; }

    BimoduleMap inverse() const;

    bool operator==(const BimoduleMap& o) const {
        return src_ == o.src_ && dst_ == o.dst_ && table_ == o.table_ &&
               left_ == o.left_ && right_ == o.right_;
    }

private:
    Bimodule::Ptr src_, dst_;
    RingIso left_, right_;
    std::vector<Elem> table_;
    bool additive_ = false, bijective_ = false, semilinear_ = false;
};

/// f then g (the composite g o f); the governing isomorphisms compose too.
BimoduleMap compose(const BimoduleMap& f, const BimoduleMap& g);

/// True iff u is additive, bijective and satisfies the semilinearity identity
/// for all triples (decided via the two one-sided identities).
bool is_semilinear_iso(const BimoduleMap& u);

/// All gamma-delta-semilinear isomorphisms source -> target, deterministically
/// ordered; empty when the carriers have different orders.
std::vector<BimoduleMap> enumerate_semilinear_isos(const Bimodule::Ptr& source,
                                                   const Bimodule::Ptr& target,
                                                   const RingIso& gamma, const RingIso& delta);

}  // namespace gmr
