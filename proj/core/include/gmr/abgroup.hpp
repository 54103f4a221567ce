#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmr/validation.hpp"

namespace gmr {

/// Index of an element inside the carrier of its group/ring/bimodule.
using Elem = std::uint32_t;

/// Finite abelian group presented as Z/d1 x ... x Z/dk, each di >= 2.
/// An empty factor list is the trivial group. Elements are indices in
/// [0, order) with the first coordinate most significant, so concatenating
/// factor lists concatenates coordinate blocks.
class AbGroup {
public:
    explicit AbGroup(std::vector<std::uint32_t> cyclic_orders);

    std::uint32_t order() const { return order_; }
    std::size_t rank() const { return orders_.size(); }
    const std::vector<std::uint32_t>& cyclic_orders() const { return orders_; }
    bool trivial() const { return order_ == 1; }

    Elem zero() const { return 0; }
    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem scale(std::int64_t k, Elem a) const;

    /// Additive order of an element.
    std::uint32_t elem_order(Elem a) const;

    std::vector<std::uint32_t> coords(Elem a) const;
    Elem from_coords(const std::vector<std::int64_t>& c) const;
    Elem basis(std::size_t i) const;

    bool operator==(const AbGroup& other) const { return orders_ == other.orders_; }

private:
    std::vector<std::uint32_t> orders_;
    std::vector<std::uint32_t> radix_;  // radix_[i] = product of orders_[i+1..)
    std::uint32_t order_ = 1;
};

/// "(a1,a2,...)" rendering of an element, "0"/"()" for the trivial group.
std::string coords_string(const AbGroup& g, Elem a);

/// Sorted list of the subgroup generated by `generators`.
std::vector<Elem> subgroup_closure(const AbGroup& g, const std::vector<Elem>& generators);

/// Deterministic additive generating sequence: optionally a forced first
/// element, then greedily the smallest element outside the running subgroup.
std::vector<Elem> generating_sequence(const AbGroup& g, std::optional<Elem> first = {});

/// A subgroup of an ambient group re-presented as a standalone AbGroup.
struct SubgroupPresentation {
    AbGroup group;
    std::vector<Elem> to_ambient;           // group index -> ambient element
    std::vector<std::int64_t> from_ambient; // ambient element -> group index, -1 outside
};

/// Decompose a subgroup (given as its sorted element list, closed under
/// addition and containing 0) into cyclic factors.
SubgroupPresentation present_subgroup(const AbGroup& ambient, const std::vector<Elem>& elements);

}  // namespace gmr
