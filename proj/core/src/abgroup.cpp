#include "gmr/abgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace gmr {

namespace {
constexpr std::uint64_t kMaxCarrier = 1u << 20;
}

AbGroup::AbGroup(std::vector<std::uint32_t> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    std::uint64_t order = 1;
    for (auto d : orders_) {
        if (d < 2) throw InvalidOrderError("cyclic order must be >= 2, got " + std::to_string(d));
        order *= d;
        if (order > kMaxCarrier)
            throw InvalidOrderError("carrier larger than supported desk scale");
    }
    order_ = static_cast<std::uint32_t>(order);
    radix_.assign(orders_.size(), 1);
    for (std::size_t i = orders_.size(); i-- > 0;) {
        if (i + 1 < orders_.size()) radix_[i] = radix_[i + 1] * orders_[i + 1];
    }
}

Elem AbGroup::add(Elem a, Elem b) const {
    Elem out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::uint32_t ai = (a / radix_[i]) % orders_[i];
        std::uint32_t bi = (b / radix_[i]) % orders_[i];
        out += ((ai + bi) % orders_[i]) * radix_[i];
    }
    return out;
}

Elem AbGroup::neg(Elem a) const {
    Elem out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::uint32_t ai = (a / radix_[i]) % orders_[i];
        out += ((orders_[i] - ai) % orders_[i]) * radix_[i];
    }
    return out;
}

Elem AbGroup::scale(std::int64_t k, Elem a) const {
    Elem out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::int64_t ai = (a / radix_[i]) % orders_[i];
        std::int64_t v = (ai * k) % orders_[i];
        if (v < 0) v += orders_[i];
        out += static_cast<std::uint32_t>(v) * radix_[i];
    }
    return out;
}

std::uint32_t AbGroup::elem_order(Elem a) const {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::uint32_t ai = (a / radix_[i]) % orders_[i];
        std::uint32_t oi = orders_[i] / std::gcd(orders_[i], ai == 0 ? orders_[i] : ai);
        ord = std::lcm(ord, static_cast<std::uint64_t>(oi));
    }
    return static_cast<std::uint32_t>(ord);
}

std::vector<std::uint32_t> AbGroup::coords(Elem a) const {
    std::vector<std::uint32_t> c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = (a / radix_[i]) % orders_[i];
    return c;
}

Elem AbGroup::from_coords(const std::vector<std::int64_t>& c) const {
    if (c.size() != orders_.size())
        throw InvalidOrderError("coordinate vector has wrong length");
    Elem out = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        std::int64_t v = c[i] % orders_[i];
        if (v < 0) v += orders_[i];
        out += static_cast<std::uint32_t>(v) * radix_[i];
    }
    return out;
}

Elem AbGroup::basis(std::size_t i) const { return radix_.at(i); }

std::string coords_string(const AbGroup& g, Elem a) {
    if (g.rank() == 0) return "()";
    auto c = g.coords(a);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    s += ")";
    return s;
}

std::vector<Elem> subgroup_closure(const AbGroup& g, const std::vector<Elem>& generators) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Elem> list{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < list.size(); ++head) {
        for (Elem gen : generators) {
            Elem y = g.add(list[head], gen);
            if (!seen[y]) {
                seen[y] = 1;
                list.push_back(y);
            }
        }
    }
    std::sort(list.begin(), list.end());
    return list;
}

std::vector<Elem> generating_sequence(const AbGroup& g, std::optional<Elem> first) {
    std::vector<Elem> gens;
    std::vector<char> member(g.order(), 0);
    member[0] = 1;
    std::uint32_t count = 1;

    auto absorb = [&](Elem x) {
        gens.push_back(x);
        // extend the running subgroup by <x>
        std::vector<Elem> base;
        for (Elem e = 0; e < g.order(); ++e)
            if (member[e]) base.push_back(e);
        std::uint32_t ord = g.elem_order(x);
        Elem mult = 0;
        for (std::uint32_t k = 1; k < ord; ++k) {
            mult = g.add(mult, x);
            for (Elem b : base) {
                Elem y = g.add(b, mult);
                if (!member[y]) {
                    member[y] = 1;
                    ++count;
                }
            }
        }
    };

    if (first && *first != 0) absorb(*first);
    while (count < g.order()) {
        Elem next = 0;
        while (member[next]) ++next;
        absorb(next);
    }
    return gens;
}

namespace {

using AddFn = std::function<Elem(Elem, Elem)>;

std::uint32_t local_order(Elem x, Elem zero, const AddFn& add) {
    std::uint32_t k = 1;
    Elem acc = x;
    while (acc != zero) {
        acc = add(acc, x);
        ++k;
    }
    return k;
}

// Cyclic decomposition of a finite abelian group given by an explicit element
// list and addition. Peels off a maximal-order cyclic summand and recurses on
// the quotient, lifting quotient generators to elements of equal order.
std::vector<Elem> decompose_abelian(const std::vector<Elem>& members, Elem zero, const AddFn& add) {
    if (members.size() <= 1) return {};

    Elem g = zero;
    std::uint32_t gord = 1;
    for (Elem x : members) {
        std::uint32_t o = local_order(x, zero, add);
        if (o > gord) {
            g = x;
            gord = o;
        }
    }

    // coset representative = smallest id in x + <g>
    std::map<Elem, Elem> rep;
    for (Elem x : members) {
        Elem best = x, cur = x;
        for (std::uint32_t k = 1; k < gord; ++k) {
            cur = add(cur, g);
            best = std::min(best, cur);
        }
        rep[x] = best;
    }

    std::set<Elem> qset;
    for (const auto& [x, r] : rep) qset.insert(r);
    std::vector<Elem> qmembers(qset.begin(), qset.end());
    AddFn qadd = [&add, &rep](Elem a, Elem b) { return rep.at(add(a, b)); };
    Elem qzero = rep.at(zero);

    std::vector<Elem> result{g};
    for (Elem q : decompose_abelian(qmembers, qzero, qadd)) {
        std::uint32_t e = local_order(q, qzero, qadd);
        Elem lift = q, cur = q, best = 0;
        bool found = false;
        for (std::uint32_t k = 0; k < gord; ++k) {
            if (k) cur = add(cur, g);
            if (local_order(cur, zero, add) == e && (!found || cur < best)) {
                best = cur;
                found = true;
            }
        }
        (void)lift;
        if (!found) throw Error("internal: subgroup decomposition lift missing");
        result.push_back(best);
    }
    return result;
}

}  // namespace

SubgroupPresentation present_subgroup(const AbGroup& ambient, const std::vector<Elem>& elements) {
    AddFn add = [&ambient](Elem a, Elem b) { return ambient.add(a, b); };
    std::vector<Elem> gens = decompose_abelian(elements, 0, add);

    std::vector<std::uint32_t> orders;
    orders.reserve(gens.size());
    for (Elem g : gens) orders.push_back(ambient.elem_order(g));

    AbGroup group(orders);
    std::vector<Elem> to_ambient(group.order());
    std::vector<std::int64_t> from_ambient(ambient.order(), -1);
    for (Elem idx = 0; idx < group.order(); ++idx) {
        auto c = group.coords(idx);
        Elem amb = 0;
        for (std::size_t i = 0; i < gens.size(); ++i)
            amb = ambient.add(amb, ambient.scale(c[i], gens[i]));
        to_ambient[idx] = amb;
        if (from_ambient[amb] != -1)
            throw Error("internal: subgroup decomposition not injective");
        from_ambient[amb] = idx;
    }
    if (group.order() != elements.size())
        throw Error("internal: subgroup decomposition has wrong order");
    for (Elem e : elements)
        if (from_ambient[e] == -1) throw Error("internal: subgroup decomposition misses an element");

    return SubgroupPresentation{std::move(group), std::move(to_ambient), std::move(from_ambient)};
}

}  // namespace gmr
