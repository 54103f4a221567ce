#include "gmr/finring.hpp"

#include <algorithm>

namespace gmr {

namespace {

constexpr std::uint64_t kEagerTripleBudget = 4096;
constexpr std::size_t kSampleCount = 4096;

std::string triple_witness(const FinRing& r, Elem a, Elem b, Elem c, Elem lhs, Elem rhs) {
    const AbGroup& g = r.carrier();
    return "(a,b,c)=(" + coords_string(g, a) + "," + coords_string(g, b) + "," +
           coords_string(g, c) + "): " + coords_string(g, lhs) + " != " + coords_string(g, rhs);
}

// Deterministic triple sampler (fixed LCG), for spot checks on large carriers.
struct TripleSampler {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint32_t next(std::uint32_t n) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>((state >> 33) % n);
    }
};

CheckResult check_associativity(const FinRing& r, bool full) {
    const std::uint32_t n = r.order();
    CheckResult res{full ? "associativity" : "associativity (sampled)", true, ""};
    auto test = [&](Elem a, Elem b, Elem c) {
        Elem lhs = r.mul(r.mul(a, b), c);
        Elem rhs = r.mul(a, r.mul(b, c));
        if (lhs != rhs) {
            res.passed = false;
            res.witness = triple_witness(r, a, b, c, lhs, rhs);
            return false;
        }
        return true;
    };
    if (full) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (!test(a, b, c)) return res;
    } else {
        TripleSampler s;
        for (std::size_t i = 0; i < kSampleCount; ++i)
            if (!test(s.next(n), s.next(n), s.next(n))) return res;
    }
    return res;
}

CheckResult check_identity(const FinRing& r) {
    CheckResult res{"identity axioms", true, ""};
    if (r.one() == r.zero()) {
        res.passed = false;
        res.witness = "one equals zero";
        return res;
    }
    for (Elem x = 0; x < r.order(); ++x) {
        if (r.mul(r.one(), x) != x || r.mul(x, r.one()) != x) {
            res.passed = false;
            res.witness = "x=" + coords_string(r.carrier(), x);
            return res;
        }
    }
    return res;
}

CheckResult check_distributivity(const FinRing& r) {
    CheckResult res{"distributivity (sampled)", true, ""};
    const std::uint32_t n = r.order();
    TripleSampler s;
    std::size_t count = std::min<std::size_t>(kSampleCount, std::size_t(n) * n * n);
    for (std::size_t i = 0; i < count; ++i) {
        Elem a = s.next(n), b = s.next(n), c = s.next(n);
        Elem l1 = r.mul(a, r.add(b, c));
        Elem r1 = r.add(r.mul(a, b), r.mul(a, c));
        Elem l2 = r.mul(r.add(a, b), c);
        Elem r2 = r.add(r.mul(a, c), r.mul(b, c));
        if (l1 != r1 || l2 != r2) {
            res.passed = false;
            res.witness = triple_witness(r, a, b, c, l1 != r1 ? l1 : l2, l1 != r1 ? r1 : r2);
            return res;
        }
    }
    return res;
}

void construction_guard(const FinRing& r) {
    ValidationReport rep;
    rep.checks.push_back(check_identity(r));
    rep.checks.push_back(check_distributivity(r));
    std::uint64_t triples = std::uint64_t(r.order()) * r.order() * r.order();
    rep.checks.push_back(check_associativity(r, triples <= kEagerTripleBudget));
    if (!rep.ok()) throw ValidationError(std::move(rep));
}

}  // namespace

std::string ValidationReport::summary() const {
    std::string s;
    for (const auto& c : checks) {
        if (!s.empty()) s += "; ";
        s += c.name + (c.passed ? ": pass" : ": FAIL" + (c.witness.empty() ? "" : " at " + c.witness));
    }
    return s;
}

FinRing::FinRing(AbGroup g, std::vector<Elem> table, Elem one)
    : add_(std::move(g)), order_(add_.order()), mul_(std::move(table)), one_(one) {
    if (mul_.size() != std::size_t(order_) * order_)
        throw InvalidOrderError("multiplication table has wrong size");
    for (Elem v : mul_)
        if (v >= order_) throw InvalidOrderError("multiplication table entry out of range");
    if (one_ >= order_) throw InvalidOrderError("identity element out of range");
}

FinRing::Ptr FinRing::cyclic(std::uint32_t n) {
    if (n < 2) throw InvalidOrderError("cyclic ring needs n >= 2, got " + std::to_string(n));
    AbGroup g({n});
    std::vector<Elem> table(std::size_t(n) * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            table[std::size_t(a) * n + b] = static_cast<Elem>((std::uint64_t(a) * b) % n);
    return from_table(std::move(g), std::move(table), 1);
}

FinRing::Ptr FinRing::direct_product(const Ptr& a, const Ptr& b) {
    std::vector<std::uint32_t> orders = a->carrier().cyclic_orders();
    const auto& ob = b->carrier().cyclic_orders();
    orders.insert(orders.end(), ob.begin(), ob.end());
    AbGroup g(std::move(orders));
    const std::uint32_t na = a->order(), nb = b->order(), n = na * nb;
    std::vector<Elem> table(std::size_t(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            Elem xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            table[std::size_t(x) * n + y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
        }
    return from_table(std::move(g), std::move(table), a->one() * nb + b->one());
}

FinRing::Ptr FinRing::from_basis_products(AbGroup carrier, const std::vector<Elem>& basis_products,
                                          Elem one) {
    const std::size_t k = carrier.rank();
    if (basis_products.size() != k * k)
        throw InvalidOrderError("basis product table must be rank x rank");
    const std::uint32_t n = carrier.order();
    // stage 1: products of arbitrary elements with basis vectors
    std::vector<Elem> with_basis(std::size_t(n) * k, 0);
    for (Elem a = 0; a < n; ++a) {
        auto ca = carrier.coords(a);
        for (std::size_t j = 0; j < k; ++j) {
            Elem acc = 0;
            for (std::size_t i = 0; i < k; ++i)
                acc = carrier.add(acc, carrier.scale(ca[i], basis_products[i * k + j]));
            with_basis[std::size_t(a) * k + j] = acc;
        }
    }
    std::vector<Elem> table(std::size_t(n) * n, 0);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            auto cb = carrier.coords(b);
            Elem acc = 0;
            for (std::size_t j = 0; j < k; ++j)
                acc = carrier.add(acc, carrier.scale(cb[j], with_basis[std::size_t(a) * k + j]));
            table[std::size_t(a) * n + b] = acc;
        }
    return from_table(std::move(carrier), std::move(table), one);
}

FinRing::Ptr FinRing::from_table(AbGroup carrier, std::vector<Elem> table, Elem one) {
    Ptr r(new FinRing(std::move(carrier), std::move(table), one));
    construction_guard(*r);
    return r;
}

FinRing::Ptr FinRing::from_table_unchecked(AbGroup carrier, std::vector<Elem> table, Elem one) {
    return Ptr(new FinRing(std::move(carrier), std::move(table), one));
}

ValidationReport validate_ring(const FinRing& r) {
    ValidationReport rep;
    rep.checks.push_back(check_identity(r));
    rep.checks.push_back(check_distributivity(r));
    rep.checks.push_back(check_associativity(r, true));
    return rep;
}

std::vector<Elem> idempotents(const FinRing& r) {
    std::vector<Elem> out;
    for (Elem x = 0; x < r.order(); ++x)
        if (r.mul(x, x) == x) out.push_back(x);
    return out;
}

std::vector<Elem> central_idempotents(const FinRing& r) {
    std::vector<Elem> out;
    for (Elem x : idempotents(r)) {
        bool central = true;
        for (Elem y = 0; y < r.order() && central; ++y)
            central = r.mul(x, y) == r.mul(y, x);
        if (central) out.push_back(x);
    }
    return out;
}

bool is_indecomposable(const FinRing& r) { return central_idempotents(r).size() == 2; }

bool has_only_trivial_idempotents(const FinRing& r) { return idempotents(r).size() == 2; }

std::optional<Elem> inverse_of(const FinRing& r, Elem x) {
    for (Elem y = 0; y < r.order(); ++y)
        if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return y;
    return std::nullopt;
}

std::vector<std::pair<Elem, Elem>> units(const FinRing& r) {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem x = 0; x < r.order(); ++x)
        if (auto inv = inverse_of(r, x)) out.emplace_back(x, *inv);
    return out;
}

RingIso::RingIso(FinRing::Ptr source, FinRing::Ptr target, std::vector<Elem> table)
    : src_(std::move(source)), dst_(std::move(target)), table_(std::move(table)) {
    ValidationReport rep;
    const std::uint32_t n = src_->order();
    CheckResult bij{"bijective", true, ""};
    if (table_.size() != n || dst_->order() != n) {
        bij.passed = false;
        bij.witness = "carrier sizes differ";
    } else {
        std::vector<char> hit(n, 0);
        for (Elem x = 0; x < n; ++x) {
            if (table_[x] >= n || hit[table_[x]]) {
                bij.passed = false;
                bij.witness = "x=" + coords_string(src_->carrier(), x);
                break;
            }
            hit[table_[x]] = 1;
        }
    }
    rep.checks.push_back(bij);
    if (!bij.passed) throw ValidationError(std::move(rep));

    CheckResult addc{"additive", true, ""};
    for (Elem x = 0; x < n && addc.passed; ++x)
        for (Elem y = 0; y < n; ++y)
            if (table_[src_->add(x, y)] != dst_->add(table_[x], table_[y])) {
                addc.passed = false;
                addc.witness = "(x,y)=(" + coords_string(src_->carrier(), x) + "," +
                               coords_string(src_->carrier(), y) + ")";
                break;
            }
    rep.checks.push_back(addc);

    CheckResult mulc{"multiplicative", true, ""};
    for (Elem x = 0; x < n && mulc.passed; ++x)
        for (Elem y = 0; y < n; ++y)
            if (table_[src_->mul(x, y)] != dst_->mul(table_[x], table_[y])) {
                mulc.passed = false;
                mulc.witness = "(x,y)=(" + coords_string(src_->carrier(), x) + "," +
                               coords_string(src_->carrier(), y) + ")";
                break;
            }
    rep.checks.push_back(mulc);

    CheckResult unital{"unital", table_[src_->one()] == dst_->one(), ""};
    rep.checks.push_back(unital);

    if (!rep.ok()) throw ValidationError(std::move(rep));
}

RingIso RingIso::identity(const FinRing::Ptr& r) {
    std::vector<Elem> t(r->order());
    for (Elem x = 0; x < r->order(); ++x) t[x] = x;
    return RingIso(r, r, std::move(t));
}

RingIso RingIso::inverse() const {
    std::vector<Elem> t(table_.size());
    for (Elem x = 0; x < table_.size(); ++x) t[table_[x]] = x;
    return RingIso(dst_, src_, std::move(t));
}

RingIso compose(const RingIso& f, const RingIso& g) {
    if (f.target() != g.source())
        throw WiringError("ring iso composition endpoints do not match");
    std::vector<Elem> t(f.table().size());
    for (Elem x = 0; x < t.size(); ++x) t[x] = g(f(x));
    return RingIso(f.source(), g.target(), std::move(t));
}

RingIso inner_automorphism(const FinRing::Ptr& r, Elem x) {
    auto inv = inverse_of(*r, x);
    if (!inv)
        throw NotAUnitError("element " + coords_string(r->carrier(), x) + " is not a unit");
    std::vector<Elem> t(r->order());
    for (Elem y = 0; y < r->order(); ++y) t[y] = r->mul(r->mul(x, y), *inv);
    return RingIso(r, r, std::move(t));
}

}  // namespace gmr
