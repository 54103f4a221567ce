#pragma once

#include <optional>

#include "gmr/ringmap.hpp"

namespace gmr {

enum class TupleKind { class0, class1 };

/// The 6-tuple data of a structured isomorphism between context rings.
/// class0: (gamma, delta, u, v, m0, n0) with gamma: R->R', delta: S->S',
/// u: M->M', v: N->N' semilinear isomorphisms and constants m0 in M',
/// n0 in N'. class1: (rho, sigma, mu, nu, mstar, nstar) with rho: R->S',
/// sigma: S->R', mu: M->N', nu: N->M' and constants in M' and N'.
class SixTuple {
public:
    static SixTuple class0(ContextRing::Ptr source, ContextRing::Ptr target, RingIso gamma,
                           RingIso delta, BimoduleMap u, BimoduleMap v, Elem m0, Elem n0);
    static SixTuple class1(ContextRing::Ptr source, ContextRing::Ptr target, RingIso rho,
                           RingIso sigma, BimoduleMap mu, BimoduleMap nu, Elem mstar, Elem nstar);

    static SixTuple identity(const ContextRing::Ptr& T);

    TupleKind kind() const { return kind_; }
    const ContextRing::Ptr& source() const { return src_; }
    const ContextRing::Ptr& target() const { return dst_; }

    // class0 accessors
    const RingIso& gamma() const { return ring_a_; }
    const RingIso& delta() const { return ring_b_; }
    const BimoduleMap& u() const { return mod_a_; }
    const BimoduleMap& v() const { return mod_b_; }
    Elem m0() const { return c_m_; }
    Elem n0() const { return c_n_; }

    // class1 accessors (same slots, class-1 reading)
    const RingIso& rho() const { return ring_a_; }
    const RingIso& sigma() const { return ring_b_; }
    const BimoduleMap& mu() const { return mod_a_; }
    const BimoduleMap& nu() const { return mod_b_; }
    Elem mstar() const { return c_m_; }
    Elem nstar() const { return c_n_; }

    bool operator==(const SixTuple& o) const {
        return kind_ == o.kind_ && src_ == o.src_ && dst_ == o.dst_ && ring_a_ == o.ring_a_ &&
               ring_b_ == o.ring_b_ && mod_a_ == o.mod_a_ && mod_b_ == o.mod_b_ &&
               c_m_ == o.c_m_ && c_n_ == o.c_n_;
    }

private:
    SixTuple(TupleKind kind, ContextRing::Ptr src, ContextRing::Ptr dst, RingIso a, RingIso b,
             BimoduleMap ma, BimoduleMap mb, Elem cm, Elem cn);

    TupleKind kind_;
    ContextRing::Ptr src_, dst_;
    RingIso ring_a_, ring_b_;
    BimoduleMap mod_a_, mod_b_;
    Elem c_m_, c_n_;  // constants in M' and N'
};

/// Per-condition report: component maps are semilinear isomorphisms with the
/// right wiring, the two annihilator conditions on the constants, and the
/// pairing-compatibility condition (short-circuited when both contexts have
/// zero pairings).
ValidationReport validate_six_tuple(const SixTuple& t);

bool six_tuple_valid(const SixTuple& t);

/// The ring map defined by the tuple; a verified isomorphism for valid
/// tuples. Refuses invalid tuples.
RingMap realize(const SixTuple& t);

struct Membership {
    std::optional<SixTuple> class0;
    std::optional<SixTuple> class1;
    bool neither() const { return !class0 && !class1; }
    bool both() const { return class0 && class1; }
};

/// Decides structured membership of a verified isomorphism by reading the
/// candidate tuple off phi(E11) and the homogeneous pieces, validating it and
/// realizing back. In the degenerate case M' = N' = 0 both classes can hold
/// and both tuples are reported.
Membership membership_test(const RingMap& phi);

/// t1 followed by t2. Kinds combine as class0 when equal, class1 otherwise.
SixTuple compose(const SixTuple& t1, const SixTuple& t2);

SixTuple invert(const SixTuple& t);

struct Iso0 {
    std::vector<SixTuple> class0;
    std::vector<SixTuple> class1;
    std::size_t size() const { return class0.size() + class1.size(); }
};

/// All valid tuples of both classes between two context rings, by iterating
/// component isomorphisms and the annihilator constants. Deterministic order.
Iso0 enumerate_iso0(const ContextRing::Ptr& T, const ContextRing::Ptr& Tp,
                    const IsoSearchOptions& opts = {});

}  // namespace gmr
