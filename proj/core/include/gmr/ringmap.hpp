#pragma once

#include "gmr/context.hpp"

namespace gmr {

/// Explicit function table between two context rings with cached structural
/// flags and grade behavior; all flags come from exhaustive verification.
class RingMap {
public:
    struct GradeProfile {
        bool graded = false;          // phi(T_i) in T'_i for i in {-1,0,1}
        bool antigraded = false;      // phi(T_i) in T'_{-i}
        bool semigraded = false;      // off-diagonal components preserved
        bool antisemigraded = false;  // off-diagonal components swapped
    };

    RingMap(ContextRing::Ptr source, ContextRing::Ptr target, std::vector<Elem> table);

    static RingMap identity(const ContextRing::Ptr& T);
    static RingMap from_ring_iso(const ContextRing::Ptr& source, const ContextRing::Ptr& target,
                                 const RingIso& iso);

    const ContextRing::Ptr& source() const { return src_; }
    const ContextRing::Ptr& target() const { return dst_; }
    Elem operator()(Elem x) const { return table_[x]; }
    const std::vector<Elem>& table() const { return table_; }

    bool additive() const { return additive_; }
    bool multiplicative() const { return multiplicative_; }
    bool unital() const { return unital_; }
    bool bijective() const { return bijective_; }
    bool is_isomorphism() const {
        return additive_ && multiplicative_ && unital_ && bijective_;
    }

    const GradeProfile& grade_profile() const { return grades_; }

    RingMap inverse() const;

    bool operator==(const RingMap& o) const {
        return src_ == o.src_ && dst_ == o.dst_ && table_ == o.table_;
    }

private:
    ContextRing::Ptr src_, dst_;
    std::vector<Elem> table_;
    bool additive_ = false, multiplicative_ = false, unital_ = false, bijective_ = false;
    GradeProfile grades_;
};

/// f then g (the composite g o f).
RingMap compose(const RingMap& f, const RingMap& g);

/// alpha_T: (r,m,n,s) -> (s,n,m,r), a ring isomorphism T -> T^{-1} onto the
/// ring of the transposed context.
RingMap swap_iso(const ContextRing::Ptr& T);

}  // namespace gmr
