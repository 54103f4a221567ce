#pragma once

#include <memory>
#include <vector>

#include "gmr/bimodule.hpp"

namespace gmr {

/// Morita context (R, S, M, N, [,], (,)). The pairings are stored as full
/// bilinear tables on carrier pairs; the tensor product is never materialized,
/// balance ([ms,n] = [m,sn]) is checked explicitly instead.
class MoritaContext {
public:
    using Ptr = std::shared_ptr<const MoritaContext>;

    /// Validates wiring and all context axioms; throws on failure.
    static Ptr create(FinRing::Ptr R, FinRing::Ptr S, Bimodule::Ptr M, Bimodule::Ptr N,
                      std::vector<Elem> bracket, std::vector<Elem> paren);

    /// Wiring is still enforced, axioms are not; build_context_ring refuses
    /// such contexts. For validator tests.
    static Ptr create_unchecked(FinRing::Ptr R, FinRing::Ptr S, Bimodule::Ptr M, Bimodule::Ptr N,
                                std::vector<Elem> bracket, std::vector<Elem> paren);

    /// Pairings given on basis pairs, extended bi-additively.
    static Ptr from_basis_pairings(FinRing::Ptr R, FinRing::Ptr S, Bimodule::Ptr M,
                                   Bimodule::Ptr N, const std::vector<Elem>& bracket_basis,
                                   const std::vector<Elem>& paren_basis);

    static Ptr zero_maps(FinRing::Ptr R, FinRing::Ptr S, Bimodule::Ptr M, Bimodule::Ptr N);

    const FinRing::Ptr& R() const { return R_; }
    const FinRing::Ptr& S() const { return S_; }
    const Bimodule::Ptr& M() const { return M_; }
    const Bimodule::Ptr& N() const { return N_; }

    Elem bracket(Elem m, Elem n) const { return bracket_[std::size_t(m) * N_->order() + n]; }
    Elem paren(Elem n, Elem m) const { return paren_[std::size_t(n) * M_->order() + m]; }
    const std::vector<Elem>& bracket_table() const { return bracket_; }
    const std::vector<Elem>& paren_table() const { return paren_; }

    bool bracket_is_zero() const;
    bool paren_is_zero() const;
    bool validated() const { return validated_; }

private:
    MoritaContext(FinRing::Ptr R, FinRing::Ptr S, Bimodule::Ptr M, Bimodule::Ptr N,
                  std::vector<Elem> bracket, std::vector<Elem> paren);

    FinRing::Ptr R_, S_;
    Bimodule::Ptr M_, N_;
    std::vector<Elem> bracket_;  // |M| x |N| -> R
    std::vector<Elem> paren_;    // |N| x |M| -> S
    bool validated_ = false;
};

/// Per-axiom report: bi-additivity, balance, one-sided linearity of both
/// pairings, and the associativity conditions [m,n]m' = m(n,m') and
/// n[m,n'] = (n,m)n', with witnesses.
ValidationReport validate_context(const MoritaContext& ctx);

/// True iff the bracket image additively generates R and the paren image
/// additively generates S.
bool is_strict(const MoritaContext& ctx);

/// The swapped context (S, R, N, M, paren, bracket).
MoritaContext::Ptr context_transpose(const MoritaContext::Ptr& ctx);

/// The full matrix context (R, R, R, R, mult, mult); its ring is M_2(R).
MoritaContext::Ptr full_matrix_context(const FinRing::Ptr& r);

/// (R, S, M, 0, 0, 0); its ring is the generalized upper triangular ring.
MoritaContext::Ptr triangular_context(const FinRing::Ptr& R, const FinRing::Ptr& S,
                                      const Bimodule::Ptr& M);

enum class Grade { minus_one, zero, plus_one, mixed };

/// The context ring T: quadruples (r, m, n, s) as formal 2x2 matrices, with
/// the realized FinRing view on the product carrier.
class ContextRing {
public:
    using Ptr = std::shared_ptr<const ContextRing>;

    struct Quad {
        Elem r, m, n, s;
        bool operator==(const Quad&) const = default;
    };

    /// Refuses contexts that were not validated.
    static Ptr build(const MoritaContext::Ptr& ctx);

    /// Builds even from unvalidated contexts; the realized ring is unchecked.
    static Ptr build_unchecked(const MoritaContext::Ptr& ctx);

    const MoritaContext::Ptr& context() const { return ctx_; }
    const FinRing::Ptr& ring() const { return ring_; }
    std::uint32_t order() const { return ring_->order(); }

    Quad split(Elem t) const;
    Elem fuse(const Quad& q) const;
    Elem fuse(Elem r, Elem m, Elem n, Elem s) const { return fuse(Quad{r, m, n, s}); }

    Elem e11() const { return fuse(ctx_->R()->one(), 0, 0, 0); }
    Elem e22() const { return fuse(0, 0, 0, ctx_->S()->one()); }

    /// Grade tag; the zero element reports grade 0 by convention.
    Grade grade_of(Elem t) const;

    /// Membership in the homogeneous component T_i (i in {-1,0,1}); zero
    /// belongs to every component.
    bool in_component(Elem t, int i) const;

    /// All elements of T_i, ascending (includes zero).
    std::vector<Elem> homogeneous_component(int i) const;

private:
    ContextRing(MoritaContext::Ptr ctx, FinRing::Ptr ring);

    MoritaContext::Ptr ctx_;
    FinRing::Ptr ring_;
    std::uint32_t sm_, sn_, ss_;  // strides
};

enum class IdempotentClass { zero, one, type1, type2, other };

/// Classification of an idempotent of T by its diagonal; throws on
/// non-idempotent input.
IdempotentClass classify_idempotent(const ContextRing& T, Elem e);

/// Central idempotents of T characterized on the context data: diagonal pairs
/// (r, s) of central idempotents with rm = ms for all m and sn = nr for all n.
std::vector<Elem> central_idempotents_via_lemma(const ContextRing& T);

struct PeirceDecomposition {
    MoritaContext::Ptr context;
    ContextRing::Ptr ring;
    RingIso witness;  // A -> realized context ring
};

/// Peirce decomposition of A along the system {e, 1-e}; e must be a
/// nontrivial idempotent.
PeirceDecomposition peirce_decompose(const FinRing::Ptr& A, Elem e);

}  // namespace gmr
