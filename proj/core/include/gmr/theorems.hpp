#pragma once

#include <string>

#include "gmr/sixtuple.hpp"

namespace gmr {

struct HypothesisCheck {
    std::string name;
    bool passed = false;
};

enum class VerdictStatus { holds, refuted, not_applicable };

/// Machine verdict for one claim instance. A failed hypothesis always yields
/// not_applicable, never refuted.
struct Verdict {
    std::string claim;
    std::string subject;
    std::vector<HypothesisCheck> hypotheses;
    VerdictStatus status = VerdictStatus::not_applicable;
    std::vector<std::string> notes;
    std::int64_t micros = 0;

    bool applicable() const {
        for (const auto& h : hypotheses)
            if (!h.passed) return false;
        return true;
    }
    bool refuted() const { return status == VerdictStatus::refuted; }
};

std::string to_string(VerdictStatus s);

// Claim identifiers used by the CLI `verify` subcommand.
namespace claims {
inline constexpr const char* strict_graded = "strict-graded";
inline constexpr const char* central_idempotents = "central-idempotents";
inline constexpr const char* indecomposable_context = "indecomposable-context";
inline constexpr const char* semigraded_classification = "semigraded-classification";
inline constexpr const char* zero_maps_complete = "zero-maps-complete";
inline constexpr const char* inner_obstruction = "inner-obstruction";
inline constexpr const char* group_structure = "group-structure";
inline constexpr const char* decomposable_swap = "decomposable-swap";
inline constexpr const char* regular_module_indecomposable = "regular-module-indecomposable";
}  // namespace claims

/// Strict contexts force graded behavior: every structured isomorphism is
/// graded or anti-graded and its constants vanish.
Verdict verify_strict_implies_graded(const ContextRing::Ptr& T, const ContextRing::Ptr& Tp,
                                     const IsoSearchOptions& opts = {});

/// The diagonal characterization of central idempotents matches the
/// brute-force scan on the realized ring.
Verdict verify_central_idempotent_lemma(const ContextRing::Ptr& T);

/// Indecomposable diagonal rings with a nonzero off-diagonal bimodule give an
/// indecomposable context ring.
Verdict verify_indecomposability(const ContextRing::Ptr& T);

/// With indecomposable R', S' and a nonzero off-diagonal component, class-0
/// tuples realize exactly the semigraded isomorphisms and class-1 tuples
/// exactly the anti-semigraded ones; graded isomorphisms are structured.
Verdict verify_semigraded_theorem(const ContextRing::Ptr& T, const ContextRing::Ptr& Tp,
                                  const IsoSearchOptions& opts = {});

/// With trivial-idempotent diagonal rings and zero pairings on both sides,
/// every ring isomorphism is structured: Iso_0 = Iso, element for element.
Verdict verify_zero_maps_theorem(const ContextRing::Ptr& T, const ContextRing::Ptr& Tp,
                                 const IsoSearchOptions& opts = {});

/// With a nonzero pairing, some inner automorphism by a unit (1, m; 0, 1)
/// fails the membership test entirely, so Aut_0 is a proper subgroup.
Verdict verify_nonzero_maps_obstruction(const ContextRing::Ptr& T,
                                        const IsoSearchOptions& opts = {});

/// Aut_0 and Aut_g are subgroups of Aut; the class-0 and graded parts are
/// normal in them.
Verdict verify_group_structure(const ContextRing::Ptr& T, const IsoSearchOptions& opts = {});

/// For T with R = S x S and zero bimodules, the coordinate swap of the two
/// R-factors is a graded automorphism that is not structured.
Verdict verify_decomposable_remark(const ContextRing::Ptr& T, const FinRing::Ptr& factor,
                                   const IsoSearchOptions& opts = {});

/// A decomposable R still yields an indecomposable context ring when M = R
/// (left regular, right action through Z/char(R)) and N = 0.
Verdict verify_example_3_4(const FinRing::Ptr& R, const IsoSearchOptions& opts = {});

}  // namespace gmr
