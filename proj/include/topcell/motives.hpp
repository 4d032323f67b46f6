#pragma once

#include "topcell/witt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace topcell {

enum class TriState { yes, no, unknown };
const char* tristate_name(TriState t);

enum class BaseField { alg_closed_char_ne_2, other };
const char* base_field_name(BaseField f);

struct PicRationalCurveData {
    bool pic_spanned_by_rational_curves = false;
    bool ample_sum_of_rational_curves = false;
    bool all_kc_ne_minus2 = false;
};

struct SurfaceDescriptor {
    std::string name;
    Int c1_squared = 0;
    Int c2 = 0;
    TriState c1_even = TriState::unknown;
    TriState has_rational_point = TriState::unknown;
    TriState canonical_trivial = TriState::unknown;
    TriState h1_et_square_vanishes = TriState::unknown;
    BaseField base_field = BaseField::other;
    std::optional<PicRationalCurveData> pic;
};

struct CurveDescriptor {
    std::string name;
    unsigned genus = 0;
    TriState has_theta_char = TriState::unknown;
    TriState has_rational_point = TriState::unknown;
    BaseField base_field = BaseField::other;
};

enum class Outcome { splits, not_split, obstructed_two_piece, undecided, inconsistent_input };
const char* outcome_name(Outcome o);

struct Verdict {
    std::string name;
    Outcome outcome = Outcome::undecided;
    std::vector<std::string> witness;  // rule applied plus the checked conditions
};

/// Top-cell splitting verdict for a surface. Necessary congruences are
/// checked before the sufficient criteria so contradictory inputs surface
/// as InconsistentInput.
Verdict surface_verdict(const SurfaceDescriptor& d);

/// Top-cell splitting verdict for a curve (theta-characteristic criterion,
/// with the canonical theta over an algebraically closed field of
/// characteristic != 2 as fallback).
Verdict curve_verdict(const CurveDescriptor& d);

/// Rational-curve Picard obstruction: with all three flags the surface
/// admits no splitting into two pieces both carrying nontrivial H^{2,1}.
/// Compatible with a top-cell Splits verdict.
Verdict beauville_voisin_obstruction(const SurfaceDescriptor& d);

/// Graded stand-in for the realization a correspondence acts on.
struct Realization {
    std::vector<GroupPtr> weights;
};

/// Named endomorphism given by one block per weight.
struct Projector {
    std::string name;
    std::vector<Homo> blocks;
};

Projector projector_zero(const Realization& r, std::string name);
Projector projector_identity(const Realization& r, std::string name);
Projector compose(const Projector& a, const Projector& b);
Projector add(const Projector& a, const Projector& b);
Projector subtract(const Projector& a, const Projector& b);
bool projector_equal(const Projector& a, const Projector& b);
bool projector_is_zero(const Projector& a);

struct ProjectorReport {
    struct Item {
        std::string description;
        bool pass = false;
    };
    std::vector<Item> items;
    bool all_pass() const;
};

/// Idempotency of each projector, pairwise orthogonality, and idempotency
/// of the complement delta - sum.
ProjectorReport projector_check(const Realization& r, const std::vector<Projector>& ps,
                                const Projector& delta);

struct CurvePreset {
    Realization realization;
    Projector pi0, pi1, pi2, delta;
};

/// Weight 0: Z, weight 1: Z^{2g} (the Jacobian slot), weight 2: Z, with the
/// three diagonal projectors summing to the identity.
CurvePreset curve_preset(unsigned genus);

struct Pi3Report {
    bool zero = false;
    std::string detail;
};

/// Checks pi1^t - pi1 . pi1^t == 0 blockwise (the adjoint family is
/// supplied by the caller).
Pi3Report jacobian_pi3_check(const Realization& r, const Projector& pi1,
                             const Projector& pi1_adjoint);

struct AbelianSurfacePreset {
    Realization realization;
    Projector pi1, pi1_adjoint;
};

AbelianSurfacePreset abelian_surface_preset();

struct PipelineReport {
    bool splits = false;
    bool rho_injective = false;
    TriState c1_even = TriState::unknown;
    struct CycleResult {
        std::string name;
        std::vector<Int> sq2_value;  // canonical form in the Sq2 target
        LiftVerdict lift;
    };
    std::vector<CycleResult> cycles;
    std::vector<Int> obstruction;  // first nonzero Sq2 value, when not splitting
    std::string detail;
};

/// Diagonal-decomposition lifting pipeline on a curve-shaped key diagram:
/// verifies rho injectivity, evaluates Sq2 on the supplied decomposition
/// cycles, and runs the lifting decision on each.
PipelineReport chowwitt_lift_pipeline(TriState c1_even, const DiagramSpec& diagram,
                                      const std::vector<std::pair<std::string, std::vector<Int>>>& cycles);

struct Catalog {
    std::vector<SurfaceDescriptor> surfaces;
    std::vector<CurveDescriptor> curves;
};

/// Catalog shipped with the library (also installed as data/catalog.json).
const char* builtin_catalog_json();

}  // namespace topcell
