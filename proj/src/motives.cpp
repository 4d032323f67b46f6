#include "topcell/motives.hpp"

#include <algorithm>
#include <sstream>

namespace topcell {

const char* tristate_name(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        case TriState::unknown: return "unknown";
    }
    return "?";
}

const char* base_field_name(BaseField f) {
    return f == BaseField::alg_closed_char_ne_2 ? "alg_closed_char_ne_2" : "other";
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::splits: return "Splits";
        case Outcome::not_split: return "NotSplit";
        case Outcome::obstructed_two_piece: return "ObstructedTwoPiece";
        case Outcome::undecided: return "Undecided";
        case Outcome::inconsistent_input: return "InconsistentInput";
    }
    return "?";
}

namespace {

Int mod(const Int& x, int m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

Verdict surface_verdict(const SurfaceDescriptor& d) {
    Verdict v;
    v.name = d.name;

    // Necessary congruences for a top-cell splitting.
    std::vector<std::string> violations;
    if (d.c1_even == TriState::no) violations.push_back("c1 is not divisible by 2");
    if (mod(d.c2, 2) != 0) violations.push_back("c2 = " + d.c2.str() + " is odd");
    if (mod(d.c1_squared - 2 * d.c2, 3) != 0)
        violations.push_back("c1^2 - 2*c2 = " + Int(d.c1_squared - 2 * d.c2).str() +
                             " is not divisible by 3");

    // Sufficient criterion: rational point, c1 even, 2*c2 == c1^2.
    bool sufficient = d.has_rational_point == TriState::yes && d.c1_even == TriState::yes &&
                      2 * d.c2 == d.c1_squared;
    // Calabi-Yau route over an algebraically closed field of char != 2.
    bool cy_route = d.base_field == BaseField::alg_closed_char_ne_2 &&
                    d.canonical_trivial == TriState::yes &&
                    d.h1_et_square_vanishes == TriState::yes;

    if (!violations.empty()) {
        if (sufficient || cy_route) {
            v.outcome = Outcome::inconsistent_input;
            v.witness.push_back("necessary congruences fail but a sufficient criterion applies");
            v.witness.insert(v.witness.end(), violations.begin(), violations.end());
            return v;
        }
        v.outcome = Outcome::not_split;
        v.witness.push_back("necessary chern congruences violated");
        v.witness.insert(v.witness.end(), violations.begin(), violations.end());
        return v;
    }

    if (sufficient) {
        v.outcome = Outcome::splits;
        v.witness.push_back("even-c1 tangent criterion");
        v.witness.push_back("rational point: yes");
        v.witness.push_back("c1 divisible by 2");
        v.witness.push_back("2*c2 == c1^2 (" + Int(2 * d.c2).str() + " == " +
                            d.c1_squared.str() + ")");
        return v;
    }

    if (cy_route) {
        v.outcome = Outcome::splits;
        v.witness.push_back("calabi-yau etale criterion");
        v.witness.push_back("base field algebraically closed, characteristic != 2");
        v.witness.push_back("canonical bundle trivial");
        v.witness.push_back("H^1_et(X x X, Z/2) = 0");
        if (2 * d.c2 != d.c1_squared)
            v.witness.push_back("even-c1 tangent criterion inapplicable: 2*c2 != c1^2 (" +
                                Int(2 * d.c2).str() + " != " + d.c1_squared.str() + ")");
        return v;
    }

    v.outcome = Outcome::undecided;
    v.witness.push_back("no criterion applies");
    if (d.c1_even == TriState::unknown) v.witness.push_back("missing: is c1 divisible by 2?");
    if (d.has_rational_point != TriState::yes)
        v.witness.push_back("missing: rational point (" +
                            std::string(tristate_name(d.has_rational_point)) + ")");
    if (2 * d.c2 != d.c1_squared)
        v.witness.push_back("2*c2 != c1^2 (" + Int(2 * d.c2).str() + " != " +
                            d.c1_squared.str() + ")");
    if (d.canonical_trivial != TriState::yes)
        v.witness.push_back("canonical bundle not known trivial");
    else if (d.base_field != BaseField::alg_closed_char_ne_2 ||
             d.h1_et_square_vanishes != TriState::yes)
        v.witness.push_back("calabi-yau route needs an algebraically closed field (char != 2) "
                            "and H^1_et(X x X, Z/2) = 0");
    return v;
}

Verdict curve_verdict(const CurveDescriptor& d) {
    Verdict v;
    v.name = d.name;
    auto gate_rational_point = [&](const char* rule) {
        if (d.has_rational_point == TriState::yes) {
            v.outcome = Outcome::splits;
            v.witness.push_back(rule);
            v.witness.push_back("rational point: yes");
        } else {
            v.outcome = Outcome::undecided;
            v.witness.push_back(rule);
            v.witness.push_back("rational point not known (" +
                                std::string(tristate_name(d.has_rational_point)) + ")");
        }
    };
    switch (d.has_theta_char) {
        case TriState::yes:
            gate_rational_point("theta characteristic: yes");
            return v;
        case TriState::no:
            v.outcome = Outcome::not_split;
            v.witness.push_back("theta characteristic: no (the criterion is an equivalence)");
            return v;
        case TriState::unknown:
            if (d.base_field == BaseField::alg_closed_char_ne_2) {
                gate_rational_point(
                    "canonical theta characteristic over an algebraically closed field, char != 2");
                return v;
            }
            v.outcome = Outcome::undecided;
            v.witness.push_back("theta characteristic unknown and base field gives no canonical one");
            return v;
    }
    return v;
}

Verdict beauville_voisin_obstruction(const SurfaceDescriptor& d) {
    if (!d.pic) fail(errc::missing_pic_data, d.name);
    Verdict v;
    v.name = d.name;
    const PicRationalCurveData& p = *d.pic;
    if (p.pic_spanned_by_rational_curves && p.ample_sum_of_rational_curves &&
        p.all_kc_ne_minus2) {
        v.outcome = Outcome::obstructed_two_piece;
        v.witness.push_back("rational-curve picard obstruction");
        v.witness.push_back("Pic spanned by rational curves");
        v.witness.push_back("an ample divisor is a sum of rational curves");
        v.witness.push_back("every (K.C_i) != -2");
        v.witness.push_back(
            "no splitting into two pieces with both H^{2,1} nontrivial; compatible with a "
            "top-cell splitting");
    } else {
        v.outcome = Outcome::undecided;
        v.witness.push_back("rational-curve picard obstruction inconclusive: some flag is false");
    }
    return v;
}

namespace {

void check_blocks(const Realization& r, const Projector& p) {
    if (p.blocks.size() != r.weights.size())
        fail(errc::shape_mismatch, p.name + ": block count does not match the realization");
    for (size_t w = 0; w < r.weights.size(); ++w) {
        const Homo& b = p.blocks[w];
        if (!b.src()->same_presentation(*r.weights[w]) ||
            !b.dst()->same_presentation(*r.weights[w]))
            fail(errc::shape_mismatch,
                 p.name + ": block " + std::to_string(w) + " is not an endomorphism");
    }
}

}  // namespace

Projector projector_zero(const Realization& r, std::string name) {
    Projector p{std::move(name), {}};
    for (const auto& g : r.weights) p.blocks.push_back(Homo::zero(g, g));
    return p;
}

Projector projector_identity(const Realization& r, std::string name) {
    Projector p{std::move(name), {}};
    for (const auto& g : r.weights) p.blocks.push_back(Homo::identity(g));
    return p;
}

Projector compose(const Projector& a, const Projector& b) {
    if (a.blocks.size() != b.blocks.size()) fail(errc::shape_mismatch, "projector block count");
    Projector p{a.name + "." + b.name, {}};
    for (size_t w = 0; w < a.blocks.size(); ++w)
        p.blocks.push_back(compose(a.blocks[w], b.blocks[w]));
    return p;
}

Projector add(const Projector& a, const Projector& b) {
    if (a.blocks.size() != b.blocks.size()) fail(errc::shape_mismatch, "projector block count");
    Projector p{a.name + "+" + b.name, {}};
    for (size_t w = 0; w < a.blocks.size(); ++w) p.blocks.push_back(a.blocks[w] + b.blocks[w]);
    return p;
}

Projector subtract(const Projector& a, const Projector& b) {
    if (a.blocks.size() != b.blocks.size()) fail(errc::shape_mismatch, "projector block count");
    Projector p{a.name + "-" + b.name, {}};
    for (size_t w = 0; w < a.blocks.size(); ++w) p.blocks.push_back(a.blocks[w] - b.blocks[w]);
    return p;
}

bool projector_equal(const Projector& a, const Projector& b) {
    if (a.blocks.size() != b.blocks.size()) return false;
    for (size_t w = 0; w < a.blocks.size(); ++w)
        if (!a.blocks[w].equal(b.blocks[w])) return false;
    return true;
}

bool projector_is_zero(const Projector& a) {
    return std::all_of(a.blocks.begin(), a.blocks.end(),
                       [](const Homo& h) { return h.is_zero_map(); });
}

bool ProjectorReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
}

ProjectorReport projector_check(const Realization& r, const std::vector<Projector>& ps,
                                const Projector& delta) {
    check_blocks(r, delta);
    for (const auto& p : ps) check_blocks(r, p);
    ProjectorReport report;
    for (const auto& p : ps)
        report.items.push_back(
            {p.name + " idempotent", projector_equal(compose(p, p), p)});
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = 0; j < ps.size(); ++j) {
            if (i == j) continue;
            report.items.push_back({ps[i].name + "." + ps[j].name + " = 0",
                                    projector_is_zero(compose(ps[i], ps[j]))});
        }
    Projector sum = projector_zero(r, "0");
    for (const auto& p : ps) sum = add(sum, p);
    Projector complement = subtract(delta, sum);
    complement.name = "complement";
    report.items.push_back(
        {"complement idempotent", projector_equal(compose(complement, complement), complement)});
    report.items.push_back({"sum + complement = delta",
                            projector_equal(add(sum, complement), delta)});
    return report;
}

CurvePreset curve_preset(unsigned genus) {
    CurvePreset preset;
    preset.realization.weights = {FgAbGroup::free_group(1),
                                  FgAbGroup::free_group(2 * static_cast<size_t>(genus)),
                                  FgAbGroup::free_group(1)};
    const Realization& r = preset.realization;
    preset.pi0 = projector_zero(r, "pi0");
    preset.pi0.blocks[0] = Homo::identity(r.weights[0]);
    preset.pi1 = projector_zero(r, "pi1");
    preset.pi1.blocks[1] = Homo::identity(r.weights[1]);
    preset.pi2 = projector_zero(r, "pi2");
    preset.pi2.blocks[2] = Homo::identity(r.weights[2]);
    preset.delta = projector_identity(r, "delta");
    return preset;
}

Pi3Report jacobian_pi3_check(const Realization& r, const Projector& pi1,
                             const Projector& pi1_adjoint) {
    check_blocks(r, pi1);
    check_blocks(r, pi1_adjoint);
    Projector pi3 = subtract(pi1_adjoint, compose(pi1, pi1_adjoint));
    Pi3Report report;
    report.zero = projector_is_zero(pi3);
    report.detail = report.zero ? "pi1^t - pi1.pi1^t = 0"
                                : "pi1^t - pi1.pi1^t is nonzero";
    return report;
}

AbelianSurfacePreset abelian_surface_preset() {
    AbelianSurfacePreset preset;
    preset.realization.weights = {FgAbGroup::free_group(1), FgAbGroup::free_group(4),
                                  FgAbGroup::free_group(6), FgAbGroup::free_group(4),
                                  FgAbGroup::free_group(1)};
    const Realization& r = preset.realization;
    preset.pi1 = projector_zero(r, "pi1");
    preset.pi1_adjoint = projector_zero(r, "pi1_adjoint");
    // Symmetric idempotent block on the weight-1 slot; its own adjoint.
    IMat block(4, 4);
    block.at(0, 0) = 1;
    block.at(1, 1) = 1;
    preset.pi1.blocks[1] = Homo(r.weights[1], r.weights[1], block);
    preset.pi1_adjoint.blocks[1] = Homo(r.weights[1], r.weights[1], block);
    return preset;
}

PipelineReport chowwitt_lift_pipeline(
    TriState c1_even, const DiagramSpec& diagram,
    const std::vector<std::pair<std::string, std::vector<Int>>>& cycles) {
    diagram.validate();
    const Homo& mod2 = diagram.arrow(arrow_names::mod2).hom;
    const Homo& sq2 = diagram.arrow(arrow_names::sq2).hom;
    const Homo& rho = diagram.arrow(arrow_names::rho).hom;

    PipelineReport report;
    report.c1_even = c1_even;
    report.rho_injective = is_injective(rho);

    bool all_lift = true;
    bool all_sq2_zero = true;
    for (const auto& [name, cycle] : cycles) {
        PipelineReport::CycleResult cr;
        cr.name = name;
        std::vector<Int> value = sq2.apply(mod2.apply(cycle));
        cr.sq2_value = sq2.dst()->canonical_form(value);
        bool zero = sq2.dst()->is_zero_element(value);
        if (!zero && report.obstruction.empty()) report.obstruction = cr.sq2_value;
        all_sq2_zero = all_sq2_zero && zero;
        cr.lift = lift_query(diagram, cycle);
        all_lift = all_lift && cr.lift.outcome == LiftOutcome::lifts;
        report.cycles.push_back(std::move(cr));
    }

    if (!report.rho_injective) {
        report.splits = false;
        report.detail = "rho is not injective; the lifting criterion does not apply";
        return report;
    }
    if (c1_even == TriState::yes && !all_sq2_zero) {
        report.splits = false;
        report.detail = "inconsistent instance: c1 declared even but a Sq2 value is nonzero";
        return report;
    }
    if (all_lift && all_sq2_zero) {
        report.splits = true;
        report.detail = "decomposition lifts to the quadratic refinement; splitting follows";
    } else {
        report.splits = false;
        report.detail = "obstruction class nonzero: the pushforward of the mod-2 first chern "
                        "class obstructs the lift";
    }
    return report;
}

}  // namespace topcell
