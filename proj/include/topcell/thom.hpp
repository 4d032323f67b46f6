#pragma once

#include "topcell/gring.hpp"

#include <string>

namespace topcell {

/// Sign convention for the Thom class and the projective-bundle relation.
///
/// mixed:       t = (-s)^r + c_1 s^{r-1} + ... + c_r with the relation
///              s^{r+1} + c_1 s^r + ... + c_r s, exactly as displayed in the
///              source computation. At p = 2 the eigen-identity holds for
///              every rank; at p = 3 only for even ranks (s*t is a relation
///              multiple only there), which is why the even-rank reduction
///              exists.
/// alternating: t = sum_j c_j (-s)^{r-j} with the matching alternating
///              relation, under which s*t is a relation multiple for every
///              rank and both eigen-identities hold unconditionally.
enum class SignConvention { mixed, alternating };

const char* sign_convention_name(SignConvention c);

/// Projective-bundle model of the Thom space of a rank-r bundle over the
/// universal base: ring on s (degree 1) and c_1..c_r (degree i) with the
/// rank-(r+1) relation on s, degree cap r+4, and the Thom class built in.
/// effective_rank < rank means c_j = 0 was imposed for j > effective_rank
/// (trivial summands added by stabilization).
struct ThomModel {
    unsigned rank = 0;
    unsigned effective_rank = 0;
    int prime = 0;  // 0, 2 or 3
    SignConvention convention = SignConvention::mixed;
    RingPtr ring;
    RingElement thom_class;
};

ThomModel build_model(unsigned rank, int prime,
                      SignConvention convention = SignConvention::mixed);

/// Rank r+k model with c_{r+1}..c_{r+k} set to zero.
ThomModel stabilize_rank(const ThomModel& model, unsigned k);

struct EigenReport {
    unsigned rank = 0;
    unsigned effective_rank = 0;
    int prime = 0;
    SignConvention convention = SignConvention::mixed;
    std::string identity;
    RingElement residual;
    bool pass = false;      // residual == 0
    bool asserted = false;  // whether the identity is claimed at this rank
};

/// Shift-2 component of the total square of the Thom class minus c_2 * t,
/// computed through the splitting model; claimed zero for every rank.
EigenReport verify_sq4_eigen(const ThomModel& model);

/// Shift-2 component of the total cube operation on the Thom class minus
/// (c_1^2 - 2 c_2) * t; claimed zero for even ranks under the mixed
/// convention and for every rank under the alternating one.
EigenReport verify_p1_eigen(const ThomModel& model);

/// Embeds an element of a lower-rank model ring into a higher-rank one
/// (s -> s, c_i -> c_i); used to compare residuals across stabilization.
RingElement embed_into(const RingElement& e, const ThomModel& target);

}  // namespace topcell
