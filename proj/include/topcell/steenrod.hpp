#pragma once

#include "topcell/gring.hpp"

#include <map>
#include <vector>

namespace topcell {

/// Context for the total power operation at p in {2,3} on a mod-p ring in
/// which the declared codimension-1 generators x transform as x + x^p.
struct SteenrodContext {
    int prime = 2;
    RingPtr ring;
    std::vector<bool> codim1;  // per generator

    static SteenrodContext make(int prime, RingPtr ring, const std::vector<size_t>& codim1_gens);
    static SteenrodContext all_codim1(int prime, RingPtr ring);
};

/// Result of the total operation, split by codimension shift: at p = 2 the
/// shift-s component is Sq^{2s}, at p = 3 shift 2 is P^1 (odd shifts vanish).
struct OperationResult {
    RingElement input;
    std::map<unsigned, RingElement> components;

    RingElement component(unsigned shift) const;
    RingElement total() const;
};

OperationResult total_op(const SteenrodContext& ctx, const RingElement& e);

/// Rewrites a symmetric polynomial in an all-degree-1 ring as a polynomial
/// in elementary symmetric classes via leading-term elimination; images[i]
/// must be the class standing for e_{i+1} in the target ring.
RingElement symmetric_to_elementary(const RingElement& sym, const RingPtr& target,
                                    const std::vector<RingElement>& images);

/// e_i(x_1..x_r) in an all-degree-1 ring on r generators.
RingElement elementary_symmetric(const RingPtr& ring, unsigned i);

/// Universal mod-p ring Z/p[c_1..c_r] with deg c_i = i; cap defaults to r+4.
RingPtr universal_chern_ring(int prime, unsigned rank);

/// Splitting-principle value of the shift-2 operation (Sq^4 at p = 2, P^1 at
/// p = 3) on c_i of a rank-r bundle, expressed in Chern generators. This is
/// the oracle the closed-form table is compared against.
RingElement op_on_chern(int prime, unsigned i, unsigned rank, unsigned rank_bound = 6);

/// Printed closed form for the shift-2 operation on c_i at rank r
/// (Wu-type formula), reduced mod p; c_j = 0 for j > r.
RingElement wu_closed_form(int prime, unsigned i, unsigned rank);

struct WuRow {
    int prime;
    unsigned rank;
    unsigned index;
    bool agrees;
    RingElement oracle;
    RingElement closed_form;
    RingElement discrepancy;  // closed_form - oracle
};

/// Tabulates oracle vs closed form for all 1 <= i <= r <= r_max.
std::vector<WuRow> compare_wu_formulas(int prime, unsigned r_max, unsigned rank_bound = 6);

/// Total-operation multiplicativity: total_op(a*b) == total_op(a)*total_op(b)
/// componentwise (shift convolution).
bool cartan_check(const SteenrodContext& ctx, const RingElement& a, const RingElement& b);

}  // namespace topcell
