#pragma once

#include "topcell/gring.hpp"

#include <optional>
#include <vector>

namespace topcell {

/// Vector-bundle class: rank plus total Chern class (constant term 1) in a
/// base ring, optionally with a splitting-model root list (degree-1 classes
/// whose product of (1+root_i) is the total Chern class).
struct BundleClass {
    unsigned rank = 0;
    RingElement chern;
    std::optional<std::vector<RingElement>> roots;

    static BundleClass from_chern(unsigned rank, RingElement total_chern);
    static BundleClass from_roots(std::vector<RingElement> roots);
    static BundleClass trivial(const RingPtr& ring, unsigned rank);
    static BundleClass line(RingElement c1);
};

/// Formal Z-combination of bundle classes, all over one base ring.
struct VirtualClass {
    std::vector<std::pair<int, BundleClass>> summands;  // sign in {+1,-1}

    VirtualClass& add(const BundleClass& b) {
        summands.emplace_back(+1, b);
        return *this;
    }
    VirtualClass& subtract(const BundleClass& b) {
        summands.emplace_back(-1, b);
        return *this;
    }
    long long rank() const;
};

/// Total Chern class of a virtual class: product of the summands' total
/// classes, with formal power-series inverses truncated at dim_cap.
RingElement total_chern(const VirtualClass& v, unsigned dim_cap);

/// Degree-i component of total_chern.
RingElement chern_i(const VirtualClass& v, unsigned i, unsigned dim_cap);

/// Dual bundle: c_i -> (-1)^i c_i; roots negated. An involution.
BundleClass dual(const BundleClass& b);

/// Whitney sum (for property tests and catalog construction).
BundleClass whitney_sum(const BundleClass& a, const BundleClass& b);

/// Symbolic vanishing check for the class [T] - 1 - [V] + [V^] in the
/// universal ring Z[a,b,v] (a = c1(T), b = c2(T), v = c1(V)): with the
/// rewrites a -> 2v (c1 even) and b -> 2v^2 (2c2 = c1^2) imposed, rank, c1
/// and c2 of the class all vanish identically.
struct Thm01Report {
    bool impose_c1_even = true;
    bool impose_2c2_eq_c1sq = true;
    long long rank_residual = 0;
    RingElement c1_residual;
    RingElement c2_residual;
    bool all_zero = false;
};

Thm01Report verify_thm01_vanishing(bool impose_c1_even = true, bool impose_2c2_eq_c1sq = true);

}  // namespace topcell
