#include "topcell/chern.hpp"

namespace topcell {

BundleClass BundleClass::from_chern(unsigned rank, RingElement total) {
    if (!total.ring()) fail(errc::invalid_argument, "total Chern class needs a ring");
    if (total.constant_term() != 1)
        fail(errc::invalid_argument, "total Chern class must have constant term 1");
    BundleClass b;
    b.rank = rank;
    b.chern = std::move(total);
    return b;
}

BundleClass BundleClass::from_roots(std::vector<RingElement> roots) {
    if (roots.empty()) fail(errc::invalid_argument, "root list must be nonempty");
    const RingPtr& ring = roots.front().ring();
    RingElement total = ring->one();
    for (const auto& r : roots) {
        if (!r.ring() || !r.ring()->compatible(*ring))
            fail(errc::ring_mismatch, "roots must share one base ring");
        if (!r.is_zero() && (!r.is_homogeneous() || r.degree() != 1))
            fail(errc::invalid_argument, "roots must be homogeneous of degree 1");
        total = total * (ring->one() + r);
    }
    BundleClass b;
    b.rank = static_cast<unsigned>(roots.size());
    b.chern = std::move(total);
    b.roots = std::move(roots);
    return b;
}

BundleClass BundleClass::trivial(const RingPtr& ring, unsigned rank) {
    BundleClass b;
    b.rank = rank;
    b.chern = ring->one();
    return b;
}

BundleClass BundleClass::line(RingElement c1) {
    const RingPtr& ring = c1.ring();
    if (!ring) fail(errc::invalid_argument, "line bundle needs a ring");
    return from_roots({std::move(c1)});
}

long long VirtualClass::rank() const {
    long long r = 0;
    for (const auto& [sign, b] : summands) r += sign * static_cast<long long>(b.rank);
    return r;
}

namespace {

const RingPtr& base_ring(const VirtualClass& v) {
    if (v.summands.empty()) fail(errc::invalid_argument, "empty virtual class");
    const RingPtr& ring = v.summands.front().second.chern.ring();
    for (const auto& [sign, b] : v.summands)
        if (!b.chern.ring() || !b.chern.ring()->compatible(*ring))
            fail(errc::mixed_base_rings, "virtual class summands over different rings");
    return ring;
}

// (1 + N)^{-1} = sum_k (-N)^k, truncated at dim_cap.
RingElement series_inverse(const RingElement& total, unsigned dim_cap) {
    const RingPtr& ring = total.ring();
    RingElement n = total - ring->one();
    RingElement result = ring->one();
    RingElement power = ring->one();
    for (unsigned k = 1; k <= dim_cap; ++k) {
        power = power * (-n);
        if (power.is_zero()) break;
        result = result + power;
    }
    return result;
}

RingElement truncate(const RingElement& e, unsigned dim_cap) {
    RingElement out = e.ring()->zero();
    for (unsigned d = 0; d <= dim_cap; ++d) out = out + degree_component(e, d);
    return out;
}

}  // namespace

RingElement total_chern(const VirtualClass& v, unsigned dim_cap) {
    const RingPtr& ring = base_ring(v);
    if (ring->degree_cap() && *ring->degree_cap() < dim_cap)
        fail(errc::invalid_argument, "base ring degree cap below dim_cap");
    RingElement result = ring->one();
    for (const auto& [sign, b] : v.summands) {
        RingElement factor = sign > 0 ? b.chern : series_inverse(b.chern, dim_cap);
        result = truncate(result * factor, dim_cap);
    }
    return result;
}

RingElement chern_i(const VirtualClass& v, unsigned i, unsigned dim_cap) {
    return degree_component(total_chern(v, dim_cap), i);
}

BundleClass dual(const BundleClass& b) {
    BundleClass d;
    d.rank = b.rank;
    const RingPtr& ring = b.chern.ring();
    RingElement total = ring->zero();
    for (unsigned i = 0; i <= b.chern.degree(); ++i) {
        Int sign = (i % 2 == 0) ? 1 : -1;
        total = total + sign * degree_component(b.chern, i);
    }
    d.chern = total;
    if (b.roots) {
        std::vector<RingElement> roots;
        roots.reserve(b.roots->size());
        for (const auto& r : *b.roots) roots.push_back(-r);
        d.roots = std::move(roots);
    }
    return d;
}

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b) {
    if (!a.chern.ring()->compatible(*b.chern.ring()))
        fail(errc::mixed_base_rings, "Whitney sum over different rings");
    BundleClass s;
    s.rank = a.rank + b.rank;
    s.chern = a.chern * b.chern;
    if (a.roots && b.roots) {
        std::vector<RingElement> roots = *a.roots;
        roots.insert(roots.end(), b.roots->begin(), b.roots->end());
        s.roots = std::move(roots);
    }
    return s;
}

Thm01Report verify_thm01_vanishing(bool impose_c1_even, bool impose_2c2_eq_c1sq) {
    // Universal ring Z[a,b,v] with deg a = deg v = 1, deg b = 2. The
    // hypotheses enter as power-1 rewrites so the vanishing is a symbolic
    // identity rather than a numeric spot check.
    std::vector<RuleData> rules;
    if (impose_c1_even) rules.push_back({"a", 1, {{Int(2), {0, 0, 1}}}});       // a -> 2v
    if (impose_2c2_eq_c1sq) rules.push_back({"b", 1, {{Int(2), {0, 0, 2}}}});  // b -> 2v^2
    RingPtr ring = GradedRing::make(0, {{"a", 1}, {"b", 2}, {"v", 1}}, rules, 4);

    RingElement a = ring->gen("a");
    RingElement b = ring->gen("b");
    RingElement v = ring->gen("v");

    BundleClass tangent = BundleClass::from_chern(2, ring->one() + a + b);
    BundleClass vee = BundleClass::line(v);

    VirtualClass cls;
    cls.add(tangent)
        .subtract(BundleClass::trivial(ring, 2))
        .subtract(vee)
        .add(dual(vee));

    Thm01Report report;
    report.impose_c1_even = impose_c1_even;
    report.impose_2c2_eq_c1sq = impose_2c2_eq_c1sq;
    report.rank_residual = cls.rank();
    report.c1_residual = chern_i(cls, 1, 2);
    report.c2_residual = chern_i(cls, 2, 2);
    report.all_zero = report.rank_residual == 0 && report.c1_residual.is_zero() &&
                      report.c2_residual.is_zero();
    return report;
}

}  // namespace topcell
