#include "topcell/steenrod.hpp"

#include <algorithm>
#include <string>

namespace topcell {

SteenrodContext SteenrodContext::make(int prime, RingPtr ring,
                                      const std::vector<size_t>& codim1_gens) {
    if (prime != 2 && prime != 3) fail(errc::unsupported_prime, std::to_string(prime));
    if (!ring) fail(errc::invalid_argument, "null ring");
    if (ring->modulus() != prime)
        fail(errc::incompatible_rings, "ring modulus does not match the prime");
    SteenrodContext ctx;
    ctx.prime = prime;
    ctx.ring = std::move(ring);
    ctx.codim1.assign(ctx.ring->ngens(), false);
    for (size_t i : codim1_gens) {
        if (i >= ctx.ring->ngens()) fail(errc::index_out_of_range, "codim-1 generator index");
        if (ctx.ring->generators()[i].degree != 1)
            fail(errc::invalid_argument,
                 "declared codim-1 generator has degree != 1: " + ctx.ring->generators()[i].name);
        ctx.codim1[i] = true;
    }
    return ctx;
}

SteenrodContext SteenrodContext::all_codim1(int prime, RingPtr ring) {
    std::vector<size_t> all(ring->ngens());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return make(prime, std::move(ring), all);
}

RingElement OperationResult::component(unsigned shift) const {
    auto it = components.find(shift);
    if (it != components.end()) return it->second;
    return input.ring()->zero();
}

RingElement OperationResult::total() const {
    RingElement sum = input.ring()->zero();
    for (const auto& [shift, c] : components) sum = sum + c;
    return sum;
}

OperationResult total_op(const SteenrodContext& ctx, const RingElement& e) {
    if (!e.ring() || !e.ring()->compatible(*ctx.ring))
        fail(errc::ring_mismatch, "element does not live in the context ring");
    const RingPtr& ring = ctx.ring;
    for (const auto& [m, c] : e.terms())
        for (size_t i = 0; i < ctx.codim1.size(); ++i)
            if (m.exponent(i) > 0 && !ctx.codim1[i])
                fail(errc::non_polynomial_input,
                     "not a polynomial in the declared codim-1 generators: " +
                         ring->generators()[i].name);

    // x -> x + x^p on each generator, extended multiplicatively; output
    // terms of a degree-d input term land at shift (degree - d).
    std::vector<RingElement> images(ring->ngens());
    for (size_t i = 0; i < ring->ngens(); ++i)
        if (ctx.codim1[i])
            images[i] = ring->gen(i) + ring->gen(i, static_cast<unsigned>(ctx.prime));

    OperationResult result;
    result.input = e;
    for (const auto& [m, c] : e.terms()) {
        RingElement image = ring->constant(c);
        for (size_t i = 0; i < ring->ngens(); ++i)
            if (m.exponent(i) > 0) image = image * pow(images[i], m.exponent(i));
        unsigned top = image.degree();
        for (unsigned d = m.degree(); d <= top; ++d) {
            RingElement part = degree_component(image, d);
            if (part.is_zero()) continue;
            unsigned shift = d - m.degree();
            auto it = result.components.find(shift);
            if (it == result.components.end())
                result.components.emplace(shift, std::move(part));
            else
                it->second = it->second + part;
        }
    }
    for (auto it = result.components.begin(); it != result.components.end();)
        it = it->second.is_zero() ? result.components.erase(it) : std::next(it);
    return result;
}

RingElement elementary_symmetric(const RingPtr& ring, unsigned i) {
    size_t n = ring->ngens();
    if (i > n) return ring->zero();
    if (i == 0) return ring->one();
    // e_i via the recurrence over prefixes: E_k = E_{k-1} + x_k * (e_{i-1} of prefix).
    std::vector<RingElement> e(i + 1, ring->zero());
    e[0] = ring->one();
    for (size_t k = 0; k < n; ++k) {
        RingElement x = ring->gen(k);
        for (unsigned j = std::min<unsigned>(i, static_cast<unsigned>(k + 1)); j >= 1; --j)
            e[j] = e[j] + x * e[j - 1];
    }
    return e[i];
}

RingElement symmetric_to_elementary(const RingElement& sym, const RingPtr& target,
                                    const std::vector<RingElement>& images) {
    const RingPtr& xring = sym.ring();
    if (!xring) fail(errc::invalid_argument, "uninitialized element");
    size_t r = xring->ngens();
    if (images.size() != r) fail(errc::invalid_argument, "need one image per variable");
    for (const auto& g : xring->generators())
        if (g.degree != 1)
            fail(errc::invalid_argument, "splitting-model ring must have only degree-1 generators");

    std::vector<RingElement> elem(r + 1);
    for (unsigned j = 1; j <= r; ++j) elem[j] = elementary_symmetric(xring, j);

    RingElement remainder = sym;
    RingElement out = target->zero();
    while (!remainder.is_zero()) {
        // Leading term under deglex with x_1 most significant; for a
        // symmetric polynomial its exponents are weakly decreasing.
        const auto& [lead, coeff] = *remainder.terms().rbegin();
        const std::vector<unsigned>& a = lead.exponents();
        for (size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i] < a[i + 1])
                fail(errc::non_polynomial_input,
                     "polynomial is not symmetric: leading exponents not sorted");
        RingElement basis_in_x = xring->constant(coeff);
        RingElement basis_in_target = target->constant(coeff);
        for (size_t j = 0; j < r; ++j) {
            unsigned next = (j + 1 < r) ? a[j + 1] : 0;
            unsigned exp = a[j] - next;
            if (exp == 0) continue;
            basis_in_x = basis_in_x * pow(elem[j + 1], exp);
            basis_in_target = basis_in_target * pow(images[j], exp);
        }
        out = out + basis_in_target;
        remainder = remainder - basis_in_x;
    }
    return out;
}

RingPtr universal_chern_ring(int prime, unsigned rank) {
    std::vector<Generator> gens;
    for (unsigned i = 1; i <= rank; ++i) gens.push_back({"c" + std::to_string(i), i});
    return GradedRing::make(prime, std::move(gens), {}, rank + 4);
}

namespace {

RingPtr splitting_ring(int prime, unsigned rank, unsigned cap) {
    std::vector<Generator> gens;
    for (unsigned i = 1; i <= rank; ++i) gens.push_back({"x" + std::to_string(i), 1});
    return GradedRing::make(prime, std::move(gens), {}, cap);
}

}  // namespace

RingElement op_on_chern(int prime, unsigned i, unsigned rank, unsigned rank_bound) {
    if (prime != 2 && prime != 3) fail(errc::unsupported_prime, std::to_string(prime));
    if (i < 1 || i > rank || rank > rank_bound)
        fail(errc::index_out_of_range, "need 1 <= i <= r <= " + std::to_string(rank_bound));
    RingPtr xring = splitting_ring(prime, rank, i + 2);
    SteenrodContext ctx = SteenrodContext::all_codim1(prime, xring);
    RingElement image = total_op(ctx, elementary_symmetric(xring, i)).component(2);

    RingPtr target = universal_chern_ring(prime, rank);
    std::vector<RingElement> chern_images;
    for (unsigned j = 1; j <= rank; ++j) chern_images.push_back(target->gen(j - 1));
    return symmetric_to_elementary(image, target, chern_images);
}

RingElement wu_closed_form(int prime, unsigned i, unsigned rank) {
    RingPtr ring = universal_chern_ring(prime, rank);
    auto c = [&](unsigned j) -> RingElement {
        if (j == 0) return ring->one();
        if (j > rank) return ring->zero();
        return ring->gen(j - 1);
    };
    if (prime == 2) {
        Int k = Int(i + 2) * Int(static_cast<long long>(i) - 1) / 2;
        return c(2) * c(i) - Int(i) * (c(1) * c(i + 1)) + k * c(i + 2);
    }
    if (prime == 3)
        return (c(1) * c(1) - Int(2) * c(2)) * c(i) - c(1) * c(i + 1) + Int(i + 1) * c(i + 2);
    fail(errc::unsupported_prime, std::to_string(prime));
}

std::vector<WuRow> compare_wu_formulas(int prime, unsigned r_max, unsigned rank_bound) {
    if (r_max < 1 || r_max > rank_bound)
        fail(errc::index_out_of_range, "rank bound is " + std::to_string(rank_bound));
    std::vector<WuRow> rows;
    for (unsigned r = 1; r <= r_max; ++r) {
        for (unsigned i = 1; i <= r; ++i) {
            WuRow row;
            row.prime = prime;
            row.rank = r;
            row.index = i;
            row.oracle = op_on_chern(prime, i, r, rank_bound);
            row.closed_form = wu_closed_form(prime, i, r);
            row.discrepancy = row.closed_form - row.oracle;
            row.agrees = row.discrepancy.is_zero();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

bool cartan_check(const SteenrodContext& ctx, const RingElement& a, const RingElement& b) {
    OperationResult oa = total_op(ctx, a);
    OperationResult ob = total_op(ctx, b);
    OperationResult oab = total_op(ctx, a * b);
    // Convolve shifts on homogeneous inputs; otherwise compare totals (the
    // substitution is multiplicative on the whole sum in either case).
    if (a.is_homogeneous() && b.is_homogeneous()) {
        unsigned top = 0;
        if (!oab.components.empty()) top = oab.components.rbegin()->first;
        for (const auto& [s, c] : oa.components)
            for (const auto& [t, d] : ob.components) top = std::max(top, s + t);
        for (unsigned s = 0; s <= top; ++s) {
            RingElement lhs = oab.component(s);
            RingElement rhs = ctx.ring->zero();
            for (unsigned u = 0; u <= s; ++u)
                rhs = rhs + oa.component(u) * ob.component(s - u);
            if (lhs != rhs) return false;
        }
        return true;
    }
    return oab.total() == oa.total() * ob.total();
}

}  // namespace topcell
