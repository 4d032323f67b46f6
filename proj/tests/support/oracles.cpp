#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace topcell::testsupport {

DensePoly::DensePoly(size_t nvars, int modulus, unsigned cap)
    : nvars_(nvars), modulus_(modulus), cap_(cap) {
    size_t size = 1;
    for (size_t i = 0; i < nvars; ++i) size *= (cap + 1);
    coeffs_.assign(size, 0);
}

size_t DensePoly::index(const std::vector<unsigned>& exps) const {
    size_t idx = 0;
    for (size_t i = 0; i < nvars_; ++i) idx = idx * (cap_ + 1) + exps[i];
    return idx;
}

long long DensePoly::reduce(long long c) const {
    if (modulus_ == 0) return c;
    c %= modulus_;
    if (c < 0) c += modulus_;
    return c;
}

DensePoly DensePoly::variable(size_t nvars, int modulus, unsigned cap, size_t v) {
    DensePoly p(nvars, modulus, cap);
    std::vector<unsigned> exps(nvars, 0);
    exps[v] = 1;
    p.set_coeff(exps, 1);
    return p;
}

DensePoly DensePoly::constant(size_t nvars, int modulus, unsigned cap, long long c) {
    DensePoly p(nvars, modulus, cap);
    p.set_coeff(std::vector<unsigned>(nvars, 0), c);
    return p;
}

long long DensePoly::coeff(const std::vector<unsigned>& exps) const {
    return coeffs_[index(exps)];
}

void DensePoly::set_coeff(const std::vector<unsigned>& exps, long long c) {
    coeffs_[index(exps)] = reduce(c);
}

bool DensePoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c == 0; });
}

DensePoly DensePoly::operator+(const DensePoly& o) const {
    DensePoly r = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = reduce(coeffs_[i] + o.coeffs_[i]);
    return r;
}

DensePoly DensePoly::operator-(const DensePoly& o) const {
    DensePoly r = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = reduce(coeffs_[i] - o.coeffs_[i]);
    return r;
}

namespace {

// Next exponent tuple with all entries <= cap and total degree <= cap.
bool next_tuple(std::vector<unsigned>& exps, unsigned cap) {
    for (;;) {
        size_t i = exps.size();
        while (i-- > 0) {
            if (exps[i] < cap) break;
            exps[i] = 0;
        }
        if (i == static_cast<size_t>(-1)) return false;
        ++exps[i];
        for (size_t j = i + 1; j < exps.size(); ++j) exps[j] = 0;
        unsigned total = std::accumulate(exps.begin(), exps.end(), 0u);
        if (total <= cap) return true;
        // Over the cap: bump the same position again on the next pass by
        // saturating the tail (handled by the carry above).
        for (size_t j = i + 1; j < exps.size(); ++j) exps[j] = cap;
    }
}

}  // namespace

DensePoly DensePoly::operator*(const DensePoly& o) const {
    DensePoly r(nvars_, modulus_, cap_);
    std::vector<unsigned> a(nvars_, 0);
    do {
        long long ca = coeff(a);
        if (ca == 0) continue;
        unsigned deg_a = std::accumulate(a.begin(), a.end(), 0u);
        std::vector<unsigned> b(nvars_, 0);
        do {
            long long cb = o.coeff(b);
            if (cb == 0) continue;
            unsigned deg_b = std::accumulate(b.begin(), b.end(), 0u);
            if (deg_a + deg_b > cap_) continue;
            std::vector<unsigned> s(nvars_);
            for (size_t i = 0; i < nvars_; ++i) s[i] = a[i] + b[i];
            r.coeffs_[r.index(s)] = reduce(r.coeffs_[r.index(s)] + ca * cb);
        } while (next_tuple(b, cap_));
    } while (next_tuple(a, cap_));
    return r;
}

DensePoly DensePoly::total_power_substitution(int p) const {
    DensePoly result(nvars_, modulus_, cap_);
    std::vector<unsigned> a(nvars_, 0);
    do {
        long long ca = coeff(a);
        if (ca == 0) continue;
        DensePoly term = DensePoly::constant(nvars_, modulus_, cap_, ca);
        for (size_t v = 0; v < nvars_; ++v) {
            if (a[v] == 0) continue;
            DensePoly x = DensePoly::variable(nvars_, modulus_, cap_, v);
            DensePoly xp = x;
            for (int k = 1; k < p; ++k) xp = xp * x;
            DensePoly factor = x + xp;
            for (unsigned e = 0; e < a[v]; ++e) term = term * factor;
        }
        result = result + term;
    } while (next_tuple(a, cap_));
    return result;
}

DensePoly DensePoly::degree_part(unsigned d) const {
    DensePoly r(nvars_, modulus_, cap_);
    std::vector<unsigned> a(nvars_, 0);
    do {
        long long c = coeff(a);
        if (c == 0) continue;
        if (std::accumulate(a.begin(), a.end(), 0u) == d) r.set_coeff(a, c);
    } while (next_tuple(a, cap_));
    return r;
}

DensePoly to_dense(const RingElement& e, unsigned cap) {
    const RingPtr& ring = e.ring();
    int modulus = static_cast<int>(ring->modulus());
    DensePoly p(ring->ngens(), modulus, cap);
    for (const auto& [m, c] : e.terms())
        p.set_coeff(m.exponents(), static_cast<long long>(c));
    return p;
}

RingElement random_element(std::mt19937_64& rng, const RingPtr& ring, unsigned max_deg,
                           int max_terms, int coeff_bound) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long long> coeff(-coeff_bound, coeff_bound);
    TermList terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<unsigned> exps(ring->ngens(), 0);
        unsigned budget = max_deg;
        for (size_t i = 0; i < exps.size(); ++i) {
            unsigned gd = ring->generators()[i].degree;
            unsigned max_e = gd > 0 ? budget / gd : 0;
            std::uniform_int_distribution<unsigned> pick(0, max_e);
            exps[i] = pick(rng);
            budget -= exps[i] * gd;
        }
        terms.emplace_back(Int(coeff(rng)), std::move(exps));
    }
    return ring->element(terms);
}

IMat random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    IMat m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

IMat random_unimodular(std::mt19937_64& rng, size_t n, int ops) {
    IMat u = IMat::identity(n);
    if (n < 2) return u;
    std::uniform_int_distribution<size_t> row(0, n - 1);
    std::uniform_int_distribution<int> mult(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int k = 0; k < ops; ++k) {
        size_t i = row(rng), j = row(rng);
        if (i == j) continue;
        switch (kind(rng)) {
            case 0: {  // row_i += q * row_j
                int q = mult(rng);
                for (size_t c = 0; c < n; ++c) u.at(i, c) += q * u.at(j, c);
                break;
            }
            case 1:
                for (size_t c = 0; c < n; ++c) std::swap(u.at(i, c), u.at(j, c));
                break;
            case 2:
                for (size_t c = 0; c < n; ++c) u.at(i, c) = -u.at(i, c);
                break;
        }
    }
    return u;
}

CyclicGroup random_cyclic(std::mt19937_64& rng, Int max_order, int max_gens) {
    static const int choices[] = {1, 2, 2, 3, 4, 8};
    std::uniform_int_distribution<size_t> pick(0, std::size(choices) - 1);
    std::uniform_int_distribution<int> ngens(1, max_gens);
    CyclicGroup g;
    Int order = 1;
    int n = ngens(rng);
    for (int i = 0; i < n; ++i) {
        Int d = choices[pick(rng)];
        if (order * d > max_order) break;
        order *= d;
        g.orders.push_back(d);
    }
    if (g.orders.empty()) g.orders.push_back(2);
    g.group = FgAbGroup::cyclic_product(g.orders);
    return g;
}

Homo random_homo(std::mt19937_64& rng, const GroupPtr& src, const std::vector<Int>& src_orders,
                 const GroupPtr& dst, const std::vector<Int>& dst_orders) {
    // Entry (i,j) must annihilate the source generator order e_j inside
    // Z/d_i, i.e. be a multiple of d_i / gcd(d_i, e_j).
    std::uniform_int_distribution<int> pick(-4, 4);
    IMat m(dst->ngens(), src->ngens());
    for (size_t i = 0; i < dst->ngens(); ++i) {
        const Int& d = dst_orders[i];
        for (size_t j = 0; j < src->ngens(); ++j) {
            const Int& e = src_orders[j];
            Int step = 1;
            if (d != 0) {
                Int g = e == 0 ? d : boost::multiprecision::gcd(d, e);
                step = d / g;
            }
            m.at(i, j) = step * pick(rng);
        }
    }
    return Homo(src, dst, std::move(m));
}

KeyDiagramInstance random_key_diagram(std::mt19937_64& rng, bool rho_injective) {
    CyclicGroup ch = random_cyclic(rng, 64, 3);

    // Ch = CH/2 on the same generators; generator orders become gcd(d, 2).
    IMat two = IMat::identity(ch.group->ngens());
    for (size_t i = 0; i < two.rows; ++i) two.at(i, i) = 2;
    GroupPtr chbar =
        FgAbGroup::make(ch.group->ngens(), IMat::hconcat(ch.group->relations(), two));
    std::vector<Int> chbar_orders;
    for (const Int& d : ch.orders) chbar_orders.push_back(boost::multiprecision::gcd(d, Int(2)));
    Homo mod2(ch.group, chbar, IMat::identity(ch.group->ngens()));

    CyclicGroup hi = rho_injective ? random_cyclic(rng, 16, 2)
                                   : CyclicGroup{FgAbGroup::cyclic_product({2, 4}), {2, 4}};
    Homo beta = random_homo(rng, chbar, chbar_orders, hi.group, hi.orders);
    Homo del = compose(beta, mod2);

    GroupPtr ch3;
    IMat rho_m;
    if (rho_injective) {
        // Split injection of HI into HI + extra summands.
        CyclicGroup extra = random_cyclic(rng, 8, 1);
        std::vector<Int> orders = hi.orders;
        orders.insert(orders.end(), extra.orders.begin(), extra.orders.end());
        ch3 = FgAbGroup::cyclic_product(orders);
        rho_m = IMat(ch3->ngens(), hi.group->ngens());
        for (size_t i = 0; i < hi.group->ngens(); ++i) rho_m.at(i, i) = 1;
    } else {
        // Zero map out of a nontrivial HI: kernel is everything.
        ch3 = FgAbGroup::cyclic_product({2});
        rho_m = IMat(1, hi.group->ngens());
    }
    Homo rho(hi.group, ch3, rho_m);
    Homo sq2 = compose(rho, beta);

    KernelData ker = kernel(del);
    Homo incl(ker.group, ch.group, ker.inclusion);

    KeyDiagramInstance inst;
    inst.chw = ker.group;
    inst.inclusion = ker.inclusion;
    inst.ch = ch.group;
    DiagramSpec& spec = inst.spec;
    spec.nodes = {{"CHW", ker.group}, {"CH", ch.group}, {"Ch", chbar},
                  {"HI", hi.group},   {"Ch3", ch3}};
    spec.arrows.emplace("incl", DiagramSpec::Arrow{"CHW", "CH", incl});
    spec.arrows.emplace(arrow_names::boundary, DiagramSpec::Arrow{"CH", "HI", del});
    spec.arrows.emplace(arrow_names::mod2, DiagramSpec::Arrow{"CH", "Ch", mod2});
    spec.arrows.emplace(arrow_names::beta, DiagramSpec::Arrow{"Ch", "HI", beta});
    spec.arrows.emplace(arrow_names::rho, DiagramSpec::Arrow{"HI", "Ch3", rho});
    spec.arrows.emplace(arrow_names::sq2, DiagramSpec::Arrow{"Ch", "Ch3", sq2});
    spec.assertions.push_back(DiagramSpec::ExactAssertion{"incl", arrow_names::boundary});
    spec.assertions.push_back(DiagramSpec::CommuteAssertion{
        {arrow_names::mod2, arrow_names::beta}, {arrow_names::boundary}});
    return inst;
}

bool lifts_by_enumeration(const KeyDiagramInstance& inst, const std::vector<Int>& cycle) {
    for (const auto& x : inst.chw->enumerate_elements(4096)) {
        std::vector<Int> image = inst.inclusion.apply(x);
        if (inst.ch->elements_equal(image, cycle)) return true;
    }
    return false;
}

}  // namespace topcell::testsupport
