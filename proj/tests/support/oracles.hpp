#pragma once

// Test-only oracles, independent of the library's sparse-map arithmetic:
// a dense multivariate polynomial type over Z/m truncated by total degree,
// plus random generators for elements, matrices, groups and exact diagrams.

#include "topcell/gring.hpp"
#include "topcell/intmat.hpp"
#include "topcell/witt.hpp"

#include <random>
#include <vector>

namespace topcell::testsupport {

/// Dense polynomial in `nvars` degree-1 variables with coefficients mod
/// `modulus` (0 = integers), truncated above total degree `cap`.
class DensePoly {
public:
    DensePoly(size_t nvars, int modulus, unsigned cap);

    static DensePoly variable(size_t nvars, int modulus, unsigned cap, size_t v);
    static DensePoly constant(size_t nvars, int modulus, unsigned cap, long long c);

    DensePoly operator+(const DensePoly& o) const;
    DensePoly operator-(const DensePoly& o) const;
    DensePoly operator*(const DensePoly& o) const;
    bool operator==(const DensePoly& o) const { return coeffs_ == o.coeffs_; }
    bool is_zero() const;

    long long coeff(const std::vector<unsigned>& exps) const;
    void set_coeff(const std::vector<unsigned>& exps, long long c);

    /// Substitute each variable v -> v + v^p (dense total power operation).
    DensePoly total_power_substitution(int p) const;

    /// Terms of total degree exactly d.
    DensePoly degree_part(unsigned d) const;

    size_t nvars() const { return nvars_; }
    unsigned cap() const { return cap_; }
    int modulus() const { return modulus_; }

private:
    size_t index(const std::vector<unsigned>& exps) const;
    long long reduce(long long c) const;

    size_t nvars_;
    int modulus_;
    unsigned cap_;
    std::vector<long long> coeffs_;
};

/// Library element of an all-degree-1 ring, densified.
DensePoly to_dense(const RingElement& e, unsigned cap);

/// Random element with up to `max_terms` terms of degree <= max_deg.
RingElement random_element(std::mt19937_64& rng, const RingPtr& ring, unsigned max_deg,
                           int max_terms, int coeff_bound = 9);

IMat random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, int bound);

/// Product of random elementary row operations.
IMat random_unimodular(std::mt19937_64& rng, size_t n, int ops = 12);

/// Finite group with diagonal (cyclic-product) presentation and known
/// per-generator orders.
struct CyclicGroup {
    GroupPtr group;
    std::vector<Int> orders;
};

CyclicGroup random_cyclic(std::mt19937_64& rng, Int max_order, int max_gens);

/// Random well-defined homomorphism between groups whose relation lattices
/// are diagonal with the given per-generator orders.
Homo random_homo(std::mt19937_64& rng, const GroupPtr& src, const std::vector<Int>& src_orders,
                 const GroupPtr& dst, const std::vector<Int>& dst_orders);

/// Key-diagram instance built exact-by-construction:
///   CHW --incl--> CH --del--> HI with del = beta . mod2, Sq2 = rho . beta,
/// and rho a split injection (or a zero map when rho_injective is false).
struct KeyDiagramInstance {
    DiagramSpec spec;
    GroupPtr chw;    // lifting target (kernel of del)
    IMat inclusion;  // chw -> CH
    GroupPtr ch;     // cycle group
};

KeyDiagramInstance random_key_diagram(std::mt19937_64& rng, bool rho_injective = true);

/// Brute-force ground truth: does `cycle` have a preimage under inclusion?
bool lifts_by_enumeration(const KeyDiagramInstance& inst, const std::vector<Int>& cycle);

}  // namespace topcell::testsupport
