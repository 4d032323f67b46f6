#pragma once

#include "topcell/common.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace topcell {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

struct Generator {
    std::string name;
    unsigned degree = 1;
};

/// Exponent vector over the generators of a fixed ring, with cached total
/// (weighted) degree. Ordering is degree-lexicographic with earlier
/// generators more significant; used only for deterministic term order.
class Monomial {
public:
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned exponent(size_t i) const { return exps_[i]; }
    unsigned degree() const { return degree_; }
    bool is_unit() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.exps_ < b.exps_;
    }

private:
    friend class GradedRing;
    Monomial(std::vector<unsigned> exps, unsigned degree)
        : exps_(std::move(exps)), degree_(degree) {}

    std::vector<unsigned> exps_;
    unsigned degree_ = 0;
};

using TermList = std::vector<std::pair<Int, std::vector<unsigned>>>;

/// Rewrite rule g^power -> rhs, with rhs homogeneous of degree
/// power*deg(g) and every rhs term carrying g with exponent < power.
struct RuleData {
    std::string generator;
    unsigned power = 0;
    TermList rhs;
};

class RingElement;

/// Finitely presented graded-commutative ring over Z or Z/m with
/// pure-power rewrite rules. Immutable after construction; elements are
/// kept in rewrite-irreducible normal form at all times.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
public:
    static RingPtr make(Int modulus, std::vector<Generator> generators,
                        std::vector<RuleData> rules,
                        std::optional<unsigned> degree_cap = std::nullopt);

    const Int& modulus() const { return modulus_; }
    const std::vector<Generator>& generators() const { return gens_; }
    size_t ngens() const { return gens_.size(); }
    std::optional<unsigned> degree_cap() const { return degree_cap_; }
    const std::vector<RuleData>& rules() const { return rule_data_; }

    size_t index_of(const std::string& name) const;
    bool has_generator(const std::string& name) const;
    bool has_rule(size_t gen_index) const { return rules_[gen_index].has_value(); }

    Monomial monomial(std::vector<unsigned> exps) const;
    Monomial unit_monomial() const;

    RingElement zero() const;
    RingElement one() const;
    RingElement constant(Int c) const;
    RingElement gen(size_t i, unsigned power = 1) const;
    RingElement gen(const std::string& name, unsigned power = 1) const;
    /// Builds the normal form of an arbitrary term list (the normalization
    /// entry point: rewriting, coefficient reduction, cap truncation).
    RingElement element(const TermList& terms) const;

    /// Structural equality; rings built from identical data are compatible.
    bool compatible(const GradedRing& other) const;
    /// Same generators, rules and cap; modulus may differ.
    bool same_presentation(const GradedRing& other) const;

    Int reduce_coeff(Int c) const;

private:
    friend class RingElement;
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    GradedRing() = default;

    struct Rule {
        unsigned power;
        std::vector<std::pair<Int, Monomial>> rhs;
    };

    void normalize(std::map<Monomial, Int>& terms) const;

    Int modulus_;
    std::vector<Generator> gens_;
    std::vector<std::optional<Rule>> rules_;
    std::vector<RuleData> rule_data_;
    std::optional<unsigned> degree_cap_;
};

/// Element of a GradedRing; term map is always normalized (irreducible,
/// coefficients reduced, nothing above the degree cap). Zero has an empty
/// term map regardless of degree.
class RingElement {
public:
    RingElement() = default;

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Degree of the top term; 0 for the zero element.
    unsigned degree() const;
    bool is_homogeneous() const;
    Int coeff(const Monomial& m) const;
    Int constant_term() const;
    size_t term_count() const { return terms_.size(); }

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const Int& c, const RingElement& a);
    RingElement& operator+=(const RingElement& b) { return *this = *this + b; }
    RingElement& operator-=(const RingElement& b) { return *this = *this - b; }
    RingElement& operator*=(const RingElement& b) { return *this = *this * b; }

    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    std::string str() const;

private:
    friend class GradedRing;
    friend RingElement pow(const RingElement& e, unsigned n);
    friend RingElement degree_component(const RingElement& e, unsigned d);
    friend RingElement reduce_mod(const RingElement& e, const Int& m);
    friend RingElement map_generators(const RingElement& e, const RingPtr& target,
                                      const std::vector<RingElement>& images);

    RingElement(RingPtr ring, std::map<Monomial, Int> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    RingPtr ring_;
    std::map<Monomial, Int> terms_;
};

RingElement pow(const RingElement& e, unsigned n);

/// Sum of the terms of total degree exactly d.
RingElement degree_component(const RingElement& e, unsigned d);

/// Coefficientwise reduction of an integral element into the ring with the
/// same presentation and modulus m; a ring homomorphism.
RingElement reduce_mod(const RingElement& e, const Int& m);

/// Ring homomorphism determined by generator images (one per source
/// generator, all in the target ring).
RingElement map_generators(const RingElement& e, const RingPtr& target,
                           const std::vector<RingElement>& images);

}  // namespace topcell
