#include "topcell/gring.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace topcell {

const char* errc_name(errc c) {
    switch (c) {
        case errc::ok: return "Ok";
        case errc::duplicate_generator: return "DuplicateGenerator";
        case errc::inhomogeneous_rule: return "InhomogeneousRule";
        case errc::self_referencing_rule: return "SelfReferencingRule";
        case errc::duplicate_rule: return "DuplicateRule";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::incompatible_rings: return "IncompatibleRings";
        case errc::mixed_base_rings: return "MixedBaseRings";
        case errc::unsupported_prime: return "UnsupportedPrime";
        case errc::non_polynomial_input: return "NonPolynomialInput";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::ill_defined_homo: return "IllDefinedHomo";
        case errc::malformed_spec: return "MalformedSpec";
        case errc::missing_arrow: return "MissingArrow";
        case errc::twist_without_cup: return "TwistWithoutCup";
        case errc::cycle_not_in_kernel: return "CycleNotInKernel";
        case errc::endpoint_mismatch: return "EndpointMismatch";
        case errc::missing_pic_data: return "MissingPicData";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::eigen_equation_failed: return "EigenEquationFailed";
        case errc::parse_error: return "ParseError";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

RingPtr GradedRing::make(Int modulus, std::vector<Generator> generators,
                         std::vector<RuleData> rules, std::optional<unsigned> degree_cap) {
    if (modulus < 0) fail(errc::invalid_argument, "modulus must be nonnegative");
    auto ring = std::shared_ptr<GradedRing>(new GradedRing());
    ring->modulus_ = std::move(modulus);
    ring->gens_ = std::move(generators);
    ring->degree_cap_ = degree_cap;

    std::set<std::string> seen;
    for (const auto& g : ring->gens_) {
        if (g.degree == 0) fail(errc::invalid_argument, "generator degree must be >= 1: " + g.name);
        if (!seen.insert(g.name).second) fail(errc::duplicate_generator, g.name);
    }

    ring->rules_.assign(ring->gens_.size(), std::nullopt);
    for (auto& rd : rules) {
        size_t gi = ring->index_of(rd.generator);
        if (ring->rules_[gi]) fail(errc::duplicate_rule, rd.generator);
        if (rd.power == 0) fail(errc::invalid_argument, "rule power must be >= 1");
        unsigned lhs_degree = rd.power * ring->gens_[gi].degree;
        Rule rule;
        rule.power = rd.power;
        for (const auto& [coeff, exps] : rd.rhs) {
            Monomial m = ring->monomial(exps);
            if (m.degree() != lhs_degree)
                fail(errc::inhomogeneous_rule,
                     rd.generator + "^" + std::to_string(rd.power) + " -> term of degree " +
                         std::to_string(m.degree()) + ", expected " + std::to_string(lhs_degree));
            if (m.exponent(gi) >= rd.power)
                fail(errc::self_referencing_rule,
                     rd.generator + " appears with exponent >= " + std::to_string(rd.power));
            Int c = ring->reduce_coeff(coeff);
            if (c != 0) rule.rhs.emplace_back(std::move(c), std::move(m));
        }
        ring->rules_[gi] = std::move(rule);
        ring->rule_data_.push_back(std::move(rd));
    }
    return ring;
}

size_t GradedRing::index_of(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    fail(errc::invalid_argument, "no such generator: " + name);
}

bool GradedRing::has_generator(const std::string& name) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Generator& g) { return g.name == name; });
}

Monomial GradedRing::monomial(std::vector<unsigned> exps) const {
    if (exps.size() != gens_.size())
        fail(errc::invalid_argument, "exponent vector length does not match generator count");
    unsigned degree = 0;
    for (size_t i = 0; i < exps.size(); ++i) degree += exps[i] * gens_[i].degree;
    return Monomial(std::move(exps), degree);
}

Monomial GradedRing::unit_monomial() const {
    return Monomial(std::vector<unsigned>(gens_.size(), 0), 0);
}

Int GradedRing::reduce_coeff(Int c) const {
    if (modulus_ == 0) return c;
    c %= modulus_;
    if (c < 0) c += modulus_;
    return c;
}

// Normal form: repeatedly rewrite the first (in declaration order) generator
// whose exponent reaches its rule's power. Rules preserve total degree, so
// the degree cap can be applied to every intermediate term.
void GradedRing::normalize(std::map<Monomial, Int>& terms) const {
    std::deque<std::pair<Monomial, Int>> work(terms.begin(), terms.end());
    terms.clear();
    // Generous guard against a non-terminating rule set; the pure-power rule
    // class used by every ring in this project terminates long before this.
    size_t fuel = 2'000'000;
    while (!work.empty()) {
        auto [mono, coeff] = std::move(work.front());
        work.pop_front();
        coeff = reduce_coeff(std::move(coeff));
        if (coeff == 0) continue;
        if (degree_cap_ && mono.degree() > *degree_cap_) continue;

        size_t gi = gens_.size();
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (rules_[i] && mono.exponent(i) >= rules_[i]->power) {
                gi = i;
                break;
            }
        }
        if (gi == gens_.size()) {
            auto it = terms.find(mono);
            if (it == terms.end()) {
                terms.emplace(std::move(mono), std::move(coeff));
            } else {
                it->second = reduce_coeff(it->second + coeff);
                if (it->second == 0) terms.erase(it);
            }
            continue;
        }
        if (fuel-- == 0) fail(errc::internal_error, "rewrite did not terminate");
        const Rule& rule = *rules_[gi];
        std::vector<unsigned> base = mono.exponents();
        base[gi] -= rule.power;
        for (const auto& [rc, rm] : rule.rhs) {
            std::vector<unsigned> exps = base;
            for (size_t i = 0; i < exps.size(); ++i) exps[i] += rm.exponent(i);
            work.emplace_back(Monomial(std::move(exps), mono.degree()), coeff * rc);
        }
    }
}

RingElement GradedRing::zero() const { return RingElement(shared_from_this(), {}); }

RingElement GradedRing::one() const { return constant(1); }

RingElement GradedRing::constant(Int c) const {
    std::map<Monomial, Int> terms;
    c = reduce_coeff(std::move(c));
    if (c != 0) terms.emplace(unit_monomial(), std::move(c));
    return RingElement(shared_from_this(), std::move(terms));
}

RingElement GradedRing::gen(size_t i, unsigned power) const {
    if (i >= gens_.size()) fail(errc::index_out_of_range, "generator index");
    std::vector<unsigned> exps(gens_.size(), 0);
    exps[i] = power;
    std::map<Monomial, Int> terms;
    terms.emplace(monomial(std::move(exps)), Int(1));
    normalize(terms);
    return RingElement(shared_from_this(), std::move(terms));
}

RingElement GradedRing::gen(const std::string& name, unsigned power) const {
    return gen(index_of(name), power);
}

RingElement GradedRing::element(const TermList& raw) const {
    std::map<Monomial, Int> terms;
    for (const auto& [coeff, exps] : raw) {
        Monomial m = monomial(exps);
        auto it = terms.find(m);
        if (it == terms.end())
            terms.emplace(std::move(m), coeff);
        else
            it->second += coeff;
    }
    normalize(terms);
    return RingElement(shared_from_this(), std::move(terms));
}

bool GradedRing::same_presentation(const GradedRing& other) const {
    if (gens_.size() != other.gens_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != other.gens_[i].name || gens_[i].degree != other.gens_[i].degree)
            return false;
    if (degree_cap_ != other.degree_cap_) return false;
    if (rule_data_.size() != other.rule_data_.size()) return false;
    for (size_t i = 0; i < rule_data_.size(); ++i) {
        const RuleData& a = rule_data_[i];
        const RuleData& b = other.rule_data_[i];
        if (a.generator != b.generator || a.power != b.power || a.rhs != b.rhs) return false;
    }
    return true;
}

bool GradedRing::compatible(const GradedRing& other) const {
    if (this == &other) return true;
    return modulus_ == other.modulus_ && same_presentation(other);
}

unsigned RingElement::degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.degree();
}

bool RingElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Int RingElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

Int RingElement::constant_term() const {
    if (terms_.empty()) return 0;
    const auto& first = *terms_.begin();
    return first.first.is_unit() ? first.second : Int(0);
}

namespace {

const GradedRing& common_ring(const RingElement& a, const RingElement& b) {
    if (!a.ring() || !b.ring()) fail(errc::invalid_argument, "uninitialized ring element");
    if (!a.ring()->compatible(*b.ring()))
        fail(errc::ring_mismatch, "operands belong to different rings");
    return *a.ring();
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
    const GradedRing& ring = common_ring(a, b);
    std::map<Monomial, Int> terms = a.terms();
    for (const auto& [m, c] : b.terms()) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = ring.reduce_coeff(it->second + c);
            if (it->second == 0) terms.erase(it);
        }
    }
    return RingElement(a.ring(), std::move(terms));
}

RingElement RingElement::operator-() const {
    if (!ring_) fail(errc::invalid_argument, "uninitialized ring element");
    std::map<Monomial, Int> terms;
    for (const auto& [m, c] : terms_) terms.emplace(m, ring_->reduce_coeff(-c));
    return RingElement(ring_, std::move(terms));
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    const GradedRing& ring = common_ring(a, b);
    auto cap = ring.degree_cap();
    std::map<Monomial, Int> terms;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            unsigned degree = ma.degree() + mb.degree();
            if (cap && degree > *cap) continue;
            std::vector<unsigned> exps = ma.exponents();
            for (size_t i = 0; i < exps.size(); ++i) exps[i] += mb.exponent(i);
            Monomial m = ring.monomial(std::move(exps));
            auto it = terms.find(m);
            if (it == terms.end())
                terms.emplace(std::move(m), ca * cb);
            else
                it->second += ca * cb;
        }
    }
    ring.normalize(terms);
    return RingElement(a.ring(), std::move(terms));
}

RingElement operator*(const Int& c, const RingElement& a) {
    if (!a.ring()) fail(errc::invalid_argument, "uninitialized ring element");
    std::map<Monomial, Int> terms;
    for (const auto& [m, coeff] : a.terms()) {
        Int v = a.ring()->reduce_coeff(c * coeff);
        if (v != 0) terms.emplace(m, std::move(v));
    }
    return RingElement(a.ring(), std::move(terms));
}

bool operator==(const RingElement& a, const RingElement& b) {
    if (!a.ring() && !b.ring()) return true;
    if (!a.ring() || !b.ring()) return false;
    return a.ring()->compatible(*b.ring()) && a.terms() == b.terms();
}

RingElement pow(const RingElement& e, unsigned n) {
    if (!e.ring()) fail(errc::invalid_argument, "uninitialized ring element");
    RingElement result = e.ring()->one();
    RingElement base = e;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

RingElement degree_component(const RingElement& e, unsigned d) {
    std::map<Monomial, Int> terms;
    for (const auto& [m, c] : e.terms())
        if (m.degree() == d) terms.emplace(m, c);
    return RingElement(e.ring(), std::move(terms));
}

RingElement reduce_mod(const RingElement& e, const Int& m) {
    if (!e.ring()) fail(errc::invalid_argument, "uninitialized ring element");
    if (e.ring()->modulus() != 0)
        fail(errc::incompatible_rings, "reduce_mod expects an integral-coefficient element");
    if (m <= 0) fail(errc::invalid_argument, "modulus must be positive");
    const GradedRing& src = *e.ring();
    RingPtr target = GradedRing::make(m, src.generators(), src.rules(), src.degree_cap());
    TermList terms;
    for (const auto& [mono, c] : e.terms()) terms.emplace_back(c, mono.exponents());
    return target->element(terms);
}

RingElement map_generators(const RingElement& e, const RingPtr& target,
                           const std::vector<RingElement>& images) {
    if (!e.ring()) fail(errc::invalid_argument, "uninitialized ring element");
    if (images.size() != e.ring()->ngens())
        fail(errc::invalid_argument, "need one image per source generator");
    for (const auto& img : images)
        if (!img.ring() || !img.ring()->compatible(*target))
            fail(errc::ring_mismatch, "generator image lies outside the target ring");
    RingElement result = target->zero();
    for (const auto& [m, c] : e.terms()) {
        RingElement term = target->constant(c);
        for (size_t i = 0; i < images.size() && !term.is_zero(); ++i)
            if (m.exponent(i) > 0) term = term * pow(images[i], m.exponent(i));
        result = result + term;
    }
    return result;
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Int coeff = c;
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool printed_coeff = false;
        if (coeff != 1 || m.is_unit()) {
            out << coeff.str();
            printed_coeff = true;
        }
        bool printed_gen = false;
        for (size_t i = 0; i < m.exponents().size(); ++i) {
            unsigned e = m.exponent(i);
            if (e == 0) continue;
            if (printed_coeff || printed_gen) out << "*";
            out << ring_->generators()[i].name;
            if (e > 1) out << "^" << e;
            printed_gen = true;
        }
    }
    return out.str();
}

}  // namespace topcell
