#include "topcell/gring.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace topcell;
using testsupport::DensePoly;
using testsupport::random_element;
using testsupport::to_dense;

namespace {

// Z[h]/(h^3) — the degree-capped model of the cohomology of the plane.
RingPtr plane_ring() { return GradedRing::make(0, {{"h", 1}}, {{"h", 3, {}}}, 8); }

// Rank-1 bundle ring: s^2 -> -c1*s.
RingPtr rank1_ring() {
    return GradedRing::make(0, {{"s", 1}, {"c1", 1}}, {{"s", 2, {{-1, {1, 1}}}}}, 6);
}

}  // namespace

TEST_CASE("ring construction validates its presentation") {
    CHECK_THROWS_WITH_AS(GradedRing::make(0, {{"h", 1}, {"h", 2}}, {}),
                         doctest::Contains("DuplicateGenerator"), Error);
    // h^3 -> h^2 has mismatched degree.
    CHECK_THROWS_WITH_AS(GradedRing::make(0, {{"h", 1}}, {{"h", 3, {{1, {2}}}}}),
                         doctest::Contains("InhomogeneousRule"), Error);
    // rhs contains the rewritten generator at full power.
    CHECK_THROWS_WITH_AS(GradedRing::make(0, {{"h", 1}}, {{"h", 3, {{2, {3}}}}}),
                         doctest::Contains("SelfReferencingRule"), Error);
    CHECK_THROWS_WITH_AS(GradedRing::make(0, {{"h", 1}}, {{"h", 3, {}}, {"h", 2, {}}}),
                         doctest::Contains("DuplicateRule"), Error);
    // The rank-2 bundle relation from the quotient-ring presentation.
    RingPtr r = GradedRing::make(
        2, {{"s", 1}, {"c1", 1}, {"c2", 2}},
        {{"s", 3, {{-1, {2, 1, 0}}, {-1, {1, 0, 1}}}}}, 8);
    CHECK(r->ngens() == 3);
}

TEST_CASE("normalization rewrites to the irreducible representative") {
    RingPtr plane = plane_ring();
    CHECK(plane->gen("h", 3).is_zero());
    CHECK(plane->gen("h", 2) * plane->gen("h") == plane->zero());

    // s^3 -> c1^2 s by applying the rewrite twice.
    RingPtr r1 = rank1_ring();
    RingElement s3 = r1->element({{1, {3, 0}}});
    CHECK(s3 == r1->element({{1, {1, 2}}}));
    CHECK(s3.str() == "s*c1^2");
}

TEST_CASE("normalization is idempotent on random elements") {
    std::mt19937_64 rng(20240811);
    RingPtr r1 = rank1_ring();
    for (int i = 0; i < 50; ++i) {
        RingElement x = random_element(rng, r1, 5, 6);
        TermList raw;
        for (const auto& [m, c] : x.terms()) raw.emplace_back(c, m.exponents());
        CHECK(r1->element(raw) == x);
        for (const auto& [m, c] : x.terms()) {
            CHECK(m.exponent(0) < 2);  // irreducible in s
            CHECK(m.degree() <= 6);
        }
    }
}

TEST_CASE("arithmetic against the dense truncated oracle") {
    std::mt19937_64 rng(7);
    RingPtr plane = plane_ring();
    RingElement h = plane->gen("h");
    RingElement one = plane->one();

    // (1+h)(1-h) = 1 - h^2 in Z[h]/(h^3).
    CHECK((one + h) * (one - h) == one - h * h);

    // x + (-x) = 0.
    RingElement x = random_element(rng, plane, 2, 4);
    CHECK((x + (-x)).is_zero());

    // Mod-2 Frobenius: (s + c1)^2 = s^2 + c1^2 in the free mod-2 ring.
    RingPtr f2 = GradedRing::make(2, {{"s", 1}, {"c1", 1}}, {}, 8);
    RingElement sum = f2->gen("s") + f2->gen("c1");
    CHECK(sum * sum == f2->gen("s", 2) + f2->gen("c1", 2));

    // Random products in a rule-free ring match the dense oracle.
    RingPtr free3 = GradedRing::make(0, {{"x", 1}, {"y", 1}, {"z", 1}}, {}, 6);
    for (int i = 0; i < 40; ++i) {
        RingElement a = random_element(rng, free3, 3, 5);
        RingElement b = random_element(rng, free3, 3, 5);
        CHECK(to_dense(a * b, 6) == to_dense(a, 6) * to_dense(b, 6));
        CHECK(to_dense(a + b, 6) == to_dense(a, 6) + to_dense(b, 6));
    }
}

TEST_CASE("ring axioms hold on normalized representatives") {
    std::mt19937_64 rng(99);
    RingPtr r1 = rank1_ring();
    RingPtr mod2 = GradedRing::make(
        2, {{"s", 1}, {"c1", 1}, {"c2", 2}},
        {{"s", 3, {{-1, {2, 1, 0}}, {-1, {1, 0, 1}}}}}, 8);
    for (const RingPtr& ring : {r1, mod2}) {
        for (int i = 0; i < 100; ++i) {
            RingElement a = random_element(rng, ring, 4, 4);
            RingElement b = random_element(rng, ring, 4, 4);
            RingElement c = random_element(rng, ring, 4, 4);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("reduce_mod is a coefficientwise ring homomorphism") {
    RingPtr r2 = GradedRing::make(
        0, {{"s", 1}, {"c1", 1}, {"c2", 2}},
        {{"s", 3, {{-1, {2, 1, 0}}, {-1, {1, 0, 1}}}}}, 8);
    // t = (-s)^2 + c1 s + c2 keeps the same terms mod 2.
    RingElement t = r2->element({{1, {2, 0, 0}}, {1, {1, 1, 0}}, {1, {0, 0, 1}}});
    RingElement t2 = reduce_mod(t, 2);
    CHECK(t2.ring()->modulus() == 2);
    CHECK(t2.term_count() == 3);
    CHECK(t2.str() == "s^2 + s*c1 + c2");

    RingPtr plane = plane_ring();
    CHECK(reduce_mod(Int(3) * plane->gen("h"), 3).is_zero());

    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
        RingElement a = random_element(rng, r2, 4, 4);
        RingElement b = random_element(rng, r2, 4, 4);
        CHECK(reduce_mod(a * b, 2) == reduce_mod(a, 2) * reduce_mod(b, 2));
        CHECK(reduce_mod(a + b, 5) == reduce_mod(a, 5) + reduce_mod(b, 5));
    }
    CHECK_THROWS_AS(reduce_mod(t2, 2), Error);  // already modular
}

TEST_CASE("degree components partition an element") {
    RingPtr ring = GradedRing::make(0, {{"a", 1}, {"b", 2}, {"v", 1}}, {}, 4);
    RingElement e = ring->one() + (ring->gen("a") - Int(2) * ring->gen("v")) +
                    (ring->gen("b") - Int(2) * (ring->gen("a") * ring->gen("v")) +
                     Int(2) * ring->gen("v", 2));
    CHECK(degree_component(e, 1) == ring->gen("a") - Int(2) * ring->gen("v"));
    CHECK(degree_component(e, 9).is_zero());

    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        RingElement x = random_element(rng, ring, 4, 6);
        RingElement sum = ring->zero();
        for (unsigned d = 0; d <= 4; ++d) sum = sum + degree_component(x, d);
        CHECK(sum == x);
    }
}

TEST_CASE("degree cap drops only terms above the cap") {
    RingPtr capped = GradedRing::make(0, {{"h", 1}}, {}, 3);
    RingElement h = capped->gen("h");
    CHECK(pow(h, 4).is_zero());
    CHECK(pow(h, 3) == capped->gen("h", 3));
}

TEST_CASE("cross-ring arithmetic is rejected") {
    RingPtr a = plane_ring();
    RingPtr b = rank1_ring();
    CHECK_THROWS_WITH_AS(a->gen("h") * b->gen("s"), doctest::Contains("RingMismatch"), Error);
}

TEST_CASE("map_generators is a ring homomorphism") {
    RingPtr src = GradedRing::make(2, {{"x", 1}, {"y", 1}}, {}, 6);
    RingPtr dst = GradedRing::make(2, {{"u", 1}}, {}, 6);
    std::vector<RingElement> images = {dst->gen("u"), dst->gen("u")};
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        RingElement p = random_element(rng, src, 3, 4);
        RingElement q = random_element(rng, src, 3, 4);
        CHECK(map_generators(p * q, dst, images) ==
              map_generators(p, dst, images) * map_generators(q, dst, images));
    }
}
