#include "topcell/steenrod.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace topcell;
using testsupport::DensePoly;
using testsupport::random_element;
using testsupport::to_dense;

namespace {

RingPtr sigma_ring(int p, unsigned cap) {
    return GradedRing::make(p, {{"s", 1}}, {}, cap);
}

RingPtr xring(int p, unsigned nvars, unsigned cap) {
    std::vector<Generator> gens;
    for (unsigned i = 1; i <= nvars; ++i) gens.push_back({"x" + std::to_string(i), 1});
    return GradedRing::make(p, std::move(gens), {}, cap);
}

}  // namespace

TEST_CASE("total operation on powers of a codim-1 class") {
    // Sq2(s^m) = m s^{m+1}, Sq4(s^m) = m(m-1)/2 s^{m+2}, P1(s^m) = m s^{m+2}.
    for (unsigned m = 1; m <= 8; ++m) {
        RingPtr r2 = sigma_ring(2, 2 * m + 2);
        SteenrodContext ctx2 = SteenrodContext::all_codim1(2, r2);
        OperationResult op2 = total_op(ctx2, r2->gen("s", m));
        CHECK(op2.component(0) == r2->gen("s", m));
        CHECK(op2.component(1) == Int(m) * r2->gen("s", m + 1));
        CHECK(op2.component(2) == Int(m * (m - 1) / 2) * r2->gen("s", m + 2));

        RingPtr r3 = sigma_ring(3, 3 * m + 3);
        SteenrodContext ctx3 = SteenrodContext::all_codim1(3, r3);
        OperationResult op3 = total_op(ctx3, r3->gen("s", m));
        CHECK(op3.component(0) == r3->gen("s", m));
        CHECK(op3.component(1).is_zero());
        CHECK(op3.component(2) == Int(m) * r3->gen("s", m + 2));
    }
}

TEST_CASE("components are additive and bounded by p·deg") {
    std::mt19937_64 rng(11);
    for (int p : {2, 3}) {
        RingPtr ring = xring(p, 3, 12);
        SteenrodContext ctx = SteenrodContext::all_codim1(p, ring);
        for (int i = 0; i < 30; ++i) {
            RingElement a = random_element(rng, ring, 3, 4);
            RingElement b = random_element(rng, ring, 3, 4);
            OperationResult oa = total_op(ctx, a);
            OperationResult ob = total_op(ctx, b);
            OperationResult osum = total_op(ctx, a + b);
            unsigned top = 12;
            for (unsigned s = 0; s <= top; ++s)
                CHECK(osum.component(s) == oa.component(s) + ob.component(s));
            // Output degree never exceeds p times the input degree.
            if (!a.is_zero())
                for (const auto& [shift, comp] : oa.components)
                    CHECK(comp.degree() <= static_cast<unsigned>(p) * a.degree());
        }
    }
}

TEST_CASE("codim-1 classes square and cube under the operation") {
    for (int p : {2, 3}) {
        RingPtr ring = xring(p, 2, 6);
        SteenrodContext ctx = SteenrodContext::all_codim1(p, ring);
        RingElement u = ring->gen("x1");
        OperationResult op = total_op(ctx, u);
        if (p == 2) CHECK(op.component(1) == u * u);
        if (p == 3) CHECK(op.component(2) == u * u * u);
    }
}

TEST_CASE("total operation against the dense substitution oracle") {
    std::mt19937_64 rng(13);
    for (int p : {2, 3}) {
        RingPtr ring = xring(p, 3, 9);
        SteenrodContext ctx = SteenrodContext::all_codim1(p, ring);
        for (int i = 0; i < 25; ++i) {
            RingElement e = random_element(rng, ring, 3, 4);
            DensePoly expected = to_dense(e, 9).total_power_substitution(p);
            DensePoly actual = to_dense(total_op(ctx, e).total(), 9);
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("Cartan multiplicativity") {
    std::mt19937_64 rng(19);
    for (int p : {2, 3}) {
        RingPtr ring = xring(p, 3, 14);
        SteenrodContext ctx = SteenrodContext::all_codim1(p, ring);
        // Sq(s^2) = (s + s^2)^2 unfolds from the definition.
        RingElement x = ring->gen("x1");
        CHECK(cartan_check(ctx, x, x));
        CHECK(cartan_check(ctx, ring->one(), random_element(rng, ring, 3, 4)));
        for (int i = 0; i < 200; ++i) {
            RingElement a = random_element(rng, ring, 2, 3);
            RingElement b = random_element(rng, ring, 2, 3);
            CHECK(cartan_check(ctx, a, b));
        }
    }
}

TEST_CASE("unsupported primes and foreign generators are rejected") {
    CHECK_THROWS_WITH_AS(SteenrodContext::all_codim1(5, sigma_ring(5, 4)),
                         doctest::Contains("UnsupportedPrime"), Error);
    RingPtr mixed = GradedRing::make(2, {{"x", 1}, {"c", 2}}, {}, 6);
    SteenrodContext ctx = SteenrodContext::make(2, mixed, {0});
    CHECK_THROWS_WITH_AS(total_op(ctx, mixed->gen("c")),
                         doctest::Contains("NonPolynomialInput"), Error);
}

TEST_CASE("symmetric reduction expresses symmetric polynomials in e_i") {
    RingPtr ring = xring(2, 4, 8);
    RingPtr target = universal_chern_ring(2, 4);
    std::vector<RingElement> images;
    for (unsigned j = 1; j <= 4; ++j) images.push_back(target->gen(j - 1));

    // e2^2 expands and reduces back to itself.
    RingElement e2 = elementary_symmetric(ring, 2);
    CHECK(symmetric_to_elementary(e2 * e2, target, images) == pow(target->gen(1), 2));

    // A non-symmetric input is rejected with zero-remainder failure.
    CHECK_THROWS_WITH_AS(symmetric_to_elementary(ring->gen("x2"), target, images),
                         doctest::Contains("NonPolynomialInput"), Error);

    // Round trip: random polynomial in e_1..e_4 -> expand in x -> reduce.
    std::mt19937_64 rng(37);
    for (int i = 0; i < 20; ++i) {
        RingElement in_e = random_element(rng, target, 4, 4);
        RingElement in_x = ring->zero();
        {
            std::vector<RingElement> es;
            for (unsigned j = 1; j <= 4; ++j) es.push_back(elementary_symmetric(ring, j));
            in_x = map_generators(in_e, ring, es);
        }
        CHECK(symmetric_to_elementary(in_x, target, images) == in_e);
    }
}

TEST_CASE("shift-2 operation on chern classes via the splitting principle") {
    // Sq4(c1) = 0 for any rank >= 3.
    for (unsigned r = 3; r <= 6; ++r) CHECK(op_on_chern(2, 1, r).is_zero());

    // Sq4(c2) = c2^2 mod 2 at rank 4 (e2(x^2) = e2^2 - 2 e1 e3 + 2 e4).
    {
        RingElement got = op_on_chern(2, 2, 4);
        CHECK(got == pow(got.ring()->gen("c2"), 2));
    }

    // P1(c1) = c1^3 - 3 c1 c2 + 3 c3 = c1^3 mod 3 (power-sum identity).
    for (unsigned r = 3; r <= 5; ++r) {
        RingElement got = op_on_chern(3, 1, r);
        CHECK(got == pow(got.ring()->gen("c1"), 3));
    }

    CHECK_THROWS_WITH_AS(op_on_chern(2, 5, 4), doctest::Contains("IndexOutOfRange"), Error);
}

TEST_CASE("op_on_chern agrees with a dense independent computation") {
    // Dense route: expand e_i, substitute x -> x + x^p densely, take the
    // degree-(i+2) part, and compare with the expansion of the sparse result.
    for (int p : {2, 3}) {
        for (unsigned r = 1; r <= 4; ++r) {
            for (unsigned i = 1; i <= r; ++i) {
                unsigned cap = i + 2;
                RingPtr xr = xring(p, r, cap);
                DensePoly dense_ei = to_dense(elementary_symmetric(xr, i), cap);
                DensePoly dense_shift2 =
                    dense_ei.total_power_substitution(p).degree_part(i + 2);

                RingElement sparse = op_on_chern(p, i, r);
                std::vector<RingElement> es;
                for (unsigned j = 1; j <= r; ++j) es.push_back(elementary_symmetric(xr, j));
                DensePoly expanded = to_dense(map_generators(sparse, xr, es), cap);
                CHECK(expanded == dense_shift2);
            }
        }
    }
}

TEST_CASE("closed-form table: agreement at p=2, documented discrepancy at p=3") {
    auto rows2 = compare_wu_formulas(2, 6);
    for (const auto& row : rows2) {
        INFO("p=2 r=", row.rank, " i=", row.index);
        CHECK(row.agrees);
    }

    auto rows3 = compare_wu_formulas(3, 6);
    for (const auto& row : rows3) {
        if (row.index == 1 && row.rank >= 3) {
            INFO("p=3 r=", row.rank);
            CHECK_FALSE(row.agrees);
            // closed form minus oracle = 2 c3 mod 3.
            RingElement expected = Int(2) * row.discrepancy.ring()->gen("c3");
            CHECK(row.discrepancy == expected);
        }
        if (row.index == row.rank) {
            // Classes beyond the rank vanish; both sides degenerate together
            // only when they agree, which holds at i = r.
            CHECK(row.agrees);
        }
    }
}
