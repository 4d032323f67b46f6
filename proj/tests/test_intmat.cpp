#include "topcell/intmat.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace topcell;
using testsupport::random_matrix;
using testsupport::random_unimodular;

namespace {

bool divisibility_chain(const std::vector<Int>& diag) {
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
        if (diag[i] < 0) return false;
        if (diag[i] == 0 && diag[i + 1] != 0) return false;
        if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
    }
    return true;
}

bool off_diagonal_zero(const IMat& d) {
    for (size_t i = 0; i < d.rows; ++i)
        for (size_t j = 0; j < d.cols; ++j)
            if (i != j && d.at(i, j) != 0) return false;
    return true;
}

std::vector<Int> nonzero_diag(const SnfResult& snf) {
    std::vector<Int> out;
    for (const Int& d : snf.diagonal())
        if (d != 0) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("snf of diag(2,3) has invariant factors (1,6)") {
    IMat a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 3;
    SnfResult snf = smith_normal_form(a);
    CHECK(snf.diagonal() == std::vector<Int>{1, 6});
    CHECK(snf.u * a * snf.v == snf.d);
}

TEST_CASE("snf of the zero matrix is trivial") {
    IMat a(3, 2);
    SnfResult snf = smith_normal_form(a);
    CHECK(snf.d.is_zero());
    CHECK(snf.u.is_identity());
    CHECK(snf.v.is_identity());
}

TEST_CASE("snf on random matrices: UAV = D, unimodularity, chain") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<size_t> dim(1, 6);
    for (int i = 0; i < 200; ++i) {
        IMat a = random_matrix(rng, dim(rng), dim(rng), 20);
        SnfResult snf = smith_normal_form(a);
        CHECK(snf.u * a * snf.v == snf.d);
        CHECK(off_diagonal_zero(snf.d));
        CHECK(divisibility_chain(snf.diagonal()));
        Int du = determinant(snf.u);
        Int dv = determinant(snf.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
    }
}

TEST_CASE("invariant factors are stable under unimodular change of basis") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 60; ++i) {
        IMat a = random_matrix(rng, 4, 5, 12);
        SnfResult snf = smith_normal_form(a);
        IMat p = random_unimodular(rng, 4);
        IMat q = random_unimodular(rng, 5);
        SnfResult conj = smith_normal_form(p * a * q);
        CHECK(nonzero_diag(snf) == nonzero_diag(conj));
    }
}

TEST_CASE("integer solving and kernels") {
    // 2x = 4 has x = 2; 2x = 3 has no integer solution.
    IMat two(1, 1);
    two.at(0, 0) = 2;
    auto sol = solve_columns(two, {Int(4)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK_FALSE(solve_columns(two, {Int(3)}).has_value());

    std::mt19937_64 rng(5150);
    for (int i = 0; i < 50; ++i) {
        IMat b = random_matrix(rng, 4, 3, 9);
        // Solvable by construction.
        IMat t = random_matrix(rng, 3, 1, 9);
        std::vector<Int> x = b.apply(t.column(0));
        auto s = solve_columns(b, x);
        REQUIRE(s.has_value());
        CHECK(b.apply(*s) == x);

        IMat k = integer_kernel(b);
        for (size_t j = 0; j < k.cols; ++j) {
            std::vector<Int> image = b.apply(k.column(j));
            CHECK(std::all_of(image.begin(), image.end(),
                              [](const Int& v) { return v == 0; }));
        }
    }
}

TEST_CASE("unimodular inverse") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 30; ++i) {
        IMat u = random_unimodular(rng, 5);
        IMat inv = inverse_unimodular(u);
        CHECK(u * inv == IMat::identity(5));
        CHECK(inv * u == IMat::identity(5));
    }
    IMat singular(2, 2);
    singular.at(0, 0) = 2;
    CHECK_THROWS_AS(inverse_unimodular(singular), Error);
}

TEST_CASE("determinant oracle on known matrices") {
    IMat a = IMat::from_rows({{Int(1), Int(2)}, {Int(3), Int(4)}});
    CHECK(determinant(a) == -2);
    CHECK(determinant(IMat::identity(4)) == 1);
    IMat zero_col = IMat::from_rows({{Int(0), Int(2)}, {Int(0), Int(4)}});
    CHECK(determinant(zero_col) == 0);
}
