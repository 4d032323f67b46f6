#pragma once

#include "topcell/common.hpp"

#include <optional>
#include <vector>

namespace topcell {

/// Dense integer matrix, row-major.
struct IMat {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    IMat(size_t r, size_t c, std::vector<Int> data);
    static IMat identity(size_t n);
    static IMat from_rows(const std::vector<std::vector<Int>>& rows);

    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

    bool is_zero() const;
    bool is_identity() const;
    IMat transpose() const;
    std::vector<Int> column(size_t j) const;

    friend IMat operator*(const IMat& x, const IMat& y);
    friend IMat operator+(const IMat& x, const IMat& y);
    friend IMat operator-(const IMat& x, const IMat& y);
    friend bool operator==(const IMat& x, const IMat& y);
    friend bool operator!=(const IMat& x, const IMat& y) { return !(x == y); }

    std::vector<Int> apply(const std::vector<Int>& x) const;

    /// Horizontal concatenation [x | y].
    static IMat hconcat(const IMat& x, const IMat& y);
};

/// Smith normal form U*A*V = D with U, V unimodular and the diagonal of D
/// nonnegative with d_1 | d_2 | ... .
struct SnfResult {
    IMat u, d, v;
    std::vector<Int> diagonal() const;
};

SnfResult smith_normal_form(const IMat& A);

/// Some t with B*t = x over the integers, if one exists.
std::optional<std::vector<Int>> solve_columns(const IMat& B, const std::vector<Int>& x);

/// Basis of the integer kernel of A (columns).
IMat integer_kernel(const IMat& A);

/// Inverse of a unimodular integer matrix.
IMat inverse_unimodular(const IMat& U);

/// Exact determinant (Bareiss).
Int determinant(const IMat& A);

}  // namespace topcell
