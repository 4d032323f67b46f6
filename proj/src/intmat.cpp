#include "topcell/intmat.hpp"

#include <algorithm>
#include <utility>

namespace topcell {

IMat::IMat(size_t r, size_t c, std::vector<Int> data) : rows(r), cols(c), a(std::move(data)) {
    if (a.size() != rows * cols) fail(errc::invalid_argument, "matrix data size mismatch");
}

IMat IMat::identity(size_t n) {
    IMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::from_rows(const std::vector<std::vector<Int>>& rows_in) {
    if (rows_in.empty()) return IMat(0, 0);
    IMat m(rows_in.size(), rows_in.front().size());
    for (size_t i = 0; i < m.rows; ++i) {
        if (rows_in[i].size() != m.cols) fail(errc::invalid_argument, "ragged matrix rows");
        for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    }
    return m;
}

bool IMat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

bool IMat::is_identity() const {
    if (rows != cols) return false;
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (at(i, j) != Int(i == j ? 1 : 0)) return false;
    return true;
}

IMat IMat::transpose() const {
    IMat t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<Int> IMat::column(size_t j) const {
    std::vector<Int> c(rows);
    for (size_t i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

IMat operator*(const IMat& x, const IMat& y) {
    if (x.cols != y.rows) fail(errc::shape_mismatch, "matrix product shape");
    IMat z(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (size_t j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

IMat operator+(const IMat& x, const IMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::shape_mismatch, "matrix sum shape");
    IMat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

IMat operator-(const IMat& x, const IMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::shape_mismatch, "matrix diff shape");
    IMat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
}

bool operator==(const IMat& x, const IMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

std::vector<Int> IMat::apply(const std::vector<Int>& x) const {
    if (x.size() != cols) fail(errc::shape_mismatch, "matrix-vector shape");
    std::vector<Int> y(rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

IMat IMat::hconcat(const IMat& x, const IMat& y) {
    if (x.rows != y.rows) fail(errc::shape_mismatch, "hconcat row mismatch");
    IMat z(x.rows, x.cols + y.cols);
    for (size_t i = 0; i < x.rows; ++i) {
        for (size_t j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
        for (size_t j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
    }
    return z;
}

std::vector<Int> SnfResult::diagonal() const {
    size_t n = std::min(d.rows, d.cols);
    std::vector<Int> diag(n);
    for (size_t i = 0; i < n; ++i) diag[i] = d.at(i, i);
    return diag;
}

namespace {

struct SnfWork {
    IMat d, u, v;

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < d.cols; ++k) std::swap(d.at(i, k), d.at(j, k));
        for (size_t k = 0; k < u.cols; ++k) std::swap(u.at(i, k), u.at(j, k));
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < d.rows; ++k) std::swap(d.at(k, i), d.at(k, j));
        for (size_t k = 0; k < v.rows; ++k) std::swap(v.at(k, i), v.at(k, j));
    }
    // row_i -= q * row_j
    void row_sub(size_t i, size_t j, const Int& q) {
        if (q == 0) return;
        for (size_t k = 0; k < d.cols; ++k) d.at(i, k) -= q * d.at(j, k);
        for (size_t k = 0; k < u.cols; ++k) u.at(i, k) -= q * u.at(j, k);
    }
    // col_i -= q * col_j
    void col_sub(size_t i, size_t j, const Int& q) {
        if (q == 0) return;
        for (size_t k = 0; k < d.rows; ++k) d.at(k, i) -= q * d.at(k, j);
        for (size_t k = 0; k < v.rows; ++k) v.at(k, i) -= q * v.at(k, j);
    }
    void negate_row(size_t i) {
        for (size_t k = 0; k < d.cols; ++k) d.at(i, k) = -d.at(i, k);
        for (size_t k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
    }
    void add_row(size_t i, size_t j) {  // row_i += row_j
        for (size_t k = 0; k < d.cols; ++k) d.at(i, k) += d.at(j, k);
        for (size_t k = 0; k < u.cols; ++k) u.at(i, k) += u.at(j, k);
    }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SnfResult smith_normal_form(const IMat& A) {
    SnfWork w;
    w.d = A;
    w.u = IMat::identity(A.rows);
    w.v = IMat::identity(A.cols);
    size_t n = std::min(A.rows, A.cols);

    for (size_t t = 0; t < n; ++t) {
        // Pick the entry of least magnitude in the trailing block as pivot.
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < A.rows; ++i)
            for (size_t j = t; j < A.cols; ++j) {
                const Int& x = w.d.at(i, j);
                if (x == 0) continue;
                if (!found || abs_int(x) < abs_int(w.d.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < A.rows; ++i) {
                if (w.d.at(i, t) == 0) continue;
                Int q = w.d.at(i, t) / w.d.at(t, t);
                w.row_sub(i, t, q);
                if (w.d.at(i, t) != 0) {
                    w.swap_rows(t, i);  // strictly smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < A.cols; ++j) {
                if (w.d.at(t, j) == 0) continue;
                Int q = w.d.at(t, j) / w.d.at(t, t);
                w.col_sub(j, t, q);
                if (w.d.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Pivot must divide every trailing entry for the divisor chain.
            bool divides_all = true;
            for (size_t i = t + 1; i < A.rows && divides_all; ++i)
                for (size_t j = t + 1; j < A.cols && divides_all; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.add_row(t, i);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (w.d.at(t, t) < 0) w.negate_row(t);
    }

    SnfResult result;
    result.u = std::move(w.u);
    result.d = std::move(w.d);
    result.v = std::move(w.v);
    return result;
}

std::optional<std::vector<Int>> solve_columns(const IMat& B, const std::vector<Int>& x) {
    if (x.size() != B.rows) fail(errc::shape_mismatch, "solve shape");
    SnfResult snf = smith_normal_form(B);
    std::vector<Int> y = snf.u.apply(x);
    std::vector<Int> s(B.cols, 0);
    size_t n = std::min(B.rows, B.cols);
    for (size_t i = 0; i < B.rows; ++i) {
        const Int d = i < n ? snf.d.at(i, i) : Int(0);
        if (d == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % d != 0) return std::nullopt;
            if (i < B.cols) s[i] = y[i] / d;
        }
    }
    return snf.v.apply(s);
}

IMat integer_kernel(const IMat& A) {
    SnfResult snf = smith_normal_form(A);
    size_t n = std::min(A.rows, A.cols);
    std::vector<size_t> zero_cols;
    for (size_t j = 0; j < A.cols; ++j) {
        bool zero = j >= n || snf.d.at(j, j) == 0;
        if (zero) zero_cols.push_back(j);
    }
    IMat k(A.cols, zero_cols.size());
    for (size_t idx = 0; idx < zero_cols.size(); ++idx)
        for (size_t i = 0; i < A.cols; ++i) k.at(i, idx) = snf.v.at(i, zero_cols[idx]);
    return k;
}

IMat inverse_unimodular(const IMat& U) {
    if (U.rows != U.cols) fail(errc::shape_mismatch, "inverse of non-square matrix");
    IMat inv(U.rows, U.cols);
    for (size_t j = 0; j < U.cols; ++j) {
        std::vector<Int> e(U.rows, 0);
        e[j] = 1;
        auto col = solve_columns(U, e);
        if (!col) fail(errc::invalid_argument, "matrix is not unimodular");
        for (size_t i = 0; i < U.rows; ++i) inv.at(i, j) = (*col)[i];
    }
    return inv;
}

Int determinant(const IMat& A) {
    if (A.rows != A.cols) fail(errc::shape_mismatch, "determinant of non-square matrix");
    size_t n = A.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IMat m = A;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace topcell
