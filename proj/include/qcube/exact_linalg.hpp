#pragma once

/// \file exact_linalg.hpp
/// Exact dense routines on big-integer matrices: fraction-free determinants
/// (Bareiss), characteristic polynomials (Faddeev-LeVerrier with exact
/// divisions), integer polynomial helpers, and rational Gaussian solves.

#include <qcube/operators.hpp>

#include <optional>
#include <vector>

namespace qcube {

/// Fraction-free determinant with row pivoting. Intermediate entries are
/// minors of the input, so nothing leaves the integers.
inline Int bareiss_determinant(const IntMatrix& M) {
    int n = M.size();
    if (n == 0) return 1;
    std::vector<Int> a = M.dense();
    auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { r = i; break; }
            if (r < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = v;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

/// Monic characteristic polynomial det(xI - M), coefficients ascending
/// (coeffs[i] multiplies x^i). Faddeev-LeVerrier: the trace divisions are
/// exact over the integers.
inline std::vector<Int> characteristic_polynomial(const IntMatrix& M) {
    int n = M.size();
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
    coeffs[static_cast<size_t>(n)] = 1;
    if (n == 0) return coeffs;

    std::vector<Int> A = M.dense();
    std::vector<Int> B(static_cast<size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i) B[static_cast<size_t>(i) * n + i] = 1;
    std::vector<Int> work(static_cast<size_t>(n) * n);

    for (int k = 1; k <= n; ++k) {
        // work = A * B
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int s = 0;
                for (int t = 0; t < n; ++t)
                    s += A[static_cast<size_t>(i) * n + t] * B[static_cast<size_t>(t) * n + j];
                work[static_cast<size_t>(i) * n + j] = s;
            }
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += work[static_cast<size_t>(i) * n + i];
        Int ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        ck = -ck;
        coeffs[static_cast<size_t>(n - k)] = ck;
        B = work;
        for (int i = 0; i < n; ++i) B[static_cast<size_t>(i) * n + i] += ck;
    }
    return coeffs;
}

// ---------------------------------------------------------------------------
// integer polynomials, coefficients ascending
// ---------------------------------------------------------------------------

inline std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

/// prod (x - root)^mult over the given list.
inline std::vector<Int> poly_from_roots(const std::vector<std::pair<Int, Int>>& roots_with_mult) {
    std::vector<Int> p{Int(1)};
    for (const auto& [root, mult] : roots_with_mult) {
        std::vector<Int> lin{-root, Int(1)};
        for (Int i = 0; i < mult; ++i) p = poly_mul(p, lin);
    }
    return p;
}

inline Int poly_eval(const std::vector<Int>& p, const Int& x) {
    Int acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// ---------------------------------------------------------------------------
// rational linear systems
// ---------------------------------------------------------------------------

/// Solve A x = b exactly over the rationals (A given row-major, r x c).
/// Returns a solution with free variables set to zero, or nullopt when the
/// system is inconsistent.
inline std::optional<std::vector<Rat>> rational_solve(std::vector<std::vector<Rat>> A,
                                                      std::vector<Rat> b) {
    size_t r = A.size();
    size_t c = r == 0 ? 0 : A[0].size();
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < c && row < r; ++col) {
        size_t sel = row;
        while (sel < r && A[sel][col] == 0) ++sel;
        if (sel == r) continue;
        std::swap(A[sel], A[row]);
        std::swap(b[sel], b[row]);
        Rat inv = Rat(1) / A[row][col];
        for (size_t j = col; j < c; ++j) A[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < r; ++i) {
            if (i == row || A[i][col] == 0) continue;
            Rat f = A[i][col];
            for (size_t j = col; j < c; ++j) A[i][j] -= f * A[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < r; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rat> x(c, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace qcube
