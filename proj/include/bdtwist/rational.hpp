#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace bdtwist {

// Exact rational coefficients. GMP keeps every intermediate value exact;
// nothing in the library ever rounds.
using Rat = mpq_class;
using Int = mpz_class;

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Int lcm_int(const Int& a, const Int& b) {
    Int g, l;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    l = a / g * b;
    return abs(l);
}

// lcm of denominators of a list of rationals; 1 for an empty list.
inline Int denominator_lcm(const RatVector& xs) {
    Int l = 1;
    for (const Rat& x : xs) l = lcm_int(l, x.get_den());
    return l;
}

inline RatMatrix rat_zeros(int rows, int cols) {
    return RatMatrix(rows, RatVector(cols, Rat(0)));
}

inline RatMatrix rat_identity(int n) {
    RatMatrix m = rat_zeros(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatMatrix rat_transpose(const RatMatrix& a) {
    int r = (int)a.size(), c = r ? (int)a[0].size() : 0;
    RatMatrix t = rat_zeros(c, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) t[j][i] = a[i][j];
    return t;
}

inline RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    int n = (int)a.size(), k = (int)b.size(), m = k ? (int)b[0].size() : 0;
    RatMatrix c = rat_zeros(n, m);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (is_zero(a[i][l])) continue;
            for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline RatMatrix rat_add(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
    return c;
}

inline RatMatrix rat_scale(const RatMatrix& a, const Rat& s) {
    RatMatrix c = a;
    for (auto& row : c)
        for (auto& x : row) x *= s;
    return c;
}

inline bool rat_equal(const RatMatrix& a, const RatMatrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

inline bool rat_is_zero_matrix(const RatMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!is_zero(x)) return false;
    return true;
}

// Exact inverse of a rational matrix by Gauss-Jordan elimination.
// Returns false if singular.
inline bool rat_invert(const RatMatrix& a, RatMatrix& out) {
    int n = (int)a.size();
    RatMatrix m = a, inv = rat_identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero(m[r][col])) { piv = r; break; }
        if (piv < 0) return false;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = m[col][col];
        for (int j = 0; j < n; ++j) { m[col][j] /= p; inv[col][j] /= p; }
        for (int r = 0; r < n; ++r) {
            if (r == col || is_zero(m[r][col])) continue;
            Rat f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    out = inv;
    return true;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace bdtwist
