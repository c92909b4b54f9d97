#pragma once

#include "matrix.hpp"
#include "series.hpp"

namespace bdtwist {

// First-order coefficient in h of R under q = e^h, as an exact rational
// matrix. The zeroth order must be the identity.
inline RatMatrix classical_r(const VField& f, const SquareMatrix& R) {
    const int d = R.dim();
    RatMatrix r = rat_zeros(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Scalar& s = R.at(i, j);
            if (s.is_zero()) {
                if (i == j) throw NotIdentityAtZero();
                continue;
            }
            TruncatedSeries t = expand_at_one(f, s, 1);
            if (t[0] != Rat(i == j ? 1 : 0)) throw NotIdentityAtZero();
            r[i][j] = t[1];
        }
    return r;
}

// Leg embeddings of an n^2 x n^2 rational matrix into n^3 x n^3.
inline RatMatrix rat_embed(const RatMatrix& x, int n, int leg_a, int leg_b) {
    const int d3 = n * n * n;
    RatMatrix r = rat_zeros(d3, d3);
    auto index = [n](int i, int j, int k) { return (i * n + j) * n + k; };
    for (int p = 0; p < n; ++p)
        for (int s = 0; s < n; ++s)
            for (int pp = 0; pp < n; ++pp)
                for (int ss = 0; ss < n; ++ss) {
                    const Rat& v = x[p * n + s][pp * n + ss];
                    if (is_zero(v)) continue;
                    for (int m = 0; m < n; ++m) {
                        int row[3], col[3];
                        row[leg_a] = p; row[leg_b] = s;
                        col[leg_a] = pp; col[leg_b] = ss;
                        for (int l = 0; l < 3; ++l)
                            if (l != leg_a && l != leg_b) { row[l] = m; col[l] = m; }
                        r[index(row[0], row[1], row[2])][index(col[0], col[1], col[2])] = v;
                    }
                }
    return r;
}

inline RatMatrix rat_comm(const RatMatrix& a, const RatMatrix& b) {
    return rat_add(rat_mul(a, b), rat_scale(rat_mul(b, a), Rat(-1)));
}

// [r12, r13] + [r12, r23] + [r13, r23] as an exact rational matrix.
inline RatMatrix cybe_defect(const RatMatrix& r, int n) {
    RatMatrix r12 = rat_embed(r, n, 0, 1);
    RatMatrix r13 = rat_embed(r, n, 0, 2);
    RatMatrix r23 = rat_embed(r, n, 1, 2);
    return rat_add(rat_add(rat_comm(r12, r13), rat_comm(r12, r23)), rat_comm(r13, r23));
}

// r + r_21 with r_21 = P r P.
inline RatMatrix symmetric_part_plus(const RatMatrix& r, int n) {
    RatMatrix p = rat_zeros(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p[i * n + j][j * n + i] = 1;
    return rat_add(r, rat_mul(p, rat_mul(r, p)));
}

} // namespace bdtwist
