#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace bdtwist {

// Cartan data of A_{n-1}: tridiagonal Cartan matrix, d_i = 1, a^(s) = a.
struct CartanData {
    int n = 0;    // sl(n)
    int rank = 0; // n - 1
    std::vector<std::vector<int>> a;
    std::vector<int> d;

    int sym(int i, int j) const { return d[i] * a[i][j]; } // 0-based
};

inline CartanData build_cartan(int n) {
    if (n < 2) throw UnsupportedAlgebra("A-series needs n >= 2, got n = " + std::to_string(n));
    CartanData c;
    c.n = n;
    c.rank = n - 1;
    c.a.assign(c.rank, std::vector<int>(c.rank, 0));
    c.d.assign(c.rank, 1);
    for (int i = 0; i < c.rank; ++i) {
        c.a[i][i] = 2;
        if (i + 1 < c.rank) c.a[i][i + 1] = c.a[i + 1][i] = -1;
    }
    return c;
}

// Positive root of A_{n-1} as the pair (i, j), 1 <= i < j <= n, meaning
// alpha_i + ... + alpha_{j-1}; coordinates over simple roots are 0/1 with
// contiguous support.
struct Root {
    int from = 0, to = 0; // 1-based, from < to

    int height() const { return to - from; }
    bool is_simple() const { return height() == 1; }
    bool operator==(const Root& o) const { return from == o.from && to == o.to; }
    bool operator!=(const Root& o) const { return !(*this == o); }
    bool operator<(const Root& o) const {
        return from != o.from ? from < o.from : to < o.to;
    }

    std::vector<int> coords(int rank) const {
        std::vector<int> c(rank, 0);
        for (int s = from; s < to; ++s) c[s - 1] = 1;
        return c;
    }

    static Root simple(int i) { return Root{i, i + 1}; }

    std::string str() const { return "(" + std::to_string(from) + "," + std::to_string(to) + ")"; }
};

// Sum of two roots when the result is again a positive root.
inline std::optional<Root> root_sum(const Root& a, const Root& b) {
    if (a.to == b.from) return Root{a.from, b.to};
    if (b.to == a.from) return Root{b.from, a.to};
    return std::nullopt;
}

// <alpha, beta> with the A-series bilinear form (a^(s) extended bilinearly).
inline int inner(const CartanData& c, const Root& alpha, const Root& beta) {
    auto u = alpha.coords(c.rank), w = beta.coords(c.rank);
    int s = 0;
    for (int i = 0; i < c.rank; ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < c.rank; ++j)
            if (w[j]) s += c.sym(i, j);
    }
    return s;
}

// <alpha, A beta> for a rational matrix A on simple-root coordinates.
inline Rat bilinear(const RatMatrix& m, const Root& alpha, const Root& beta, int rank) {
    auto u = alpha.coords(rank), w = beta.coords(rank);
    Rat s(0);
    for (int i = 0; i < rank; ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < rank; ++j)
            if (w[j]) s += m[i][j];
    }
    return s;
}

// All positive roots in the lexicographic order on (i, j). This order is
// convex: for gamma = (i,j) = (i,k) + (k,j), both positions of the summands
// lie on opposite sides of gamma's position.
struct NormalOrder {
    int n = 0;
    std::vector<Root> roots;

    int position(const Root& r) const {
        for (size_t p = 0; p < roots.size(); ++p)
            if (roots[p] == r) return (int)p;
        throw OutOfRange("root " + r.str() + " not in order for n = " + std::to_string(n));
    }
    int size() const { return (int)roots.size(); }
};

inline bool is_convex(const NormalOrder& order) {
    for (const Root& a : order.roots)
        for (const Root& b : order.roots) {
            if (b == a) continue;
            auto g = root_sum(a, b);
            if (!g) continue;
            int pa = order.position(a), pb = order.position(b), pg = order.position(*g);
            if ((pg > pa && pg > pb) || (pg < pa && pg < pb)) return false;
        }
    return true;
}

inline NormalOrder convex_order(int n) {
    if (n < 2) throw UnsupportedAlgebra("A-series needs n >= 2");
    NormalOrder o;
    o.n = n;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) o.roots.push_back(Root{i, j});
    assert(is_convex(o));
    return o;
}

// Minimal interval {alpha, beta}, alpha < beta, with gamma = alpha + beta and
// no strict subinterval that also decomposes gamma; ties broken by the
// leftmost alpha.
inline std::pair<Root, Root> minimal_interval(const NormalOrder& order, const Root& gamma) {
    if (gamma.is_simple()) throw NotComposite();
    struct Cand { Root a, b; int pa, pb; };
    std::vector<Cand> cands;
    for (const Root& a : order.roots)
        for (const Root& b : order.roots) {
            auto s = root_sum(a, b);
            if (!s || *s != gamma) continue;
            int pa = order.position(a), pb = order.position(b);
            if (pa < pb) cands.push_back({a, b, pa, pb});
        }
    assert(!cands.empty());
    std::vector<Cand> minimal;
    for (const Cand& c : cands) {
        bool has_sub = false;
        for (const Cand& d : cands) {
            if (d.pa == c.pa && d.pb == c.pb) continue;
            if (d.pa >= c.pa && d.pb <= c.pb) { has_sub = true; break; }
        }
        if (!has_sub) minimal.push_back(c);
    }
    const Cand* best = &minimal.front();
    for (const Cand& c : minimal)
        if (c.pa < best->pa) best = &c;
    return {best->a, best->b};
}

} // namespace bdtwist
