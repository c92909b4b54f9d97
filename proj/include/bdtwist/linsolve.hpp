#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"
#include "scalar.hpp"

namespace bdtwist {

inline bool field_is_zero(const Rat& x) { return is_zero(x); }
inline bool field_is_zero(const Scalar& x) { return x.is_zero(); }

// General solution of A x = rhs over an exact field (Rat or Scalar).
// particular: free variables set to zero; nullspace: basis of ker A.
template <class T>
struct LinearSolution {
    bool consistent = false;
    std::vector<T> particular;
    std::vector<std::vector<T>> nullspace;
};

template <class T>
LinearSolution<T> solve_linear_system(std::vector<std::vector<T>> a, std::vector<T> rhs) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col; // per eliminated row

    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && field_is_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(rhs[piv], rhs[r]);
        T inv_p = T(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv_p;
        rhs[r] = rhs[r] * inv_p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || field_is_zero(a[i][c])) continue;
            T f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
            rhs[i] = rhs[i] - f * rhs[r];
        }
        pivot_col.push_back((int)c);
        ++r;
    }

    LinearSolution<T> sol;
    for (size_t i = r; i < rows; ++i)
        if (!field_is_zero(rhs[i])) return sol; // inconsistent
    sol.consistent = true;

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    sol.particular.assign(cols, T(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) sol.particular[pivot_col[i]] = rhs[i];

    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<T> vec(cols, T(0));
        vec[free_c] = T(1);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            vec[pivot_col[i]] = T(0) - a[i][free_c];
        sol.nullspace.push_back(std::move(vec));
    }
    return sol;
}

} // namespace bdtwist
