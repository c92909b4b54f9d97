#pragma once

#include <vector>

#include "linsolve.hpp"
#include "triples.hpp"

namespace bdtwist {

// Solution data of the exponent system: the skew-symmetric matrix A solving
//   A_{im} + A_{m tau(i)} + a^(s)_{im} + a^(s)_{tau(i) m} = 0
// for all i in Gamma_1 and all m, the Cartan exponent matrix b with
// A = a^T (b - b^T) a, and the session denominator D.
struct ExponentSolution {
    RatMatrix A;                      // r x r, skew-symmetric
    RatMatrix b;                      // r x r
    int D = 1;                        // lcm of exponent denominators
    std::vector<RatMatrix> null_basis; // skew matrices spanning the solution space of A
};

struct GaugeOptions {
    RatMatrix sym_b;      // symmetric part added to b (empty = zero)
    RatVector free_params; // coefficients on the null-space basis (empty = zero)
};

namespace detail {

// unknown index of A_{pq}, 0 <= p < q < r
inline int skew_index(int p, int q, int r) {
    // row-major upper triangle
    return p * (2 * r - p - 1) / 2 + (q - p - 1);
}

inline RatMatrix skew_from_vector(const RatVector& u, int r) {
    RatMatrix A = rat_zeros(r, r);
    for (int p = 0; p < r; ++p)
        for (int q = p + 1; q < r; ++q) {
            A[p][q] = u[skew_index(p, q, r)];
            A[q][p] = -A[p][q];
        }
    return A;
}

} // namespace detail

// Exact Gaussian elimination on the (t1.10)-type system. Works on arbitrary
// candidate triples; throws Inconsistent exactly when the candidate is not a
// Belavin-Drinfeld triple.
inline ExponentSolution solve_exponents(const BDTriple& t, const GaugeOptions& gauge = {}) {
    const CartanData cartan = build_cartan(t.n);
    const int r = cartan.rank;
    const int unknowns = r * (r - 1) / 2;

    std::vector<RatVector> rows;
    RatVector rhs;
    auto add_unknown = [&](RatVector& row, int x, int y, const Rat& coeff) {
        if (x == y) return;
        if (x < y)
            row[detail::skew_index(x, y, r)] += coeff;
        else
            row[detail::skew_index(y, x, r)] -= coeff;
    };
    for (const auto& [i1, ti1] : t.tau) {
        int i = i1 - 1, ti = ti1 - 1;
        for (int m = 0; m < r; ++m) {
            RatVector row(unknowns, Rat(0));
            add_unknown(row, i, m, Rat(1));
            add_unknown(row, m, ti, Rat(1));
            rows.push_back(std::move(row));
            rhs.push_back(Rat(-(cartan.sym(i, m) + cartan.sym(ti, m))));
        }
    }

    auto sol = solve_linear_system<Rat>(rows, rhs);
    if (!sol.consistent) throw Inconsistent();

    ExponentSolution out;
    RatVector u = sol.particular;
    for (size_t l = 0; l < sol.nullspace.size(); ++l) {
        if (l < gauge.free_params.size() && !is_zero(gauge.free_params[l]))
            for (int k = 0; k < unknowns; ++k) u[k] += gauge.free_params[l] * sol.nullspace[l][k];
        out.null_basis.push_back(detail::skew_from_vector(sol.nullspace[l], r));
    }
    out.A = detail::skew_from_vector(u, r);

    // b = 1/2 * (a^T)^{-1} A a^{-1}, the skew-symmetric choice, plus the gauge's
    // symmetric part (which does not change A).
    RatMatrix a = rat_zeros(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[i][j] = cartan.sym(i, j);
    RatMatrix a_inv, at_inv;
    if (!rat_invert(a, a_inv) || !rat_invert(rat_transpose(a), at_inv))
        throw Error("Cartan matrix not invertible");
    out.b = rat_scale(rat_mul(at_inv, rat_mul(out.A, a_inv)), Rat(1, 2));
    if (!gauge.sym_b.empty()) {
        if ((int)gauge.sym_b.size() != r) throw OutOfRange("gauge sym_b size");
        if (!rat_equal(gauge.sym_b, rat_transpose(gauge.sym_b)))
            throw OutOfRange("gauge sym_b must be symmetric");
        out.b = rat_add(out.b, gauge.sym_b);
    }

    // Session denominator: lcm of denominators of every family of rational
    // q-exponents this solution can produce (A for mu/nu, b for K, b*a and
    // b^T*a for X/Y, (b-b^T)*a for R+-, a^{-1} for K0).
    RatMatrix bt = rat_transpose(out.b);
    RatMatrix bdiff = rat_add(out.b, rat_scale(bt, Rat(-1)));
    Int lcm = 1;
    auto absorb = [&](const RatMatrix& m) {
        for (const auto& row : m) lcm = lcm_int(lcm, denominator_lcm(row));
    };
    absorb(out.A);
    absorb(out.b);
    absorb(a_inv);
    absorb(rat_mul(out.b, a));
    absorb(rat_mul(bt, a));
    absorb(rat_mul(bdiff, a));
    if (!lcm.fits_sint_p()) throw Error("session denominator overflow");
    out.D = (int)lcm.get_si();
    return out;
}

} // namespace bdtwist
