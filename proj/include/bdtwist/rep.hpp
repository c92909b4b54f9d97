#pragma once

#include <vector>

#include "exponents.hpp"
#include "matrix.hpp"
#include "roots.hpp"
#include "triples.hpp"

namespace bdtwist {

// Fundamental (vector) representation of U_q(sl(n)):
//   e_i = E_{i,i+1}, f_i = E_{i+1,i}, h_i = E_{ii} - E_{i+1,i+1},
// indices 0-based in code, simple roots 0..n-2.
struct FundamentalRep {
    int n = 0;
    std::vector<SquareMatrix> e, f;
    std::vector<std::vector<int>> hdiag; // hdiag[i][p] = (h_i)_{pp}

    SquareMatrix h_matrix(int i) const {
        std::vector<Scalar> d;
        for (int p = 0; p < n; ++p) d.push_back(Scalar(Rat(hdiag[i][p])));
        return SquareMatrix::diagonal(std::move(d));
    }
    // K_i = q^{d_i h_i}; d_i = 1 in the A-series
    DiagonalExponentMatrix K(int i) const {
        RatVector e_(n);
        for (int p = 0; p < n; ++p) e_[p] = hdiag[i][p];
        return DiagonalExponentMatrix{std::move(e_)};
    }
};

inline FundamentalRep fundamental_rep(int n) {
    if (n < 2) throw UnsupportedAlgebra("A-series needs n >= 2");
    FundamentalRep rep;
    rep.n = n;
    for (int i = 0; i < n - 1; ++i) {
        rep.e.push_back(SquareMatrix::unit(n, i, i + 1));
        rep.f.push_back(SquareMatrix::unit(n, i + 1, i));
        std::vector<int> hd(n, 0);
        hd[i] = 1;
        hd[i + 1] = -1;
        rep.hdiag.push_back(std::move(hd));
    }
    return rep;
}

inline Scalar q_binomial(const Scalar& base, int nn, int k) {
    return q_factorial(base, nn, QNumberKind::symmetric) /
           (q_factorial(base, k, QNumberKind::symmetric) *
            q_factorial(base, nn - k, QNumberKind::symmetric));
}

// Defining relations (including Serre) of U_q(sl(n)) on the fundamental rep.
inline void check_fundamental_relations(const FundamentalRep& rep, const VField& f) {
    const CartanData cartan = build_cartan(rep.n);
    const int r = cartan.rank;
    const Scalar lam = f.lambda();
    for (int i = 0; i < r; ++i) {
        SquareMatrix hi = rep.h_matrix(i);
        for (int j = 0; j < r; ++j) {
            Scalar aij(Rat(cartan.a[i][j]));
            if (hi * rep.e[j] - rep.e[j] * hi != aij * rep.e[j])
                throw Error("[h_i, e_j] relation failed");
            if (hi * rep.f[j] - rep.f[j] * hi != -aij * rep.f[j])
                throw Error("[h_i, f_j] relation failed");
            SquareMatrix comm = rep.e[i] * rep.f[j] - rep.f[j] * rep.e[i];
            if (i == j) {
                SquareMatrix rhs =
                    lam.inv() * (rep.K(i).materialize(f) - rep.K(i).inverse().materialize(f));
                if (comm != rhs) throw Error("[e_i, f_i] relation failed");
            } else if (!comm.is_zero()) {
                throw Error("[e_i, f_j] should vanish for i != j");
            }
            if (i == j) continue;
            // Serre relations
            int m = 1 - cartan.a[i][j];
            SquareMatrix se(rep.n), sf(rep.n);
            for (int k = 0; k <= m; ++k) {
                Scalar c = q_binomial(f.q(), m, k);
                if (k % 2) c = -c;
                se = se + c * (rep.e[i].pow(k) * rep.e[j] * rep.e[i].pow(m - k));
                sf = sf + c * (rep.f[i].pow(k) * rep.f[j] * rep.f[i].pow(m - k));
            }
            if (!se.is_zero() || !sf.is_zero()) throw Error("Serre relation failed");
        }
    }
}

// Modified basis E_i = X_i e_i, F_i = f_i Y_i with
//   X_i = q^{-(h b a)_i},  Y_i = q^{(h b^T a)_i},
//   R_i^{+-} = K_i^{+-1} q^{-(h(b-b^T)a)_i}.
struct ModifiedRep {
    FundamentalRep rep;
    BDTriple triple;
    ExponentSolution sol;
    std::vector<DiagonalExponentMatrix> X, Y, Rplus, Rminus;
    std::vector<SquareMatrix> E, F;

    int n() const { return rep.n; }
    int rank() const { return rep.n - 1; }
};

namespace detail {

// q-exponent vector of q^{sign * (h M a-col i)}: at diagonal position p the
// exponent is sign * sum_m hdiag[m][p] * M[m][i].
inline DiagonalExponentMatrix h_weighted_diag(const FundamentalRep& rep, const RatMatrix& m,
                                              int i, int sign) {
    RatVector exps(rep.n, Rat(0));
    const int r = rep.n - 1;
    for (int p = 0; p < rep.n; ++p) {
        Rat s(0);
        for (int mm = 0; mm < r; ++mm)
            if (rep.hdiag[mm][p]) s += Rat(rep.hdiag[mm][p]) * m[mm][i];
        exps[p] = sign > 0 ? s : -s;
    }
    return DiagonalExponentMatrix{std::move(exps)};
}

} // namespace detail

inline ModifiedRep modified_rep(const FundamentalRep& rep, const BDTriple& triple,
                                const ExponentSolution& sol, const VField& f) {
    const CartanData cartan = build_cartan(rep.n);
    const int r = cartan.rank;
    RatMatrix a = rat_zeros(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[i][j] = cartan.sym(i, j);
    RatMatrix ba = rat_mul(sol.b, a);
    RatMatrix bta = rat_mul(rat_transpose(sol.b), a);
    RatMatrix diff_a = rat_mul(rat_add(sol.b, rat_scale(rat_transpose(sol.b), Rat(-1))), a);

    ModifiedRep m;
    m.rep = rep;
    m.triple = triple;
    m.sol = sol;
    for (int i = 0; i < r; ++i) {
        m.X.push_back(detail::h_weighted_diag(rep, ba, i, -1));
        m.Y.push_back(detail::h_weighted_diag(rep, bta, i, +1));
        DiagonalExponentMatrix shift = detail::h_weighted_diag(rep, diff_a, i, -1);
        m.Rplus.push_back(rep.K(i) * shift);
        m.Rminus.push_back(rep.K(i).inverse() * shift);
        m.E.push_back(m.X[i].materialize(f) * rep.e[i]);
        m.F.push_back(rep.f[i] * m.Y[i].materialize(f));
    }

    // R+_i = K_i^2 R-_i by construction; the defining property of the triple:
    // R+_{alpha_i} = R-_{tau(alpha_i)} as exponent vectors.
    for (const auto& [i1, j1] : triple.tau)
        if (!(m.Rplus[i1 - 1] == m.Rminus[j1 - 1]))
            throw Error("modified basis does not satisfy R+_i = R-_tau(i)");

    // modified commutation relations (t1.8a)-type and R E / R F exchange
    const Scalar lam = f.lambda();
    for (int i = 0; i < r; ++i) {
        SquareMatrix rp = m.Rplus[i].materialize(f), rm = m.Rminus[i].materialize(f);
        for (int j = 0; j < r; ++j) {
            SquareMatrix comm = m.E[i] * m.F[j] - m.F[j] * m.E[i];
            SquareMatrix rhs(rep.n);
            if (i == j) rhs = lam.inv() * (rp - rm);
            if (comm != rhs) throw Error("modified [E_i, F_j] relation failed");
            Rat aij(cartan.sym(i, j));
            Scalar qp = f.q_pow(Rat(aij) + sol.A[i][j]);
            Scalar qm = f.q_pow(Rat(-aij) + sol.A[i][j]);
            if (rp * m.E[j] != qp * (m.E[j] * rp)) throw Error("R+ E exchange failed");
            if (rm * m.E[j] != qm * (m.E[j] * rm)) throw Error("R- E exchange failed");
            if (rp * m.F[j] != qp.inv() * (m.F[j] * rp)) throw Error("R+ F exchange failed");
            if (rm * m.F[j] != qm.inv() * (m.F[j] * rm)) throw Error("R- F exchange failed");
        }
    }
    return m;
}

// Cartan-Weyl generators for all positive roots along a convex order,
// built by the q-commutator recursion
//   E_gamma = E_alpha E_beta - mu E_beta E_alpha,  mu = q^{-<a,b> + <a,Ab>},
//   F_gamma = F_alpha F_beta - nu F_beta F_alpha,  nu = q^{-<a,b> - <a,Ab>},
// over the minimal interval {alpha, beta} of gamma. The same recursion applied
// to the coproduct images yields Delta(E_gamma), Delta(F_gamma), since Delta
// is an algebra map.
struct CartanWeylFamily {
    NormalOrder order;
    std::vector<SquareMatrix> E, F;   // on V, per order position
    std::vector<SquareMatrix> dE, dF; // standard-coproduct images on V (x) V
};

inline SquareMatrix coproduct_e(const ModifiedRep& m, const VField& f, int i) {
    // Delta(E_i) = E_i (x) X_i K_i + X_i (x) E_i
    SquareMatrix xiki = (m.X[i] * m.rep.K(i)).materialize(f);
    return kron(m.E[i], xiki) + kron(m.X[i].materialize(f), m.E[i]);
}
inline SquareMatrix coproduct_f(const ModifiedRep& m, const VField& f, int i) {
    // Delta(F_i) = F_i (x) Y_i + K_i^{-1} Y_i (x) F_i
    SquareMatrix kinv_yi = (m.rep.K(i).inverse() * m.Y[i]).materialize(f);
    return kron(m.F[i], m.Y[i].materialize(f)) + kron(kinv_yi, m.F[i]);
}

inline CartanWeylFamily cartan_weyl(const ModifiedRep& m, const NormalOrder& order,
                                    const VField& f) {
    const CartanData cartan = build_cartan(m.n());
    CartanWeylFamily fam;
    fam.order = order;
    fam.E.resize(order.size());
    fam.F.resize(order.size());
    fam.dE.resize(order.size());
    fam.dF.resize(order.size());
    // simple roots first, then by increasing height so minimal intervals are ready
    for (int height = 1; height < m.n(); ++height) {
        for (int p = 0; p < order.size(); ++p) {
            const Root& g = order.roots[p];
            if (g.height() != height) continue;
            if (g.is_simple()) {
                int i = g.from - 1;
                fam.E[p] = m.E[i];
                fam.F[p] = m.F[i];
                fam.dE[p] = coproduct_e(m, f, i);
                fam.dF[p] = coproduct_f(m, f, i);
                continue;
            }
            auto [alpha, beta] = minimal_interval(order, g);
            int pa = order.position(alpha), pb = order.position(beta);
            Rat ip(inner(cartan, alpha, beta));
            Rat aip = bilinear(m.sol.A, alpha, beta, cartan.rank);
            Scalar mu = f.q_pow(-ip + aip);
            Scalar nu = f.q_pow(-ip - aip);
            fam.E[p] = fam.E[pa] * fam.E[pb] - mu * (fam.E[pb] * fam.E[pa]);
            fam.F[p] = fam.F[pa] * fam.F[pb] - nu * (fam.F[pb] * fam.F[pa]);
            fam.dE[p] = fam.dE[pa] * fam.dE[pb] - mu * (fam.dE[pb] * fam.dE[pa]);
            fam.dF[p] = fam.dF[pa] * fam.dF[pb] - nu * (fam.dF[pb] * fam.dF[pa]);
        }
    }
    return fam;
}

// Serre relations in the modified basis: (t1.8e)/(t1.8f)-type binomial form.
inline bool modified_serre_holds(const ModifiedRep& m, const VField& f) {
    const CartanData cartan = build_cartan(m.n());
    const int r = cartan.rank;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            int mm = 1 - cartan.a[i][j];
            SquareMatrix se(m.n()), sf(m.n());
            for (int k = 0; k <= mm; ++k) {
                Scalar c = q_binomial(f.q(), mm, k);
                if (k % 2) c = -c;
                se = se + (c * f.q_pow(Rat(-k) * m.sol.A[i][j])) *
                              (m.E[i].pow(k) * m.E[j] * m.E[i].pow(mm - k));
                sf = sf + (c * f.q_pow(Rat(k) * m.sol.A[i][j])) *
                              (m.F[i].pow(k) * m.F[j] * m.F[i].pow(mm - k));
            }
            if (!se.is_zero() || !sf.is_zero()) return false;
        }
    return true;
}

// q-commutator [A, B]_mu = AB - mu BA.
inline SquareMatrix q_comm(const SquareMatrix& a, const SquareMatrix& b, const Scalar& mu) {
    return a * b - mu * (b * a);
}

// (t1.8S)-type double q-commutator form for adjacent pairs, and the
// [E_i, E_j]_{q^{A_ij}} = 0 form for orthogonal pairs.
inline bool modified_qcomm_serre_holds(const ModifiedRep& m, const VField& f) {
    const CartanData cartan = build_cartan(m.n());
    const int r = cartan.rank;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            if (cartan.a[i][j] == 0) {
                Scalar qa = f.q_pow(m.sol.A[i][j]);
                if (!q_comm(m.E[i], m.E[j], qa).is_zero()) return false;
                if (!q_comm(m.F[i], m.F[j], qa.inv()).is_zero()) return false;
            } else {
                Scalar mu = f.q_pow(Rat(cartan.d[i]) + m.sol.A[i][j]);
                Scalar nu = f.q_pow(Rat(cartan.d[i]) - m.sol.A[i][j]);
                SquareMatrix eij = q_comm(m.E[i], m.E[j], mu);
                SquareMatrix fij = q_comm(m.F[i], m.F[j], nu);
                if (!q_comm(eij, m.E[i], nu).is_zero()) return false;
                if (!q_comm(m.E[j], eij, nu).is_zero()) return false;
                if (!q_comm(fij, m.F[i], mu).is_zero()) return false;
                if (!q_comm(m.F[j], fij, mu).is_zero()) return false;
            }
        }
    return true;
}

} // namespace bdtwist
