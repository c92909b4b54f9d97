#pragma once

#include <variant>
#include <vector>

#include "linsolve.hpp"
#include "rep.hpp"

namespace bdtwist {

// Everything needed to evaluate expressions in one representation setting.
struct RepEnv {
    const VField& field;
    const CartanData& cartan;
    const NormalOrder& order;
    const ModifiedRep& mrep;
    const CartanWeylFamily& family;

    int n() const { return mrep.n(); }
};

// Root-vector normalization constants a_beta, indexed by normal-order position.
struct RootConstants {
    std::vector<Scalar> a;
};

// One q-exponential factor exp_base(coeff * E_root (x) F_target).
struct ExpFactor {
    Root root;
    Root target;
    Scalar coeff;
    Scalar base;
};

// Cartan factor q^{sum_ij exps_ij h_i (x) h_j}.
struct CartanFactor {
    RatMatrix exps;
};

using TwistFactor = std::variant<ExpFactor, CartanFactor>;

// A twist (or R-matrix) kept as a structured ordered product, so coproducts
// can be applied to it factor by factor before evaluation.
struct TwistExpression {
    std::vector<TwistFactor> factors;
};

// q^{sum_ij exps_ij h_i (x) h_j} on V (x) V as a diagonal exponent matrix.
inline DiagonalExponentMatrix cartan_pair_diag(const FundamentalRep& rep, const RatMatrix& exps) {
    const int n = rep.n, r = n - 1;
    RatVector out(n * n, Rat(0));
    for (int p = 0; p < n; ++p)
        for (int s = 0; s < n; ++s) {
            Rat acc(0);
            for (int i = 0; i < r; ++i) {
                if (!rep.hdiag[i][p]) continue;
                for (int j = 0; j < r; ++j)
                    if (rep.hdiag[j][s] && !is_zero(exps[i][j]))
                        acc += Rat(rep.hdiag[i][p] * rep.hdiag[j][s]) * exps[i][j];
            }
            out[p * n + s] = acc;
        }
    return DiagonalExponentMatrix{std::move(out)};
}

// Lift of the Cartan factor to V (x) V (x) V with the coproduct applied in
// the given slot; h_i is primitive, so exponents just add.
inline DiagonalExponentMatrix cartan_triple_diag(const FundamentalRep& rep, const RatMatrix& exps,
                                                 int slot) {
    const int n = rep.n, r = n - 1;
    RatVector out(n * n * n, Rat(0));
    for (int p = 0; p < n; ++p)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                Rat acc(0);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) {
                        if (is_zero(exps[i][j])) continue;
                        int left, right;
                        if (slot == 1) {
                            left = rep.hdiag[i][p] + rep.hdiag[i][s];
                            right = rep.hdiag[j][t];
                        } else {
                            left = rep.hdiag[i][p];
                            right = rep.hdiag[j][s] + rep.hdiag[j][t];
                        }
                        if (left && right) acc += Rat(left * right) * exps[i][j];
                    }
                out[(p * n + s) * n + t] = acc;
            }
    return DiagonalExponentMatrix{std::move(out)};
}

// K^{(0)} = q^{- sum_ij ((a^s)^{-1})_ij h_i (x) h_j}, the Cartan factor of the
// standard R-matrix; validated downstream by the intertwiner property.
inline RatMatrix k0_exponents(const CartanData& cartan) {
    const int r = cartan.rank;
    RatMatrix a = rat_zeros(r, r), inv;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[i][j] = cartan.sym(i, j);
    if (!rat_invert(a, inv)) throw Error("Cartan matrix not invertible");
    return rat_scale(inv, Rat(-1));
}

inline SquareMatrix evaluate(const TwistExpression& expr, const RepEnv& env) {
    const int n = env.n();
    SquareMatrix acc = SquareMatrix::identity(n * n);
    for (const TwistFactor& f : expr.factors) {
        if (std::holds_alternative<ExpFactor>(f)) {
            const ExpFactor& ef = std::get<ExpFactor>(f);
            int pe = env.order.position(ef.root), pf = env.order.position(ef.target);
            SquareMatrix arg = ef.coeff * kron(env.family.E[pe], env.family.F[pf]);
            acc = acc * qexp(arg, ef.base);
        } else {
            acc = acc * cartan_pair_diag(env.mrep.rep, std::get<CartanFactor>(f).exps)
                            .materialize(env.field);
        }
    }
    return acc;
}

enum class CoproductKind { standard, twisted };

// Coproduct image of a root generator on V (x) V. The twisted coproduct is
// conjugation by K = q^{sum b_ij h_i (x) h_j}.
inline SquareMatrix lifted_generator(const RepEnv& env, int position, bool e_side,
                                     CoproductKind kind) {
    const SquareMatrix& d = e_side ? env.family.dE[position] : env.family.dF[position];
    if (kind == CoproductKind::standard) return d;
    DiagonalExponentMatrix k = cartan_pair_diag(env.mrep.rep, env.mrep.sol.b);
    return conjugate_by_diag_exp(d, k.inverse(), env.field);
}

// (Delta (x) id) or (id (x) Delta) applied to the whole expression, evaluated
// on V (x) V (x) V.
inline SquareMatrix coproduct_lift(const TwistExpression& expr, int slot, CoproductKind kind,
                                   const RepEnv& env) {
    const int n = env.n();
    SquareMatrix acc = SquareMatrix::identity(n * n * n);
    for (const TwistFactor& f : expr.factors) {
        if (std::holds_alternative<ExpFactor>(f)) {
            const ExpFactor& ef = std::get<ExpFactor>(f);
            int pe = env.order.position(ef.root), pf = env.order.position(ef.target);
            SquareMatrix arg(n * n * n);
            if (slot == 1)
                arg = ef.coeff * kron(lifted_generator(env, pe, true, kind), env.family.F[pf]);
            else
                arg = ef.coeff * kron(env.family.E[pe], lifted_generator(env, pf, false, kind));
            acc = acc * qexp(arg, ef.base);
        } else {
            acc = acc * cartan_triple_diag(env.mrep.rep, std::get<CartanFactor>(f).exps, slot)
                            .materialize(env.field);
        }
    }
    return acc;
}

// Position and value of the unique nonzero entry of a rank-one matrix.
struct SingleEntry {
    int row = -1, col = -1;
    Scalar value;
};

inline SingleEntry single_entry(const SquareMatrix& m) {
    SingleEntry s;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!m.at(i, j).is_zero()) {
                if (s.row >= 0) throw Error("matrix has more than one nonzero entry");
                s = {i, j, m.at(i, j)};
            }
    if (s.row < 0) throw Error("matrix is zero");
    return s;
}

// Solve for the constants a_beta from the intertwiner property of R with the
// standard coproduct: with the ansatz R = (K0)^{-1} (I - sum_beta x_beta
// E_beta (x) F_beta), the conditions R Delta(g) = Delta_op(g) R for all simple
// e_i, f_i are linear in the x_beta. In the fundamental rep each
// E_beta (x) F_beta occupies one matrix entry, so the solution is unique.
inline RootConstants calibrate_constants(const RepEnv& env) {
    const int n = env.n(), r = n - 1, nroots = env.order.size();
    const VField& f = env.field;
    const FundamentalRep& rep = env.mrep.rep;

    std::vector<SquareMatrix> X;
    for (int p = 0; p < nroots; ++p) X.push_back(kron(env.family.E[p], env.family.F[p]));

    DiagonalExponentMatrix k0 = cartan_pair_diag(rep, k0_exponents(env.cartan));

    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    auto add_equations = [&](const SquareMatrix& dg, const SquareMatrix& dg_op) {
        // G - G' = sum_beta x_beta (X_beta G - G' X_beta), G' = K0 Delta_op(g) K0^{-1}
        SquareMatrix gp = conjugate_by_diag_exp(dg_op, k0.inverse(), f);
        std::vector<SquareMatrix> lhs;
        for (int p = 0; p < nroots; ++p) lhs.push_back(X[p] * dg - gp * X[p]);
        SquareMatrix diff = dg - gp;
        for (int i = 0; i < n * n; ++i)
            for (int j = 0; j < n * n; ++j) {
                bool all_zero = diff.at(i, j).is_zero();
                std::vector<Scalar> row(nroots);
                for (int p = 0; p < nroots; ++p) {
                    row[p] = lhs[p].at(i, j);
                    if (!row[p].is_zero()) all_zero = false;
                }
                if (all_zero) continue;
                rows.push_back(std::move(row));
                rhs.push_back(diff.at(i, j));
            }
    };
    for (int i = 0; i < r; ++i) {
        SquareMatrix ki = rep.K(i).materialize(f);
        SquareMatrix ki_inv = rep.K(i).inverse().materialize(f);
        SquareMatrix id = SquareMatrix::identity(n);
        add_equations(kron(rep.e[i], ki) + kron(id, rep.e[i]),
                      kron(ki, rep.e[i]) + kron(rep.e[i], id));
        add_equations(kron(rep.f[i], id) + kron(ki_inv, rep.f[i]),
                      kron(id, rep.f[i]) + kron(rep.f[i], ki_inv));
    }

    auto sol = solve_linear_system<Scalar>(rows, rhs);
    if (!sol.consistent) throw NoSolution("intertwiner system inconsistent");
    if (!sol.nullspace.empty()) throw NoSolution("intertwiner system underdetermined");

    RootConstants consts;
    Scalar lam = f.lambda();
    for (int p = 0; p < nroots; ++p) {
        consts.a.push_back(-sol.particular[p] / lam);
        if (env.order.roots[p].is_simple() && !consts.a.back().is_one())
            throw NoSolution("simple-root constant is not 1");
    }
    return consts;
}

struct StandardR {
    TwistExpression expr; // the inverse R-matrix as a structured product
    SquareMatrix R;
    SquareMatrix R_inv;
    DiagonalExponentMatrix K0;
};

// Inverse of the standard R-matrix as the ordered product
//   prod_beta exp_{q_beta}(-lambda a_beta E_beta (x) F_beta) * K^{(0)}.
inline StandardR standard_R(const RepEnv& env, const RootConstants& consts) {
    if ((int)consts.a.size() != env.order.size()) throw Error("constants not calibrated");
    const VField& f = env.field;
    StandardR out;
    Scalar lam = f.lambda();
    for (int p = 0; p < env.order.size(); ++p) {
        const Root& beta = env.order.roots[p];
        Scalar base = f.q_pow(Rat(inner(env.cartan, beta, beta)));
        out.expr.factors.push_back(ExpFactor{beta, beta, -lam * consts.a[p], base});
    }
    RatMatrix k0e = k0_exponents(env.cartan);
    out.expr.factors.push_back(CartanFactor{k0e});
    out.K0 = cartan_pair_diag(env.mrep.rep, k0e);
    out.R_inv = evaluate(out.expr, env);
    out.R = invert(out.R_inv);
    return out;
}

// F^{(k)}: ordered product over the roots beta with tau^k(beta) defined of
// exp_{q_beta}(-lambda a_beta E_beta (x) F_{tau^k(beta)}).
inline TwistExpression twist_factor(const RepEnv& env, const RootConstants& consts,
                                    const BDTriple& triple, const TripleChains& chains, int k) {
    if (k < 1 || k > chains.degree)
        throw OutOfRange("twist factor k = " + std::to_string(k) + ", degree = " +
                         std::to_string(chains.degree));
    const VField& f = env.field;
    Scalar lam = f.lambda();
    TwistExpression expr;
    for (int p = 0; p < env.order.size(); ++p) {
        const Root& beta = env.order.roots[p];
        auto target = tau_on_root(triple, k, beta);
        if (!target) continue;
        Scalar base = f.q_pow(Rat(inner(env.cartan, beta, beta)));
        expr.factors.push_back(ExpFactor{beta, *target, -lam * consts.a[p], base});
    }
    return expr;
}

struct FullTwist {
    TwistExpression expr;  // F^{(N)} ... F^{(1)} K
    SquareMatrix F;
    SquareMatrix K;
};

inline FullTwist full_twist(const RepEnv& env, const RootConstants& consts,
                            const BDTriple& triple, const TripleChains& chains) {
    FullTwist out;
    for (int k = chains.degree; k >= 1; --k) {
        TwistExpression fk = twist_factor(env, consts, triple, chains, k);
        for (auto& fac : fk.factors) out.expr.factors.push_back(std::move(fac));
    }
    out.expr.factors.push_back(CartanFactor{env.mrep.sol.b});
    out.K = cartan_pair_diag(env.mrep.rep, env.mrep.sol.b).materialize(env.field);
    out.F = evaluate(out.expr, env);
    return out;
}

// R = F_21 R_std F_12^{-1} with F_21 = P F P.
inline SquareMatrix twisted_R(const SquareMatrix& F, const SquareMatrix& R_std, int n) {
    return swap_legs(F, n) * R_std * invert(F);
}

} // namespace bdtwist
