#pragma once

#include <optional>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace bdtwist {

// Dense square matrix over Q(v). Immutable in spirit: operations return
// fresh values. Products skip zero entries, which matters because nearly
// everything in this problem is a monomial-sparse matrix.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int dim) : dim_(dim), a_(dim * dim) {}

    static SquareMatrix identity(int dim) {
        SquareMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar(Rat(1));
        return m;
    }
    static SquareMatrix unit(int dim, int row, int col, const Scalar& value = Scalar(Rat(1))) {
        SquareMatrix m(dim);
        m.at(row, col) = value;
        return m;
    }
    static SquareMatrix diagonal(std::vector<Scalar> d) {
        SquareMatrix m((int)d.size());
        for (int i = 0; i < m.dim_; ++i) m.at(i, i) = std::move(d[i]);
        return m;
    }

    int dim() const { return dim_; }
    Scalar& at(int i, int j) { return a_[i * dim_ + j]; }
    const Scalar& at(int i, int j) const { return a_[i * dim_ + j]; }
    const Scalar& operator()(int i, int j) const { return at(i, j); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
            }
        return true;
    }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        a.check_dim(b);
        SquareMatrix r(a.dim_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        a.check_dim(b);
        SquareMatrix r(a.dim_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }
    SquareMatrix operator-() const {
        SquareMatrix r(dim_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
        return r;
    }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        a.check_dim(b);
        SquareMatrix r(a.dim_);
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.dim_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend SquareMatrix operator*(const Scalar& s, const SquareMatrix& a) {
        SquareMatrix r(a.dim_);
        if (s.is_zero()) return r;
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = s * a.a_[k];
        return r;
    }

    bool operator==(const SquareMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }
    bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

    SquareMatrix pow(int k) const {
        SquareMatrix r = identity(dim_), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = (k >>= 1) ? b * b : b;
        }
        return r;
    }

    Scalar trace() const {
        Scalar t;
        for (int i = 0; i < dim_; ++i) t += at(i, i);
        return t;
    }

private:
    int dim_ = 0;
    std::vector<Scalar> a_;

    void check_dim(const SquareMatrix& o) const {
        if (dim_ != o.dim_) throw DimensionMismatch(dim_, o.dim_);
    }
};

// Kronecker product, first factor = slow index.
inline SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b) {
    int da = a.dim(), db = b.dim();
    SquareMatrix r(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l) {
                    const Scalar& bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    r.at(i * db + k, j * db + l) = aij * bkl;
                }
        }
    return r;
}

inline SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b, const SquareMatrix& c) {
    return kron(kron(a, b), c);
}

// Exact inverse by Gauss-Jordan elimination over Q(v).
inline SquareMatrix invert(const SquareMatrix& a) {
    int n = a.dim();
    SquareMatrix m = a, inv = SquareMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw SingularMatrix();
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Scalar pinv = m.at(col, col).inv();
        for (int j = 0; j < n; ++j) {
            m.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) -= f * m.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Smallest m >= 1 with a^m = 0, or nullopt. A dim-d nilpotent matrix
// satisfies a^d = 0, so the scan is bounded.
inline std::optional<int> nilpotency_order(const SquareMatrix& a) {
    SquareMatrix p = a;
    if (p.is_zero()) return 1;
    for (int m = 2; m <= a.dim(); ++m) {
        p = p * a;
        if (p.is_zero()) return m;
    }
    return std::nullopt;
}

// q-exponential of a nilpotent matrix: sum_{k<m} u^k / k_base!,
// k_base = (base^k - 1)/(base - 1). For m = 2 this is exactly 1 + u.
inline SquareMatrix qexp(const SquareMatrix& u, const Scalar& base) {
    auto m = nilpotency_order(u);
    if (!m) throw NotNilpotent();
    SquareMatrix r = SquareMatrix::identity(u.dim());
    SquareMatrix p = SquareMatrix::identity(u.dim());
    Scalar fact(Rat(1));
    for (int k = 1; k < *m; ++k) {
        p = p * u;
        fact *= q_number(base, k, QNumberKind::exp_basis);
        r = r + fact.inv() * p;
    }
    return r;
}

// Flip operator P on V (x) V, dim n^2: P(x (x) y) = y (x) x.
inline SquareMatrix flip_operator(int n) {
    SquareMatrix p(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.at(i * n + j, j * n + i) = Scalar(Rat(1));
    return p;
}

// Leg embeddings of an operator on V (x) V into V (x) V (x) V.
inline SquareMatrix embed12(const SquareMatrix& x, int n) {
    return kron(x, SquareMatrix::identity(n));
}
inline SquareMatrix embed23(const SquareMatrix& x, int n) {
    return kron(SquareMatrix::identity(n), x);
}
inline SquareMatrix embed13(const SquareMatrix& x, int n) {
    SquareMatrix r(n * n * n);
    for (int p = 0; p < n; ++p)
        for (int s = 0; s < n; ++s)
            for (int pp = 0; pp < n; ++pp)
                for (int ss = 0; ss < n; ++ss) {
                    const Scalar& v = x.at(p * n + s, pp * n + ss);
                    if (v.is_zero()) continue;
                    for (int r2 = 0; r2 < n; ++r2)
                        r.at((p * n + r2) * n + s, (pp * n + r2) * n + ss) = v;
                }
    return r;
}

// X_21 = P * X_12 * P on V (x) V.
inline SquareMatrix swap_legs(const SquareMatrix& x, int n) {
    SquareMatrix p = flip_operator(n);
    return p * x * p;
}

// Diagonal matrix with entries q^{e_k} for exact rational exponents e_k.
// Materializes only once the session denominator D is fixed and every
// D*e_k is an integer.
struct DiagonalExponentMatrix {
    RatVector exponents;

    int dim() const { return (int)exponents.size(); }

    static DiagonalExponentMatrix zero(int dim) {
        return DiagonalExponentMatrix{RatVector(dim, Rat(0))};
    }

    DiagonalExponentMatrix inverse() const {
        DiagonalExponentMatrix r = *this;
        for (auto& e : r.exponents) e = -e;
        return r;
    }
    friend DiagonalExponentMatrix operator*(const DiagonalExponentMatrix& a,
                                            const DiagonalExponentMatrix& b) {
        DiagonalExponentMatrix r = a;
        for (size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
        return r;
    }
    bool operator==(const DiagonalExponentMatrix& o) const { return exponents == o.exponents; }

    SquareMatrix materialize(const VField& f) const {
        std::vector<Scalar> d;
        d.reserve(exponents.size());
        for (const auto& e : exponents) d.push_back(f.q_pow(e));
        return SquareMatrix::diagonal(std::move(d));
    }
};

// Conjugation  diag^{-1} * m * diag  for diag = q^{exps}: scales entry (i,j)
// by q^{e_j - e_i}. Only touches nonzero entries, so exponents that never
// multiply anything need not be integral powers of v.
inline SquareMatrix conjugate_by_diag_exp(const SquareMatrix& m,
                                          const DiagonalExponentMatrix& diag,
                                          const VField& f) {
    SquareMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            const Scalar& x = m.at(i, j);
            if (x.is_zero()) continue;
            r.at(i, j) = f.q_pow(diag.exponents[j] - diag.exponents[i]) * x;
        }
    return r;
}

} // namespace bdtwist
