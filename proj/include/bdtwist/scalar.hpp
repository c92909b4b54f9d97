#pragma once

#include <optional>
#include <string>

#include "laurent.hpp"

namespace bdtwist {

// Element of the field Q(v) of rational functions in v, kept in canonical
// form at all times: den is an ordinary monic polynomial with nonzero
// constant term, gcd(num-part, den) = 1, and any monomial unit v^k lives in
// num. Equality of canonical forms is plain component equality.
class Scalar {
public:
    Scalar() = default; // zero
    Scalar(const Rat& c) : num_(c) {}
    Scalar(long c) : num_(Rat(c)) {}
    Scalar(LaurentPoly num) : num_(std::move(num)) {}
    Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero();
        normalize();
    }

    static Scalar v_pow(int e) { return Scalar(LaurentPoly::v_pow(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) return a;
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.den_.is_one() && b.den_.is_one()) {
            Scalar r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DivisionByZero();
        if (a.is_zero()) return Scalar();
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar inv() const {
        if (is_zero()) throw DivisionByZero();
        return Scalar(den_, num_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar pow(int k) const {
        if (k < 0) return inv().pow(-k);
        Scalar r(Rat(1)), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    // Evaluation at a rational point v = t (t != 0); nullopt if den vanishes.
    std::optional<Rat> eval(const Rat& t) const {
        if (is_zero()) return Rat(0);
        Rat d = den_.eval(t);
        if (bdtwist::is_zero(d)) return std::nullopt;
        return num_.eval(t) / d;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        bool npar = num_.terms().size() > 1;
        bool dpar = den_.terms().size() > 1;
        return (npar ? "(" + n + ")" : n) + "/" + (dpar ? "(" + d + ")" : d);
    }

private:
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(Rat(1));

    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(Rat(1));
            return;
        }
        int a = num_.min_exp(), b = den_.min_exp();
        LaurentPoly n0 = num_.shifted(-a), d0 = den_.shifted(-b);
        if (!d0.is_one()) {
            LaurentPoly g = poly_gcd(n0, d0);
            if (!g.is_one()) {
                n0 = poly_divexact(n0, g);
                d0 = poly_divexact(d0, g);
            }
            Rat lead = d0.leading_coeff();
            if (lead != 1) {
                n0 = n0.scaled(Rat(1) / lead);
                d0 = d0.scaled(Rat(1) / lead);
            }
        }
        num_ = n0.shifted(a - b);
        den_ = d0;
    }
};

// The working field: Q(v) with v^D = q, D fixed per session so that every
// q-power that appears is an integral power of v.
struct VField {
    int D = 1;

    Scalar q() const { return Scalar::v_pow(D); }
    Scalar q_inv() const { return Scalar::v_pow(-D); }
    // lambda = q - q^{-1}
    Scalar lambda() const { return q() - q_inv(); }

    // q^e for rational e; requires D*e integral.
    Scalar q_pow(const Rat& e) const {
        Rat s = e * D;
        if (s.get_den() != 1) throw ExponentNotIntegral(e.get_str() + " (D = " + std::to_string(D) + ")");
        if (!s.fits_sint_p()) throw Error("q-exponent overflow");
        return Scalar::v_pow((int)s.get_si());
    }
    bool exponent_ok(const Rat& e) const { return Rat(e * D).get_den() == 1; }
};

enum class QNumberKind { exp_basis, symmetric };

// k_q = (q^k-1)/(q-1) = 1 + q + ... + q^{k-1}   (exp_basis)
// [k]_q = (q^k-q^{-k})/(q-q^{-1}) = q^{k-1} + q^{k-3} + ... + q^{1-k}  (symmetric)
// computed for an arbitrary base scalar so q-exponentials can run in base q_beta.
inline Scalar q_number(const Scalar& base, int k, QNumberKind kind) {
    Scalar r;
    if (kind == QNumberKind::exp_basis) {
        Scalar p(Rat(1));
        for (int j = 0; j < k; ++j) {
            r += p;
            p = p * base;
        }
    } else {
        Scalar p = base.pow(1 - k);
        Scalar b2 = base * base;
        for (int j = 0; j < k; ++j) {
            r += p;
            p = p * b2;
        }
    }
    return r;
}

inline Scalar q_number(const VField& f, int k, QNumberKind kind) {
    return q_number(f.q(), k, kind);
}

inline Scalar q_factorial(const Scalar& base, int k, QNumberKind kind) {
    Scalar r(Rat(1));
    for (int j = 1; j <= k; ++j) r = r * q_number(base, j, kind);
    return r;
}

} // namespace bdtwist
