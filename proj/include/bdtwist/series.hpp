#pragma once

#include <vector>

#include "scalar.hpp"

namespace bdtwist {

// Truncated Taylor series c0 + c1*h + ... + cm*h^m in h, where q = e^h.
// Arithmetic drops everything beyond the truncation order.
class TruncatedSeries {
public:
    TruncatedSeries(int order, RatVector coeffs) : c_(std::move(coeffs)) {
        c_.resize(order + 1, Rat(0));
    }
    explicit TruncatedSeries(int order) : c_(order + 1, Rat(0)) {}

    int order() const { return (int)c_.size() - 1; }
    const Rat& operator[](int k) const { return c_[k]; }
    Rat& operator[](int k) { return c_[k]; }
    const RatVector& coeffs() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (bdtwist::is_zero(a.c_[i])) continue;
            for (int j = 0; i + j <= r.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    // division; b must have nonzero constant term
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (bdtwist::is_zero(b.c_[0])) throw PoleAtOne();
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) {
            Rat s = a.c_[k];
            for (int j = 1; j <= k; ++j) s -= b.c_[j] * r.c_[k - j];
            r.c_[k] = s / b.c_[0];
        }
        return r;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

private:
    RatVector c_;
};

// Series of v^e under v = e^{h/D}: sum_j (e/D)^j / j! h^j.
inline TruncatedSeries v_power_series(const VField& f, int e, int order) {
    TruncatedSeries r(order);
    Rat x(e, f.D);
    x.canonicalize();
    Rat term(1);
    for (int j = 0; j <= order; ++j) {
        r[j] = term;
        term = term * x / (j + 1);
    }
    return r;
}

inline TruncatedSeries expand_poly_at_one(const VField& f, const LaurentPoly& p, int order) {
    TruncatedSeries r(order);
    for (const auto& [e, c] : p.terms()) {
        TruncatedSeries t = v_power_series(f, e, order);
        for (int j = 0; j <= order; ++j) r[j] += c * t[j];
    }
    return r;
}

// Taylor coefficients of s at q = 1 (h = 0) up to `order`.
// Throws PoleAtOne when the canonical denominator vanishes at v = 1.
inline TruncatedSeries expand_at_one(const VField& f, const Scalar& s, int order) {
    if (bdtwist::is_zero(s.den().eval_at_one())) throw PoleAtOne();
    TruncatedSeries num = expand_poly_at_one(f, s.num(), order);
    if (s.den().is_one()) return num;
    TruncatedSeries den = expand_poly_at_one(f, s.den(), order);
    return num / den;
}

} // namespace bdtwist
