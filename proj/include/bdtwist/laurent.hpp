#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace bdtwist {

// Laurent polynomial in one variable v with exact rational coefficients.
// Terms are kept sorted by exponent and never store a zero coefficient.
class LaurentPoly {
public:
    using Term = std::pair<int, Rat>; // (exponent, coefficient)

    LaurentPoly() = default;
    LaurentPoly(const Rat& c) { if (!bdtwist::is_zero(c)) terms_.emplace_back(0, c); }
    LaurentPoly(long c) : LaurentPoly(Rat(c)) {}

    static LaurentPoly monomial(const Rat& c, int e) {
        LaurentPoly p;
        if (!bdtwist::is_zero(c)) p.terms_.emplace_back(e, c);
        return p;
    }
    static LaurentPoly v_pow(int e) { return monomial(Rat(1), e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
    }

    int min_exp() const { assert(!terms_.empty()); return terms_.front().first; }
    int max_exp() const { assert(!terms_.empty()); return terms_.back().first; }
    int degree() const { return max_exp(); } // for ordinary polys (min_exp >= 0)

    Rat coeff(int e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, int x) { return t.first < x; });
        if (it != terms_.end() && it->first == e) return it->second;
        return Rat(0);
    }
    const Rat& leading_coeff() const { assert(!terms_.empty()); return terms_.back().second; }
    const std::vector<Term>& terms() const { return terms_; }

    LaurentPoly shifted(int k) const {
        LaurentPoly p = *this;
        for (auto& t : p.terms_) t.first += k;
        return p;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                r.terms_.push_back(*ib++);
            } else {
                Rat c = ia->second + ib->second;
                if (!bdtwist::is_zero(c)) r.terms_.emplace_back(ia->first, c);
                ++ia; ++ib;
            }
        }
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_monomial()) return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first);
        if (a.is_monomial()) return b.scaled(a.terms_[0].second).shifted(a.terms_[0].first);
        std::map<int, Rat> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) acc[ta.first + tb.first] += ta.second * tb.second;
        LaurentPoly r;
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!bdtwist::is_zero(c)) r.terms_.emplace_back(e, c);
        return r;
    }

    LaurentPoly scaled(const Rat& s) const {
        if (bdtwist::is_zero(s)) return {};
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.second *= s;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    Rat eval(const Rat& v) const {
        // v must be nonzero when negative exponents are present
        Rat acc(0), pw(1);
        int cur = 0;
        // Horner over sorted exponents, starting from min_exp
        if (terms_.empty()) return acc;
        cur = terms_.front().first;
        if (cur >= 0) {
            pw = 1;
            for (int i = 0; i < cur; ++i) pw *= v;
        } else {
            Rat vinv = Rat(1) / v;
            pw = 1;
            for (int i = 0; i < -cur; ++i) pw *= vinv;
        }
        for (const auto& [e, c] : terms_) {
            while (cur < e) { pw *= v; ++cur; }
            acc += c * pw;
        }
        return acc;
    }

    Rat eval_at_one() const {
        Rat acc(0);
        for (const auto& [e, c] : terms_) acc += c;
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rat ac = abs(c);
            if (first) {
                if (sgn(c) < 0) os << "-";
                first = false;
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            bool unit = (ac == 1);
            if (e == 0 || !unit) os << ac.get_str();
            if (e != 0) {
                if (!unit) os << "*";
                os << "v";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;
};

// --- ordinary-polynomial helpers (operands must have min_exp >= 0) ---

// Quotient and remainder of a by b over Q.
inline void poly_divmod(const LaurentPoly& a, const LaurentPoly& b,
                        LaurentPoly& quo, LaurentPoly& rem) {
    assert(!b.is_zero());
    assert(a.is_zero() || a.min_exp() >= 0);
    assert(b.min_exp() >= 0);
    quo = LaurentPoly();
    rem = a;
    int db = b.degree();
    while (!rem.is_zero() && rem.degree() >= db) {
        Rat c = rem.leading_coeff() / b.leading_coeff();
        int e = rem.degree() - db;
        LaurentPoly t = LaurentPoly::monomial(c, e);
        quo = quo + t;
        rem = rem - b * t;
    }
}

// Monic gcd over Q of two ordinary polynomials (not both zero).
inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        LaurentPoly q, r;
        poly_divmod(a, b, q, r);
        a = b;
        b = r;
        if (!b.is_zero()) b = b.scaled(Rat(1) / b.leading_coeff());
    }
    if (a.is_zero()) return a;
    return a.scaled(Rat(1) / a.leading_coeff());
}

inline LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly q, r;
    poly_divmod(a, b, q, r);
    assert(r.is_zero());
    return q;
}

} // namespace bdtwist
