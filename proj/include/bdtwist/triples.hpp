#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "error.hpp"
#include "roots.hpp"

namespace bdtwist {

// Belavin-Drinfeld triple (Gamma_1, Gamma_2, tau) on the simple roots of
// A_{n-1}. Indices are 1-based. tau is a bijection Gamma_1 -> Gamma_2.
struct BDTriple {
    int n = 0;
    std::vector<int> gamma1; // sorted
    std::vector<int> gamma2; // sorted
    std::map<int, int> tau;

    int rank() const { return n - 1; }
    bool empty() const { return gamma1.empty(); }
    bool in_gamma1(int i) const { return tau.count(i) != 0; }

    // tau^k(i); nullopt when some intermediate image leaves Gamma_1.
    std::optional<int> tau_pow(int k, int i) const {
        int x = i;
        for (int s = 0; s < k; ++s) {
            auto it = tau.find(x);
            if (it == tau.end()) return std::nullopt;
            x = it->second;
        }
        return x;
    }

    static BDTriple make(int n, std::map<int, int> tau_map) {
        BDTriple t;
        t.n = n;
        t.tau = std::move(tau_map);
        for (const auto& [i, j] : t.tau) {
            t.gamma1.push_back(i);
            t.gamma2.push_back(j);
        }
        std::sort(t.gamma2.begin(), t.gamma2.end());
        return t;
    }

    bool operator==(const BDTriple& o) const { return n == o.n && tau == o.tau; }
};

// Chain data: Gamma_1^(k+1) = Gamma_1^(k) cap Gamma_2^(k), Gamma_2^(k) =
// tau(Gamma_1^(k)). The degree N is the number of nonempty chain sets, i.e.
// the largest k with dom(tau^k) nonempty; the worked sl(3) and sl(4)
// examples have degrees 1 and 2.
struct TripleChains {
    int degree = 0;
    std::vector<std::vector<int>> gamma1_chain; // k = 0..degree (last one empty)
    std::vector<std::vector<int>> gamma2_chain;
    std::vector<std::vector<int>> gamma1_lifted; // dom(tau^{k+1}), k = 0..degree-1
};

inline TripleChains validate_triple(const BDTriple& t) {
    const CartanData cartan = build_cartan(t.n);
    const int r = cartan.rank;
    for (const auto& [i, j] : t.tau) {
        if (i < 1 || i > r) throw OutOfRange("gamma1 index " + std::to_string(i));
        if (j < 1 || j > r) throw OutOfRange("gamma2 index " + std::to_string(j));
    }
    // isometry: <tau(a), tau(b)> = <a, b> on Gamma_1
    for (const auto& [i, ti] : t.tau)
        for (const auto& [j, tj] : t.tau)
            if (cartan.sym(ti - 1, tj - 1) != cartan.sym(i - 1, j - 1)) throw NotIsometry(i, j);
    // acyclicity: tau^k(alpha) != alpha. tau is injective, so a chain that
    // stays in Gamma_1 for more than |Gamma_1| steps must have returned.
    for (int alpha : t.gamma1) {
        int x = alpha;
        for (int k = 1; k <= (int)t.gamma1.size() + 1; ++k) {
            auto it = t.tau.find(x);
            if (it == t.tau.end()) break;
            x = it->second;
            if (x == alpha) throw HasCycle(alpha, k);
        }
    }

    TripleChains chains;
    std::set<int> g1(t.gamma1.begin(), t.gamma1.end());
    while (true) {
        std::set<int> g2;
        for (int i : g1) g2.insert(t.tau.at(i));
        chains.gamma1_chain.emplace_back(g1.begin(), g1.end());
        chains.gamma2_chain.emplace_back(g2.begin(), g2.end());
        if (g1.empty()) break;
        std::set<int> next;
        for (int i : g1)
            if (g2.count(i)) next.insert(i);
        g1 = std::move(next);
    }
    chains.degree = (int)chains.gamma1_chain.size() - 1;
    // dom(tau^{k+1}) for k = 0..degree-1
    for (int k = 0; k < chains.degree; ++k) {
        std::vector<int> dom;
        for (int alpha : t.gamma1)
            if (t.tau_pow(k + 1, alpha)) dom.push_back(alpha);
        chains.gamma1_lifted.push_back(std::move(dom));
    }
    return chains;
}

inline bool is_valid_triple(const BDTriple& t) {
    try {
        validate_triple(t);
        return true;
    } catch (const NotIsometry&) {
        return false;
    } catch (const HasCycle&) {
        return false;
    }
}

// Derived triple (Gamma~_1^(k-1), Gamma_2^(k-1), tau^k), 1 <= k <= degree.
inline BDTriple derived_triple(const BDTriple& t, int k) {
    TripleChains chains = validate_triple(t);
    if (k < 1 || k > chains.degree)
        throw OutOfRange("derived triple k = " + std::to_string(k) + ", degree = " +
                         std::to_string(chains.degree));
    std::map<int, int> tk;
    for (int alpha : chains.gamma1_lifted[k - 1]) tk[alpha] = *t.tau_pow(k, alpha);
    BDTriple d = BDTriple::make(t.n, std::move(tk));
    validate_triple(d); // the paper's claim at the derived-triple definition
    return d;
}

// tau^k extended additively over simple-root coordinates; defined iff every
// simple root in the support admits k successive applications of tau.
inline std::optional<Root> tau_on_root(const BDTriple& t, int k, const Root& beta) {
    std::vector<int> image;
    for (int s = beta.from; s < beta.to; ++s) {
        auto im = t.tau_pow(k, s);
        if (!im) return std::nullopt;
        image.push_back(*im);
    }
    std::sort(image.begin(), image.end());
    for (size_t i = 1; i < image.size(); ++i)
        if (image[i] != image[i - 1] + 1) return std::nullopt; // support must stay contiguous
    return Root{image.front(), image.back() + 1};
}

// Canonical order for enumeration results: |Gamma_1|, then lexicographic.
inline bool triple_less(const BDTriple& a, const BDTriple& b) {
    if (a.gamma1.size() != b.gamma1.size()) return a.gamma1.size() < b.gamma1.size();
    if (a.gamma1 != b.gamma1) return a.gamma1 < b.gamma1;
    if (a.gamma2 != b.gamma2) return a.gamma2 < b.gamma2;
    std::vector<int> ia, ib;
    for (int x : a.gamma1) ia.push_back(a.tau.at(x));
    for (int x : b.gamma1) ib.push_back(b.tau.at(x));
    return ia < ib;
}

namespace detail {

inline void enumerate_subsets(int r, int size, int start, std::vector<int>& cur,
                              std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= r; ++i) {
        cur.push_back(i);
        enumerate_subsets(r, size, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// Every candidate (Gamma_1, Gamma_2, tau): all ordered pairs of equal-size
// subsets with all bijections between them. Used by enumeration and by the
// Proposition iff-test.
inline std::vector<BDTriple> candidate_triples(int n) {
    const int r = n - 1;
    std::vector<BDTriple> out;
    for (int size = 0; size <= r; ++size) {
        std::vector<std::vector<int>> subsets;
        std::vector<int> cur;
        detail::enumerate_subsets(r, size, 1, cur, subsets);
        for (const auto& g1 : subsets)
            for (const auto& g2 : subsets) {
                std::vector<int> perm = g2;
                std::sort(perm.begin(), perm.end());
                do {
                    std::map<int, int> tau;
                    for (int i = 0; i < size; ++i) tau[g1[i]] = perm[i];
                    out.push_back(BDTriple::make(n, std::move(tau)));
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
    }
    return out;
}

inline std::vector<BDTriple> enumerate_triples(int n, int bound = 8) {
    if (n > bound) throw BoundExceeded(n, bound);
    if (n < 2) throw UnsupportedAlgebra("A-series needs n >= 2");
    std::vector<BDTriple> out;
    for (BDTriple& t : candidate_triples(n))
        if (is_valid_triple(t)) out.push_back(std::move(t));
    std::sort(out.begin(), out.end(), triple_less);
    return out;
}

} // namespace bdtwist
