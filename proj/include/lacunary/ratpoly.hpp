#pragma once

#include <utility>
#include <vector>

#include "lacunary/intpoly.hpp"

namespace lacunary {

/// Dense polynomial over Q. Internal helper for number-field reduction,
/// Sturm chains and rank computations; not part of the serialized surface.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    explicit RatPolynomial(const IntPolynomial& p) {
        coeffs_.reserve(p.coefficients().size());
        for (const Int& c : p.coefficients()) coeffs_.emplace_back(c);
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree_checked() const {
        if (coeffs_.empty()) throw Error("zero polynomial has no degree");
        return coeffs_.size() - 1;
    }
    const std::vector<Rat>& coefficients() const { return coeffs_; }
    const Rat& operator[](std::size_t n) const {
        static const Rat zero(0);
        return n < coeffs_.size() ? coeffs_[n] : zero;
    }
    const Rat& leading() const {
        if (coeffs_.empty()) throw Error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    RatPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rat> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = Rat(Int(i)) * coeffs_[i];
        return RatPolynomial(std::move(v));
    }

    friend RatPolynomial operator-(const RatPolynomial& a) {
        std::vector<Rat> v(a.coeffs_);
        for (Rat& c : v) c = -c;
        return RatPolynomial(std::move(v));
    }
    friend RatPolynomial operator*(const Rat& s, const RatPolynomial& a) {
        if (s == 0) return {};
        std::vector<Rat> v(a.coeffs_);
        for (Rat& c : v) c *= s;
        return RatPolynomial(std::move(v));
    }

    /// (quotient, remainder) with *this = q*den + r, deg r < deg den.
    std::pair<RatPolynomial, RatPolynomial> divrem(const RatPolynomial& den) const {
        if (den.is_zero()) throw Error("division by zero polynomial");
        if (is_zero() || degree_checked() < den.degree_checked())
            return {RatPolynomial(), *this};
        std::vector<Rat> rem(coeffs_);
        std::size_t dd = den.degree_checked();
        std::vector<Rat> quot(rem.size() - dd, Rat(0));
        for (std::size_t i = rem.size(); i-- > dd;) {
            if (rem[i] == 0) continue;
            Rat q = rem[i] / den.leading();
            quot[i - dd] = q;
            for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den[j];
        }
        return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
    }

    /// Denominators cleared and content removed: a primitive integer polynomial
    /// that is a positive rational multiple of *this.
    IntPolynomial cleared() const {
        if (is_zero()) return {};
        Int den(1);
        for (const Rat& c : coeffs_)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<Int> v;
        v.reserve(coeffs_.size());
        for (const Rat& c : coeffs_) {
            Rat scaled = c * Rat(den);
            v.push_back(scaled.get_num());
        }
        IntPolynomial p{std::move(v)};
        Int g = p.content();
        std::vector<Int> w(p.coefficients());
        for (Int& c : w) c /= g;
        return IntPolynomial(std::move(w));
    }

private:
    std::vector<Rat> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

/// Sturm chain of p: p, p', then negated remainders.
inline std::vector<RatPolynomial> sturm_chain(const IntPolynomial& p) {
    std::vector<RatPolynomial> chain;
    chain.emplace_back(p);
    chain.push_back(chain.front().derivative());
    while (!chain.back().is_zero()) {
        const RatPolynomial& a = chain[chain.size() - 2];
        const RatPolynomial& b = chain.back();
        RatPolynomial r = -a.divrem(b).second;
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_sign_changes(const std::vector<RatPolynomial>& chain, const Rat& x) {
    int changes = 0;
    int prev = 0;
    for (const RatPolynomial& q : chain) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

/// Number of distinct real roots of squarefree p in (a, b]. Requires p(a) != 0.
inline int sturm_count(const std::vector<RatPolynomial>& chain, const Rat& a, const Rat& b) {
    return sturm_sign_changes(chain, a) - sturm_sign_changes(chain, b);
}

}  // namespace lacunary
