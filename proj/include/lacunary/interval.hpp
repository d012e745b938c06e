#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "lacunary/intpoly.hpp"

namespace lacunary {

/// Closed rational interval [lo, hi].
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error("interval endpoints out of order");
    }
    static RatInterval point(const Rat& v) { return {v, v}; }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool disjoint(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
    }
    friend RatInterval operator*(const Rat& s, const RatInterval& a) {
        return s >= 0 ? RatInterval{s * a.lo, s * a.hi} : RatInterval{s * a.hi, s * a.lo};
    }

    RatInterval square() const {
        if (lo >= 0) return {lo * lo, hi * hi};
        if (hi <= 0) return {hi * hi, lo * lo};
        return {Rat(0), std::max(lo * lo, hi * hi)};
    }
};

/// Axis-aligned rectangle in C with rational corners.
struct Box {
    RatInterval re;
    RatInterval im;

    Box() = default;
    Box(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}

    static Box around(const RationalComplex& c, const Rat& radius) {
        return {{c.re - radius, c.re + radius}, {c.im - radius, c.im + radius}};
    }

    RationalComplex center() const { return {re.mid(), im.mid()}; }
    Rat width() const { return std::max(re.width(), im.width()); }
    bool contains(const RationalComplex& z) const {
        return re.contains(z.re) && im.contains(z.im);
    }
    bool contains(const Box& o) const { return re.contains(o.re) && im.contains(o.im); }
    bool disjoint(const Box& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
    Box conj() const { return {re, -im}; }

    /// Interval enclosure of |z|^2 over the box.
    RatInterval abs_sq() const { return re.square() + im.square(); }

    friend Box operator+(const Box& a, const Box& b) { return {a.re + b.re, a.im + b.im}; }
    friend Box operator-(const Box& a, const Box& b) { return {a.re - b.re, a.im - b.im}; }
    friend Box operator*(const Box& a, const Box& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    std::string to_string() const {
        return "[" + re.lo.get_str() + ", " + re.hi.get_str() + "] x [" + im.lo.get_str() +
               ", " + im.hi.get_str() + "]i";
    }
};

/// Interval Horner evaluation of p over a complex box.
inline Box eval_box(const IntPolynomial& p, const Box& z) {
    Box acc;
    const auto& cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        acc = acc * z;
        Rat c{cs[i]};
        acc.re = acc.re + RatInterval::point(c);
    }
    return acc;
}

/// [lo, hi] with lo^2 <= v <= hi^2 and hi - lo <= 10^-digits. Requires v >= 0.
inline RatInterval sqrt_interval(const Rat& v, int digits) {
    if (v < 0) throw Error("sqrt of negative rational");
    Int k;
    mpz_ui_pow_ui(k.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rat scaled = v * Rat(k) * Rat(k);
    Int fl = scaled.get_num() / scaled.get_den();
    Int m;
    mpz_sqrt(m.get_mpz_t(), fl.get_mpz_t());
    Rat lo = Rat(m) / Rat(k);
    Rat hi = Rat(m + 1) / Rat(k);
    return {lo, hi};
}

}  // namespace lacunary
