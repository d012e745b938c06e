#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lacunary {

using Int = mpz_class;
using Rat = mpq_class;

/// Base class for all library errors. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration or arguments (CLI exit code 3).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// A construction could not be carried out (CLI exit code 2).
class BuildError : public Error {
public:
    explicit BuildError(const std::string& what) : Error(what) {}
};

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Exact complex number with rational real and imaginary parts.
struct RationalComplex {
    Rat re;
    Rat im;

    RationalComplex() : re(0), im(0) {}
    RationalComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit RationalComplex(const Rat& r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    /// |z|^2, exact.
    Rat abs_sq() const { return re * re + im * im; }

    RationalComplex conj() const { return {re, Rat(-im)}; }

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RationalComplex operator*(const Rat& s, const RationalComplex& a) {
        return {s * a.re, s * a.im};
    }
    friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
        Rat n = b.abs_sq();
        if (n == 0) throw Error("division by zero RationalComplex");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::string to_string() const {
        return re.get_str() + (sgn(im) >= 0 ? "+" : "") + im.get_str() + "i";
    }
};

/// Dense polynomial over arbitrary-precision integers, exponent-indexed
/// coefficients. The zero polynomial is the empty coefficient list; the
/// degree of zero is reported as std::nullopt rather than a sentinel.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial from_ints(std::initializer_list<long> cs) {
        std::vector<Int> v;
        v.reserve(cs.size());
        for (long c : cs) v.emplace_back(c);
        return IntPolynomial(std::move(v));
    }

    static IntPolynomial constant(Int c) {
        std::vector<Int> v;
        if (c != 0) v.push_back(std::move(c));
        return IntPolynomial(std::move(v));
    }

    static IntPolynomial monomial(std::size_t exponent, Int coeff = Int(1)) {
        if (coeff == 0) return {};
        std::vector<Int> v(exponent + 1, Int(0));
        v[exponent] = std::move(coeff);
        return IntPolynomial(std::move(v));
    }

    static IntPolynomial one() { return constant(Int(1)); }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// degree(), demanding the polynomial is nonzero.
    std::size_t degree_checked() const {
        if (coeffs_.empty()) throw Error("zero polynomial has no degree");
        return coeffs_.size() - 1;
    }

    const std::vector<Int>& coefficients() const { return coeffs_; }

    /// Coefficient of z^n, zero past the degree.
    const Int& operator[](std::size_t n) const {
        static const Int zero(0);
        return n < coeffs_.size() ? coeffs_[n] : zero;
    }

    const Int& leading() const {
        if (coeffs_.empty()) throw Error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            if (coeffs_[n] != 0) s.push_back(n);
        return s;
    }

    /// L(P): sum of absolute values of the coefficients. L(0) = 0.
    Int length() const {
        Int s(0);
        for (const Int& c : coeffs_) s += abs(c);
        return s;
    }

    /// H(P): maximum absolute coefficient. H(0) = 0.
    Int height() const {
        Int h(0);
        for (const Int& c : coeffs_) {
            Int a = abs(c);
            if (a > h) h = a;
        }
        return h;
    }

    Int content() const {
        Int g(0);
        for (const Int& c : coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    /// Content divided out, leading coefficient made positive.
    IntPolynomial primitive_part() const {
        if (is_zero()) throw Error("primitive part of zero polynomial");
        Int g = content();
        if (sgn(coeffs_.back()) < 0) g = -g;
        std::vector<Int> v(coeffs_);
        for (Int& c : v) c /= g;
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<Int> v(a.coeffs_);
        for (Int& c : v) c = -c;
        return IntPolynomial(std::move(v));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return IntPolynomial(mul_impl(a.coeffs_, b.coeffs_));
    }

    friend IntPolynomial operator*(const Int& s, const IntPolynomial& a) {
        if (s == 0) return {};
        std::vector<Int> v(a.coeffs_);
        for (Int& c : v) c *= s;
        return IntPolynomial(std::move(v));
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    IntPolynomial pow(unsigned long k) const {
        IntPolynomial result = one();
        IntPolynomial base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return result;
    }

    /// m-th derivative, term by term. derivative(p, 0) = p.
    IntPolynomial derivative(unsigned order = 1) const {
        IntPolynomial p = *this;
        for (unsigned j = 0; j < order; ++j) {
            if (p.coeffs_.size() <= 1) return {};
            std::vector<Int> v(p.coeffs_.size() - 1);
            for (std::size_t i = 1; i < p.coeffs_.size(); ++i) v[i - 1] = Int(i) * p.coeffs_[i];
            p = IntPolynomial(std::move(v));
        }
        return p;
    }

    /// Multiply by z^offset.
    IntPolynomial shifted(std::size_t offset) const {
        if (is_zero() || offset == 0) return *this;
        std::vector<Int> v(coeffs_.size() + offset, Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + offset] = coeffs_[i];
        return IntPolynomial(std::move(v));
    }

    Int eval(const Int& x) const {
        Int acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rat(coeffs_[i]);
        return acc;
    }

    /// Exact evaluation at a rational complex point, Horner scheme.
    RationalComplex eval(const RationalComplex& z) const {
        RationalComplex acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * z + RationalComplex(Rat(coeffs_[i]));
        return acc;
    }

    /// Write P(z) = Q(z^d) with d = gcd of the exponents in support(P).
    /// For support {0} (nonzero constants) the gcd over nonzero exponents is
    /// empty; d = 1 by convention so Q = P.
    std::pair<unsigned long, IntPolynomial> exponent_gcd_split() const {
        if (is_zero()) throw Error("undefined gcd: exponent split of zero polynomial");
        unsigned long d = 0;
        for (std::size_t n = 1; n < coeffs_.size(); ++n)
            if (coeffs_[n] != 0) d = std::gcd(d, static_cast<unsigned long>(n));
        if (d == 0) d = 1;
        std::vector<Int> q(coeffs_.size() / d + 1, Int(0));
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            if (coeffs_[n] != 0) q[n / d] = coeffs_[n];
        return {d, IntPolynomial(std::move(q))};
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            if (coeffs_[n] == 0) continue;
            if (!s.empty()) s += sgn(coeffs_[n]) > 0 ? " + " : " - ";
            else if (sgn(coeffs_[n]) < 0) s += "-";
            Int a = abs(coeffs_[n]);
            if (n == 0) s += a.get_str();
            else {
                if (a != 1) s += a.get_str() + "*";
                s += n == 1 ? "z" : "z^" + std::to_string(n);
            }
        }
        return s;
    }

private:
    std::vector<Int> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    // Schoolbook below the threshold, Karatsuba above. Degrees at desk scale
    // stay in the low thousands, so this keeps block builds under seconds
    // without any asymptotic machinery.
    static constexpr std::size_t kKaratsubaThreshold = 48;

    static std::vector<Int> mul_impl(const std::vector<Int>& a, const std::vector<Int>& b) {
        if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return mul_school(a, b);
        return mul_karatsuba(a, b);
    }

    static std::vector<Int> mul_school(const std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> r(a.size() + b.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j] == 0) continue;
                mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
            }
        }
        return r;
    }

    static std::vector<Int> mul_karatsuba(const std::vector<Int>& a, const std::vector<Int>& b) {
        std::size_t h = std::max(a.size(), b.size()) / 2;
        auto split = [h](const std::vector<Int>& v) {
            std::vector<Int> lo(v.begin(), v.begin() + std::min(h, v.size()));
            std::vector<Int> hi(v.begin() + std::min(h, v.size()), v.end());
            if (lo.empty()) lo.push_back(Int(0));
            if (hi.empty()) hi.push_back(Int(0));
            return std::pair{std::move(lo), std::move(hi)};
        };
        auto [a0, a1] = split(a);
        auto [b0, b1] = split(b);
        std::vector<Int> p0 = mul_impl(a0, b0);
        std::vector<Int> p2 = mul_impl(a1, b1);
        std::vector<Int> sa(std::max(a0.size(), a1.size()), Int(0));
        for (std::size_t i = 0; i < a0.size(); ++i) sa[i] += a0[i];
        for (std::size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
        std::vector<Int> sb(std::max(b0.size(), b1.size()), Int(0));
        for (std::size_t i = 0; i < b0.size(); ++i) sb[i] += b0[i];
        for (std::size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];
        std::vector<Int> p1 = mul_impl(sa, sb);
        for (std::size_t i = 0; i < p0.size(); ++i) p1[i] -= p0[i];
        for (std::size_t i = 0; i < p2.size(); ++i) p1[i] -= p2[i];
        std::vector<Int> r(a.size() + b.size() - 1, Int(0));
        for (std::size_t i = 0; i < p0.size() && i < r.size(); ++i) r[i] += p0[i];
        for (std::size_t i = 0; i < p1.size() && i + h < r.size(); ++i) r[i + h] += p1[i];
        for (std::size_t i = 0; i < p2.size() && i + 2 * h < r.size(); ++i) r[i + 2 * h] += p2[i];
        return r;
    }
};

/// Exact quotient over Z, or nullopt when den does not divide num in Z[z].
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& num,
                                                 const IntPolynomial& den) {
    if (den.is_zero()) throw Error("division by zero polynomial");
    if (num.is_zero()) return IntPolynomial();
    if (num.degree_checked() < den.degree_checked()) return std::nullopt;
    std::vector<Int> rem(num.coefficients());
    std::size_t dd = den.degree_checked();
    std::vector<Int> quot(rem.size() - dd, Int(0));
    const Int& lead = den.leading();
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den[j];
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

/// Whether den divides num over Q. For primitive den this coincides with
/// divisibility over Z (Gauss), which is how it is decided.
inline bool divides(const IntPolynomial& den, const IntPolynomial& num) {
    if (num.is_zero()) return true;
    return divide_exact(num, den.primitive_part()).has_value();
}

/// Lazy pseudo-remainder: an integer multiple of (a mod b), exact over Z.
/// Suitable for the primitive PRS where remainders are re-primitivized.
inline IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw Error("pseudo-remainder by zero");
    if (a.is_zero() || a.degree_checked() < b.degree_checked()) return a;
    std::vector<Int> rem(a.coefficients());
    std::size_t db = b.degree_checked();
    const Int& lb = b.leading();
    for (std::size_t i = rem.size(); i-- > db;) {
        Int top = rem[i];
        if (top == 0) continue;
        for (std::size_t j = 0; j < i; ++j) rem[j] *= lb;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= top * b[j];
        rem[i] = 0;
    }
    rem.resize(db);
    return IntPolynomial(std::move(rem));
}

/// gcd over Z[z] via the primitive PRS; result primitive with positive
/// leading coefficient, times the integer gcd of the contents.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part() * IntPolynomial::constant(b.content());
    if (b.is_zero()) return a.primitive_part() * IntPolynomial::constant(a.content());
    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree_checked() < b.degree_checked()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPolynomial() : r.primitive_part();
    }
    return IntPolynomial::constant(cg) * a;
}

/// Whether gcd(p, p') is constant.
inline bool is_squarefree(const IntPolynomial& p) {
    if (p.is_zero()) return false;
    if (p.degree_checked() == 0) return true;
    IntPolynomial g = poly_gcd(p, p.derivative());
    return g.degree_checked() == 0;
}

/// p divided by gcd(p, p'): same roots, all simple.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("squarefree part of zero polynomial");
    if (p.degree_checked() == 0) return IntPolynomial::one();
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree_checked() == 0) return p.primitive_part();
    // g | p over Q and g.primitive_part() is primitive, so by Gauss the
    // quotient of the primitive parts is integral.
    auto q = divide_exact(p.primitive_part(), g.primitive_part());
    if (!q) throw Error("internal: squarefree division failed");
    return q->primitive_part();
}

}  // namespace lacunary
