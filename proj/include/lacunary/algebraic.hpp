#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lacunary/interval.hpp"
#include "lacunary/intpoly.hpp"
#include "lacunary/ratpoly.hpp"
#include "lacunary/rootisolation.hpp"

namespace lacunary {

inline constexpr int kDefaultPrecision = 30;   // enclosure width <= 10^-30
inline constexpr int kMaxMinpolyDegree = 8;    // irreducibility checking cap

namespace factor_detail {

/// Multiply an interval polynomial by (z - root_box).
inline std::vector<Box> mul_linear(const std::vector<Box>& poly, const Box& root) {
    std::vector<Box> out(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
        out[j + 1] = out[j + 1] + poly[j];
        out[j] = out[j] - root * poly[j];
    }
    return out;
}

/// Trial factorization of a primitive squarefree p over Z via root subsets:
/// any true factor is lc(p)/lc(g) * g for a conjugation-closed subset of the
/// roots, so interval products over certified root rectangles either pin its
/// integer coefficients or prune the subset exactly. Exact division confirms
/// candidates; precision escalates until every subset resolves.
inline std::optional<IntPolynomial> find_factor(const IntPolynomial& p) {
    std::size_t d = p.degree_checked();
    if (d <= 1) return std::nullopt;
    for (int prec = 24; prec <= 6144; prec *= 2) {
        auto boxes = isolate_roots(p, prec);
        std::vector<int> partner(d, -1);  // conjugate partner, self for real roots
        for (std::size_t i = 0; i < d; ++i) {
            Box cb = boxes[i].conj();
            partner[i] = static_cast<int>(i);
            for (std::size_t j = 0; j < d; ++j) {
                if (j != i && boxes[j].re.lo == cb.re.lo && boxes[j].re.hi == cb.re.hi &&
                    boxes[j].im.lo == cb.im.lo && boxes[j].im.hi == cb.im.hi) {
                    partner[i] = static_cast<int>(j);
                    break;
                }
            }
        }

        bool unresolved = false;
        for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
            unsigned size = static_cast<unsigned>(__builtin_popcount(mask));
            if (size < 1 || size > d / 2) continue;
            bool closed = true;
            for (std::size_t i = 0; i < d && closed; ++i)
                if (((mask >> i) & 1u) && !((mask >> partner[i]) & 1u)) closed = false;
            if (!closed) continue;

            std::vector<Box> cand{
                Box{RatInterval::point(Rat(p.leading())), RatInterval::point(Rat(0))}};
            for (std::size_t i = 0; i < d; ++i)
                if ((mask >> i) & 1u) cand = mul_linear(cand, boxes[i]);

            bool pruned = false, wide = false;
            std::vector<Int> coeffs(cand.size());
            for (std::size_t j = 0; j < cand.size(); ++j) {
                const Box& b = cand[j];
                if (!b.im.contains(Rat(0))) {
                    pruned = true;
                    break;
                }
                if (b.re.width() >= 1 || b.im.width() >= 1) {
                    wide = true;
                    break;
                }
                Int fl;  // the unique integer in [lo, hi], if any
                mpz_cdiv_q(fl.get_mpz_t(), b.re.lo.get_num().get_mpz_t(),
                           b.re.lo.get_den().get_mpz_t());
                if (Rat(fl) > b.re.hi) {
                    pruned = true;
                    break;
                }
                coeffs[j] = fl;
            }
            if (pruned) continue;
            if (wide) {
                unresolved = true;
                continue;
            }
            IntPolynomial g{std::move(coeffs)};
            if (g.is_zero() || g.degree_checked() == 0 || g.degree_checked() >= d) continue;
            g = g.primitive_part();
            if (divides(g, p)) return g;
        }
        if (!unresolved) return std::nullopt;
    }
    throw Error("irreducibility check did not resolve");
}

inline bool is_irreducible(const IntPolynomial& p) {
    if (p.is_zero()) return false;
    std::size_t d = p.degree_checked();
    if (d == 0) return false;
    if (d == 1) return true;
    if (p[0] == 0) return false;  // z divides
    if (!is_squarefree(p)) return false;
    return !find_factor(p.primitive_part()).has_value();
}

}  // namespace factor_detail

/// An algebraic number: primitive irreducible minimal polynomial over Z with
/// positive leading coefficient, plus a rectangle isolating one specific root.
/// Identity is (minpoly, root index in the canonical isolation order), which
/// keeps equality tests and serialization round trips exact.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;

    const IntPolynomial& minpoly() const { return minpoly_; }
    const Box& enclosure() const { return box_; }
    int root_index() const { return index_; }
    std::size_t degree() const { return minpoly_.degree_checked(); }

    bool is_rational() const { return degree() == 1; }
    Rat rational_value() const {
        if (!is_rational()) throw Error("not a rational algebraic number");
        return Rat(-minpoly_[0]) / Rat(minpoly_[1]);
    }
    bool is_zero() const { return is_rational() && minpoly_[0] == 0; }

    /// New value with enclosure width <= 10^-digits.
    AlgebraicNumber refined(int digits) const {
        Int tenpow;
        mpz_ui_pow_ui(tenpow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        if (box_.width() * Rat(tenpow) <= 1) return *this;
        AlgebraicNumber out = *this;
        out.box_ = refine_box(minpoly_, box_, digits);
        return out;
    }

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a.minpoly_ == b.minpoly_ && a.index_ == b.index_;
    }

    std::string to_string() const {
        if (is_rational()) return rational_value().get_str();
        return "root#" + std::to_string(index_) + " of (" + minpoly_.to_string() + ")";
    }

    static AlgebraicNumber unchecked(IntPolynomial minpoly, int index, Box box) {
        AlgebraicNumber a;
        a.minpoly_ = std::move(minpoly);
        a.index_ = index;
        a.box_ = std::move(box);
        return a;
    }

    static AlgebraicNumber from_rational(const Rat& v) {
        IntPolynomial mp(std::vector<Int>{Int(-v.get_num()), Int(v.get_den())});
        Rat w = make_rat(1, 1000000);
        return unchecked(std::move(mp), 0, Box::around(RationalComplex(v, Rat(0)), w));
    }

private:
    IntPolynomial minpoly_;
    int index_ = 0;
    Box box_;
};

/// Element of Q[alpha] in the power basis 1, alpha, ..., alpha^(d-1).
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(AlgebraicNumber base, std::vector<Rat> coords)
        : base_(std::move(base)), coords_(std::move(coords)) {
        if (coords_.size() != base_.degree()) throw Error("coordinate count mismatch");
    }

    const AlgebraicNumber& base() const { return base_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const {
        for (const Rat& c : coords_)
            if (c != 0) return false;
        return true;
    }

    /// The element as a rational when its higher coordinates vanish.
    std::optional<Rat> as_rational() const {
        for (std::size_t j = 1; j < coords_.size(); ++j)
            if (coords_[j] != 0) return std::nullopt;
        return coords_.empty() ? Rat(0) : coords_[0];
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        std::vector<Rat> v(a.coords_);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += b.coords_[j];
        return {a.base_, std::move(v)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        std::vector<Rat> v(a.coords_);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= b.coords_[j];
        return {a.base_, std::move(v)};
    }
    friend FieldElement operator*(const Rat& s, const FieldElement& a) {
        std::vector<Rat> v(a.coords_);
        for (Rat& c : v) c *= s;
        return {a.base_, std::move(v)};
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        std::size_t d = a.coords_.size();
        std::vector<Rat> prod(2 * d - 1, Rat(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
        // reduce modulo the monic rescaling of the minimal polynomial
        const IntPolynomial& m = a.base_.minpoly();
        Rat lc{m.leading()};
        for (std::size_t i = prod.size(); i-- > d;) {
            Rat top = prod[i] / lc;
            if (top == 0) continue;
            for (std::size_t j = 0; j < d; ++j) prod[i - d + j] -= top * Rat(m[j]);
            prod[i] = 0;
        }
        prod.resize(d);
        return {a.base_, std::move(prod)};
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.base_ == b.base_ && a.coords_ == b.coords_;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t j = 0; j < coords_.size(); ++j)
            s += (j ? ", " : "") + coords_[j].get_str();
        return s + "]";
    }

private:
    AlgebraicNumber base_;
    std::vector<Rat> coords_;
};

/// Exact image of p(alpha) in Q[alpha]: p reduced modulo the monic rescaling
/// of the minimal polynomial. Integer-scaled Horner keeps intermediates in Z;
/// one division by lc^(1 + deg p) lands in Q at the end.
inline FieldElement reduce(const IntPolynomial& p, const AlgebraicNumber& alpha) {
    std::size_t d = alpha.degree();
    const IntPolynomial& m = alpha.minpoly();
    const Int& lc = m.leading();
    std::vector<Int> acc(d, Int(0));
    Int lcpow(1);
    const auto& cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        // acc <- lc * (z * acc mod monic minpoly), staying integral
        Int top = acc[d - 1];
        for (std::size_t j = d; j-- > 1;) acc[j] = lc * acc[j - 1] - top * m[j];
        acc[0] = -top * m[0];
        lcpow *= lc;
        if (cs[i] != 0) acc[0] += cs[i] * lcpow;
    }
    std::vector<Rat> coords(d);
    for (std::size_t j = 0; j < d; ++j) {
        coords[j] = Rat(acc[j]) / Rat(lcpow);
    }
    return {alpha, std::move(coords)};
}

/// True iff the minimal polynomial of alpha divides p over Q, i.e. p(alpha)=0.
inline bool is_exact_root(const IntPolynomial& p, const AlgebraicNumber& alpha) {
    if (p.is_zero()) return true;
    return divides(alpha.minpoly(), p);
}

namespace alg_detail {

/// Validated minimal polynomial: primitive, positive leading, irreducible.
inline IntPolynomial validate_minpoly(const IntPolynomial& raw) {
    if (raw.is_zero() || raw.degree_checked() == 0)
        throw ConfigError("minimal polynomial must be nonconstant");
    if (raw.degree_checked() > kMaxMinpolyDegree)
        throw ConfigError("degree too large for irreducibility check (cap " +
                          std::to_string(kMaxMinpolyDegree) + ")");
    IntPolynomial p = raw.primitive_part();
    if (p.degree_checked() >= 2 && !is_squarefree(p)) throw ConfigError("not minimal");
    if (!factor_detail::is_irreducible(p)) throw ConfigError("not minimal");
    return p;
}

}  // namespace alg_detail

/// All roots of a validated minimal polynomial, canonical order.
inline std::vector<AlgebraicNumber> roots_of(const IntPolynomial& validated_minpoly,
                                             int precision = kDefaultPrecision) {
    auto boxes = isolate_roots(validated_minpoly, precision);
    std::vector<AlgebraicNumber> out;
    out.reserve(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i)
        out.push_back(AlgebraicNumber::unchecked(validated_minpoly, static_cast<int>(i),
                                                 boxes[i]));
    return out;
}

/// Validates the polynomial and isolates the root nearest the hint.
inline AlgebraicNumber make_algebraic(const IntPolynomial& minpoly,
                                      const RationalComplex& hint,
                                      int precision = kDefaultPrecision) {
    IntPolynomial p = alg_detail::validate_minpoly(minpoly);
    auto roots = roots_of(p, precision);
    if (roots.empty()) throw ConfigError("root not found");
    std::size_t best = 0;
    Rat best_d(-1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        RationalComplex c = roots[i].enclosure().center();
        Rat dist = (c - hint).abs_sq();
        if (best_d < 0 || dist < best_d) {
            best_d = dist;
            best = i;
        }
    }
    return roots[best];
}

// ---------------------------------------------------------------------------
// Exact modulus comparisons against a rational circle |z| = rho.
// ---------------------------------------------------------------------------

enum class ModulusSide { inside, outside, on_circle };

namespace alg_detail {

/// Whether z^d P(s/z) is proportional to P; a necessary condition for P to
/// have any root on |z|^2 = s.
inline bool is_s_self_inversive(const IntPolynomial& p, const Rat& s) {
    std::size_t d = p.degree_checked();
    if (p[0] == 0) return false;
    Rat c = Rat(p[0]) / Rat(p.leading());
    Rat spow(1);
    for (std::size_t j = 0; j <= d; ++j) {
        // require a_{d-j} s^{d-j} == c * a_j; iterate j ascending with s^{d-j}
        Rat lhs = Rat(p[d - j]);
        Rat spow_dj(1);
        for (std::size_t t = 0; t < d - j; ++t) spow_dj *= s;
        if (lhs * spow_dj != c * Rat(p[j])) return false;
    }
    (void)spow;
    return true;
}

/// For even-degree s-self-inversive P: the integer polynomial R with
/// R(z + s/z) = P(z)/z^(d/2) up to a constant. Real roots of R in
/// (-2 rho, 2 rho) correspond to the conjugate pairs of P on |z| = rho.
inline IntPolynomial circle_parameter_poly(const IntPolynomial& p, const Rat& s) {
    std::size_t d = p.degree_checked();
    if (d % 2 != 0) throw Error("internal: odd self-inversive degree");
    std::size_t m = d / 2;
    // u_i(w) = z^i + s^i/z^i as a polynomial in w = z + s/z:
    // u_0 = 2, u_1 = w, u_i = w u_{i-1} - s u_{i-2}
    std::vector<RatPolynomial> u(m + 1);
    u[0] = RatPolynomial(std::vector<Rat>{Rat(2)});
    if (m >= 1) u[1] = RatPolynomial(std::vector<Rat>{Rat(0), Rat(1)});
    for (std::size_t i = 2; i <= m; ++i) {
        const auto& a = u[i - 1].coefficients();
        std::vector<Rat> v(a.size() + 1, Rat(0));
        for (std::size_t j = 0; j < a.size(); ++j) v[j + 1] += a[j];
        const auto& b = u[i - 2].coefficients();
        for (std::size_t j = 0; j < b.size(); ++j) v[j] -= s * b[j];
        u[i] = RatPolynomial(std::move(v));
    }
    std::vector<Rat> r(m + 1, Rat(0));
    r[0] = Rat(p[m]);
    for (std::size_t i = 1; i <= m; ++i) {
        const auto& ui = u[i].coefficients();
        for (std::size_t j = 0; j < ui.size(); ++j) r[j] += Rat(p[m + i]) * ui[j];
    }
    return RatPolynomial(std::move(r)).cleared();
}

/// Certified boxes, each containing exactly one root of P with |root| = rho.
inline std::vector<Box> circle_root_boxes(const IntPolynomial& p, const Rat& rho,
                                          int precision) {
    Rat s = rho * rho;
    std::vector<Box> out;
    if (!is_s_self_inversive(p, s)) return out;
    if (p.degree_checked() % 2 != 0) return out;  // odd irreducible: no circle roots
    IntPolynomial r = circle_parameter_poly(p, s);
    if (r.is_zero() || r.degree_checked() == 0) return out;
    if (!is_squarefree(r)) r = squarefree_part(r);
    auto chain = sturm_chain(r);
    Int tenpow;
    mpz_ui_pow_ui(tenpow.get_mpz_t(), 10, static_cast<unsigned long>(precision));
    Rat target = Rat(1) / Rat(tenpow);
    for (const RatInterval& wiv : detail::sturm_isolate(r, target)) {
        Rat two_rho = 2 * rho;
        if (wiv.hi <= -two_rho || wiv.lo >= two_rho) continue;
        RatInterval re{wiv.lo / 2, wiv.hi / 2};
        RatInterval re_sq = re.square();
        Rat lo_val = s - re_sq.hi;
        if (lo_val < 0) lo_val = 0;
        Rat hi_val = s - re_sq.lo;
        if (hi_val < 0) continue;  // w interval fully outside the circle range
        RatInterval im{sqrt_interval(lo_val, precision).lo,
                       sqrt_interval(hi_val, precision).hi};
        out.push_back(Box{re, im});
        out.push_back(Box{re, -im});
    }
    return out;
}

}  // namespace alg_detail

/// Exact comparison of |alpha| against rational rho. Decides strictly inside,
/// strictly outside, or exactly on the circle; the on-circle case is resolved
/// by the self-inversive reduction rather than endless refinement.
inline ModulusSide modulus_side(const AlgebraicNumber& alpha, const Rat& rho,
                                int max_rounds = 24) {
    if (rho <= 0) throw ConfigError("radius must be positive");
    Rat s = rho * rho;
    if (alpha.is_rational()) {
        Rat v = alpha.rational_value();
        Rat vv = v * v;
        if (vv < s) return ModulusSide::inside;
        if (vv > s) return ModulusSide::outside;
        return ModulusSide::on_circle;
    }
    const IntPolynomial& p = alpha.minpoly();
    if (alpha.degree() == 2) {
        Int disc = p[1] * p[1] - 4 * p[0] * p[2];
        if (disc < 0) {  // conjugate pair: |root|^2 = c0/c2 exactly
            Rat mod_sq = Rat(p[0]) / Rat(p[2]);
            if (mod_sq < s) return ModulusSide::inside;
            if (mod_sq > s) return ModulusSide::outside;
            return ModulusSide::on_circle;
        }
    }
    Box box = alpha.enclosure();
    int circle_prec = kDefaultPrecision;
    bool inversive = alg_detail::is_s_self_inversive(p, s);
    for (int round = 0; round < max_rounds; ++round) {
        RatInterval mod_sq = box.abs_sq();
        if (mod_sq.hi < s) return ModulusSide::inside;
        if (mod_sq.lo > s) return ModulusSide::outside;
        if (inversive) {
            auto circles = alg_detail::circle_root_boxes(p, rho, circle_prec);
            bool overlap = false;
            for (const Box& c : circles) {
                if (box.contains(c)) return ModulusSide::on_circle;
                if (!box.disjoint(c)) overlap = true;
            }
            if (overlap) circle_prec *= 2;
        }
        int digits = kDefaultPrecision << (round / 2 + 1);
        box = refine_box(p, box, digits);
    }
    throw Error("boundary undecidable: |alpha| vs rho did not resolve");
}

/// All roots of alpha's minimal polynomial certified strictly inside B(0, rho).
inline std::vector<AlgebraicNumber> conjugates_in_ball(const AlgebraicNumber& alpha,
                                                       const Rat& rho,
                                                       int precision = kDefaultPrecision) {
    if (rho <= 0 || rho > 1) throw ConfigError("rho must lie in (0, 1]");
    std::vector<AlgebraicNumber> out;
    for (const AlgebraicNumber& c : roots_of(alpha.minpoly(), precision))
        if (modulus_side(c, rho) == ModulusSide::inside) out.push_back(c);
    return out;
}

inline bool contains(const std::vector<AlgebraicNumber>& set, const AlgebraicNumber& x) {
    for (const auto& a : set)
        if (a == x) return true;
    return false;
}

struct ClosureResult {
    bool closed = false;
    std::optional<AlgebraicNumber> witness;  // an offending conjugate on failure
};

/// True iff for every member of S, every conjugate inside B(0, rho) is also
/// a member. On failure carries the first offending conjugate as witness.
inline ClosureResult check_closed_relative(const std::vector<AlgebraicNumber>& S,
                                           const Rat& rho) {
    for (const AlgebraicNumber& a : S)
        for (const AlgebraicNumber& c : conjugates_in_ball(a, rho))
            if (!contains(S, c)) return {false, c};
    return {true, std::nullopt};
}

struct Enumeration {
    std::vector<AlgebraicNumber> numbers;
    bool shortfall = false;  // fewer numbers exist under the caps than requested
};

namespace alg_detail {

/// Coefficient order used by the enumeration: smaller absolute value first,
/// positive before negative on ties. Makes the minimal polynomial of -1/2
/// (namely 2z+1) precede that of 1/2 (2z-1) within the same height.
inline int cmp_coeff(const Int& a, const Int& b) {
    Int aa = abs(a), ab = abs(b);
    if (aa != ab) return aa < ab ? -1 : 1;
    if (a == b) return 0;
    return a > b ? -1 : 1;  // positive first
}

inline bool cmp_coeff_vec(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp_coeff(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

}  // namespace alg_detail

/// Deterministic prefix of a fixed enumeration of the algebraic numbers in
/// the open unit ball, ordered by (degree, height, coefficient order from the
/// constant term up, then root order within a polynomial). One admissible
/// realization; the degree-1 stratum lists the rationals p/q in lowest terms
/// with |p| < q.
inline Enumeration enumerate_unit_ball(std::size_t count, int max_degree, int max_height,
                                       int precision = kDefaultPrecision) {
    if (max_degree < 1) throw ConfigError("degree must be >= 1");
    if (max_degree > kMaxMinpolyDegree)
        throw ConfigError("degree must be <= " + std::to_string(kMaxMinpolyDegree));
    if (max_height < 1) throw ConfigError("height must be >= 1");
    if (count < 1) throw ConfigError("count must be >= 1");

    Enumeration out;
    for (int deg = 1; deg <= max_degree && out.numbers.size() < count; ++deg) {
        for (int height = 1; height <= max_height && out.numbers.size() < count; ++height) {
            double stratum = std::pow(2.0 * height + 1.0, deg) * height;
            if (stratum > 2e6)
                throw ConfigError("enumeration stratum too large at degree " +
                                  std::to_string(deg) + " height " + std::to_string(height));
            std::vector<std::vector<Int>> stratum_polys;
            std::vector<Int> c(deg + 1, Int(-height));
            c[deg] = 1;
            bool done = false;
            while (!done) {
                Int h(0);
                for (const Int& x : c) {
                    Int a = abs(x);
                    if (a > h) h = a;
                }
                if (h == height) stratum_polys.push_back(c);
                for (std::size_t j = 0;; ++j) {
                    if (j == static_cast<std::size_t>(deg)) {
                        if (c[j] == height) done = true;
                        else c[j] += 1;
                        break;
                    }
                    if (c[j] == height) c[j] = -height;
                    else {
                        c[j] += 1;
                        break;
                    }
                }
            }
            std::sort(stratum_polys.begin(), stratum_polys.end(),
                      alg_detail::cmp_coeff_vec);
            for (const auto& v : stratum_polys) {
                if (out.numbers.size() >= count) break;
                IntPolynomial p{std::vector<Int>(v)};
                if (p.is_zero() || p.degree() != static_cast<std::size_t>(deg)) continue;
                if (p.content() != 1) continue;
                if (!factor_detail::is_irreducible(p)) continue;
                for (const AlgebraicNumber& r : roots_of(p, precision)) {
                    if (out.numbers.size() >= count) break;
                    if (modulus_side(r, Rat(1)) == ModulusSide::inside)
                        out.numbers.push_back(r);
                }
            }
        }
    }
    out.shortfall = out.numbers.size() < count;
    return out;
}

// ---------------------------------------------------------------------------
// Images P(alpha) as algebraic numbers.
// ---------------------------------------------------------------------------

namespace alg_detail {

/// Characteristic polynomial of a d x d rational matrix, Faddeev-LeVerrier.
inline RatPolynomial charpoly(const std::vector<std::vector<Rat>>& M) {
    std::size_t d = M.size();
    std::vector<std::vector<Rat>> Mk = M;
    std::vector<Rat> c(d + 1, Rat(0));
    c[d] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        if (k > 1) {
            // Mk = M * (Mk + c_{d-k+1} I)
            std::vector<std::vector<Rat>> T = Mk;
            for (std::size_t i = 0; i < d; ++i) T[i][i] += c[d - k + 1];
            std::vector<std::vector<Rat>> N(d, std::vector<Rat>(d, Rat(0)));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t l = 0; l < d; ++l) {
                    if (M[i][l] == 0) continue;
                    for (std::size_t j = 0; j < d; ++j) N[i][j] += M[i][l] * T[l][j];
                }
            Mk = std::move(N);
        }
        Rat tr(0);
        for (std::size_t i = 0; i < d; ++i) tr += Mk[i][i];
        c[d - k] = -tr / Rat(Int(k));
    }
    return RatPolynomial(std::move(c));
}

}  // namespace alg_detail

/// P(alpha) as an algebraic number: minimal polynomial from the squarefree
/// part of the characteristic polynomial of multiplication by P(alpha) in
/// Q[alpha], located via interval evaluation of P over alpha's enclosure.
inline AlgebraicNumber image_algebraic(const IntPolynomial& P, const AlgebraicNumber& alpha,
                                       int precision = kDefaultPrecision) {
    FieldElement beta = reduce(P, alpha);
    if (auto r = beta.as_rational()) return AlgebraicNumber::from_rational(*r);

    std::size_t d = alpha.degree();
    // columns: coordinates of beta * alpha^j
    std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d, Rat(0)));
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rat> e(d, Rat(0));
        e[j] = 1;
        FieldElement col = beta * FieldElement(alpha, std::move(e));
        for (std::size_t i = 0; i < d; ++i) M[i][j] = col.coords()[i];
    }
    IntPolynomial chi = alg_detail::charpoly(M).cleared();
    IntPolynomial mp = squarefree_part(chi);

    AlgebraicNumber a = alpha;
    int prec = precision;
    for (int round = 0; round < 12; ++round) {
        a = a.refined(3 * prec + 40);  // image box shrinks well below candidate width
        Box eb = eval_box(P, a.enclosure());
        auto candidates = isolate_roots(mp, prec);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (candidates[i].contains(eb))
                return AlgebraicNumber::unchecked(mp, static_cast<int>(i), candidates[i]);
        }
        prec *= 2;
    }
    throw Error("image identification did not stabilize");
}

/// Locate which root of a validated minimal polynomial a loaded enclosure
/// isolates; used when deserializing algebraic numbers.
inline AlgebraicNumber identify_root(const IntPolynomial& validated_minpoly,
                                     const Box& loaded) {
    for (int prec = kDefaultPrecision; prec <= 16 * kDefaultPrecision; prec *= 2) {
        auto boxes = isolate_roots(validated_minpoly, prec);
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < boxes.size(); ++i)
            if (!boxes[i].disjoint(loaded)) hits.push_back(i);
        if (hits.empty()) throw ConfigError("root not found: enclosure matches no root");
        if (hits.size() == 1 && loaded.contains(boxes[hits[0]]))
            return AlgebraicNumber::unchecked(validated_minpoly,
                                              static_cast<int>(hits[0]), boxes[hits[0]]);
    }
    throw ConfigError("isolation failed: enclosure does not isolate a single root");
}

}  // namespace lacunary
