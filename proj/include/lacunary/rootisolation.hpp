#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "lacunary/interval.hpp"
#include "lacunary/intpoly.hpp"
#include "lacunary/ratpoly.hpp"

namespace lacunary {

// Certified complex root isolation for squarefree integer polynomials.
//
// Floating-point Aberth iteration proposes approximations; every returned
// rectangle is then certified with exact rational arithmetic: a Rouche-style
// one-disk test proves "exactly one root in D(c, r)" and "exactly one root in
// D(c, 3r/2)". The rectangle [c +- r] is inscribed in the larger disk, so it
// contains exactly the one certified root. Rectangles are pairwise disjoint
// and there are deg(p) of them, which pins every root of p. No float ever
// participates in the certificates.

namespace detail {

inline Rat abs_upper(const RationalComplex& z) { return abs(z.re) + abs(z.im); }
inline Rat abs_lower(const RationalComplex& z) { return std::max(abs(z.re), abs(z.im)); }

inline Rat round_dyadic(const Rat& x, unsigned long bits) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rat scaled = x * Rat(scale);
    Int num = scaled.get_num(), den = scaled.get_den();
    Int q;
    // round to nearest
    Int twice = 2 * num + den;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Int(2 * den).get_mpz_t());
    Rat r{q, scale};
    r.canonicalize();
    return r;
}

inline RationalComplex round_dyadic(const RationalComplex& z, unsigned long bits) {
    return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
}

/// Coefficients of p(z + c), exact.
inline std::vector<RationalComplex> taylor_shift(const IntPolynomial& p,
                                                 const RationalComplex& c) {
    std::vector<RationalComplex> b;
    b.reserve(p.coefficients().size());
    for (const Int& a : p.coefficients()) b.emplace_back(Rat(a), Rat(0));
    if (b.empty()) return b;
    std::size_t d = b.size() - 1;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = d; j-- > k;) b[j] = b[j] + c * b[j + 1];
    return b;
}

/// Exact one-disk test: true implies p has exactly one root in the open disk
/// D(c, r). Compares |b_1| r against the sum of |b_i| r^i over i != 1 on the
/// circle |z - c| = r, with directed rational bounds on the moduli.
inline bool one_root_in_disk(const std::vector<RationalComplex>& shifted, const Rat& r) {
    if (shifted.size() < 2) return false;
    Rat lhs = abs_lower(shifted[1]) * r;
    Rat rhs = abs_upper(shifted[0]);
    Rat rpow(1);
    for (std::size_t i = 2; i < shifted.size(); ++i) {
        rpow *= r;
        rhs += abs_upper(shifted[i]) * rpow * r;
    }
    return lhs > rhs;
}

struct NewtonResult {
    RationalComplex center;
    Rat residual_step;  // upper bound on the last |p/p'| correction
    bool ok = false;
};

inline NewtonResult newton_polish(const IntPolynomial& p, const IntPolynomial& dp,
                                  RationalComplex z, unsigned long bits, int max_iter) {
    NewtonResult out;
    Rat step_bound(1);
    for (int it = 0; it < max_iter; ++it) {
        RationalComplex val = p.eval(z);
        RationalComplex der = dp.eval(z);
        if (abs_lower(der) == 0) return out;  // critical point, caller escalates
        RationalComplex step = val / der;
        z = round_dyadic(z - step, bits);
        step_bound = abs_upper(step);
        Rat tol{Int(1), Int(1)};
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits > 8 ? bits - 8 : 1);
        tol = Rat(1) / Rat(scale);
        if (step_bound <= tol) {
            out.center = z;
            out.residual_step = step_bound;
            out.ok = true;
            return out;
        }
    }
    out.center = z;
    out.residual_step = step_bound;
    return out;
}

/// Attempt to certify an isolating rectangle around center. Grows the radius
/// geometrically until both disk tests pass or the width budget is exhausted.
inline bool certify_box(const IntPolynomial& p, const RationalComplex& center,
                        const Rat& start_radius, const Rat& max_halfwidth, Box& out) {
    std::vector<RationalComplex> shifted = taylor_shift(p, center);
    Rat r = start_radius;
    while (r <= max_halfwidth) {
        if (one_root_in_disk(shifted, r) && one_root_in_disk(shifted, r * make_rat(3, 2))) {
            out = Box::around(center, r);
            return true;
        }
        r *= 2;
    }
    return false;
}

inline std::vector<std::complex<double>> to_doubles(const IntPolynomial& p) {
    // Scale by the largest exponent so huge coefficients stay finite.
    long emax = -100000;
    const auto& cs = p.coefficients();
    std::vector<std::pair<double, long>> parts;
    parts.reserve(cs.size());
    for (const Int& c : cs) {
        long e = 0;
        double m = mpz_get_d_2exp(&e, c.get_mpz_t());
        parts.emplace_back(m, e);
        if (c != 0 && e > emax) emax = e;
    }
    std::vector<std::complex<double>> out;
    out.reserve(cs.size());
    for (auto& [m, e] : parts)
        out.emplace_back(m == 0.0 ? 0.0 : std::ldexp(m, std::max(e - emax, -1000L)), 0.0);
    return out;
}

inline std::complex<double> horner(const std::vector<std::complex<double>>& c,
                                   std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

/// Aberth-Ehrlich with a fixed deterministic start configuration.
inline std::vector<std::complex<double>> aberth(const IntPolynomial& p, int iterations) {
    auto c = to_doubles(p);
    std::size_t n = c.size() - 1;
    std::vector<std::complex<double>> dc(n);
    for (std::size_t i = 1; i <= n; ++i) dc[i - 1] = static_cast<double>(i) * c[i];

    double r0 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        r0 = std::max(r0, std::pow(std::abs(c[i] / c[n]), 1.0 / static_cast<double>(n - i)));
    r0 = 2.0 * r0 + 0.5;

    std::vector<std::complex<double>> z(n);
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        double ang = 2.0 * M_PI * (static_cast<double>(j) * golden + 0.25 / static_cast<double>(n));
        double rad = r0 * (0.55 + 0.4 * static_cast<double>(j + 1) / static_cast<double>(n));
        z[j] = std::polar(rad, ang) + std::complex<double>(0.0, 1e-3);
    }

    for (int it = 0; it < iterations; ++it) {
        double worst = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> pv = horner(c, z[j]);
            std::complex<double> dv = horner(dc, z[j]);
            if (dv == std::complex<double>(0.0, 0.0)) {
                z[j] += std::complex<double>(1e-4, 1e-4);
                worst = 1.0;
                continue;
            }
            std::complex<double> nj = pv / dv;
            std::complex<double> s{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) s += 1.0 / (z[j] - z[k]);
            std::complex<double> w = nj / (1.0 - nj * s);
            z[j] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[j])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

inline Rat rat_from_double(double x) {
    Rat r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

/// Real-root isolation by Sturm bisection: disjoint open-ended intervals
/// (a, b], one real root each, refined to width <= target.
inline std::vector<RatInterval> sturm_isolate(const IntPolynomial& p, const Rat& target) {
    auto chain = sturm_chain(p);
    Rat bound = Rat(2) + Rat(p.height()) / Rat(abs(p.leading()));
    std::vector<std::pair<RatInterval, int>> work;
    int total = sturm_count(chain, -bound, bound);
    if (total > 0) work.push_back({RatInterval{-bound, bound}, total});
    std::vector<RatInterval> done;
    while (!work.empty()) {
        auto [iv, cnt] = work.back();
        work.pop_back();
        if (cnt == 1 && iv.width() <= target) {
            done.push_back(iv);
            continue;
        }
        Rat mid = iv.mid();
        // keep Sturm endpoints off the roots
        for (long adj = 1009; RatPolynomial(p).eval(mid) == 0; adj += 4)
            mid = iv.lo + iv.width() * make_rat(adj, 2 * adj + 1);
        int left = sturm_count(chain, iv.lo, mid);
        int right = cnt - left;
        if (left > 0) work.push_back({RatInterval{iv.lo, mid}, left});
        if (right > 0) work.push_back({RatInterval{mid, iv.hi}, right});
    }
    return done;
}

}  // namespace detail

/// Pairwise-disjoint rectangles, one per complex root of squarefree
/// nonconstant p, each of width <= 10^-precision_digits, ordered by
/// (center real part, center imaginary part). Conjugate pairs are mirrored
/// exactly, so their real parts compare equal.
inline std::vector<Box> isolate_roots(const IntPolynomial& p, int precision_digits) {
    if (p.is_zero() || p.degree_checked() == 0)
        throw Error("root isolation requires a nonconstant polynomial");
    if (!is_squarefree(p)) throw Error("squarefree required");
    std::size_t deg = p.degree_checked();

    Int tenpow;
    mpz_ui_pow_ui(tenpow.get_mpz_t(), 10, static_cast<unsigned long>(precision_digits));
    Rat width_target = Rat(1) / Rat(tenpow);
    Rat halfwidth = width_target / 2;

    if (deg == 1) {
        Rat root = Rat(-p[0]) / Rat(p[1]);
        Rat r = halfwidth / 2;
        return {Box::around(RationalComplex(root, Rat(0)), r)};
    }

    IntPolynomial dp = p.derivative();

    for (int attempt = 0; attempt < 4; ++attempt) {
        unsigned long bits =
            static_cast<unsigned long>(precision_digits) * 4 + 96 + 64 * attempt;
        int aberth_iters = 120 * (attempt + 1);

        std::vector<Box> boxes;
        bool failed = false;

        // Real roots first, from exact Sturm bisection.
        Rat seed_width = make_rat(1, 1024);
        auto real_ivs = detail::sturm_isolate(p, seed_width);
        std::size_t n_real = real_ivs.size();
        if ((deg - n_real) % 2 != 0) throw Error("internal: real-root parity");
        std::size_t n_pairs = (deg - n_real) / 2;

        for (const auto& iv : real_ivs) {
            auto nr = detail::newton_polish(p, dp, RationalComplex(iv.mid(), Rat(0)), bits, 64);
            if (!nr.ok) {
                failed = true;
                break;
            }
            RationalComplex c(nr.center.re, Rat(0));  // keep the center exactly real
            Rat r0 = std::max(Rat(Rat(8) * nr.residual_step), Rat(halfwidth / 1024));
            Box b;
            if (!detail::certify_box(p, c, r0, halfwidth, b)) {
                failed = true;
                break;
            }
            boxes.push_back(b);
        }

        if (!failed && n_pairs > 0) {
            auto approx = detail::aberth(p, aberth_iters);
            std::vector<std::complex<double>> upper;
            for (const auto& z : approx)
                if (z.imag() > 1e-9 * (1.0 + std::abs(z))) upper.push_back(z);
            if (upper.size() != n_pairs) {
                failed = true;
            } else {
                for (const auto& z : upper) {
                    RationalComplex seed(detail::rat_from_double(z.real()),
                                         detail::rat_from_double(z.imag()));
                    auto nr = detail::newton_polish(p, dp, seed, bits, 64);
                    if (!nr.ok) {
                        failed = true;
                        break;
                    }
                    Rat r0 = std::max(Rat(Rat(8) * nr.residual_step), Rat(halfwidth / 1024));
                    Box b;
                    if (!detail::certify_box(p, nr.center, r0, halfwidth, b)) {
                        failed = true;
                        break;
                    }
                    if (b.im.lo <= 0) {  // must stay strictly in the upper half plane
                        failed = true;
                        break;
                    }
                    boxes.push_back(b);
                    boxes.push_back(b.conj());
                }
            }
        }

        if (!failed && boxes.size() == deg) {
            bool disjoint = true;
            for (std::size_t i = 0; i < boxes.size() && disjoint; ++i)
                for (std::size_t j = i + 1; j < boxes.size() && disjoint; ++j)
                    if (!boxes[i].disjoint(boxes[j])) disjoint = false;
            if (disjoint) {
                std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
                    RationalComplex ca = a.center(), cb = b.center();
                    if (ca.re != cb.re) return ca.re < cb.re;
                    return ca.im < cb.im;
                });
                return boxes;
            }
        }
    }
    throw Error("isolation failed: could not certify disjoint root rectangles");
}

/// The box among a fresh higher-precision isolation that lies inside `coarse`.
/// Because `coarse` isolates exactly one root, at most one candidate can be
/// contained in it; escalates precision until containment is reached.
inline Box refine_box(const IntPolynomial& p, const Box& coarse, int precision_digits) {
    for (int prec = precision_digits; prec <= 4 * precision_digits + 240; prec *= 2) {
        auto boxes = isolate_roots(p, prec);
        for (const Box& b : boxes)
            if (coarse.contains(b)) return b;
    }
    throw Error("isolation failed: refinement did not stabilize");
}

}  // namespace lacunary
