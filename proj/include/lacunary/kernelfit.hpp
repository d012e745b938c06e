#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lacunary/indexsets.hpp"
#include "lacunary/intpoly.hpp"

namespace lacunary {

struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Int>> data;  // row major
    std::vector<long> row_labels;        // the forbidden index behind each row
};

struct FitResult {
    IntPolynomial Q;        // nonzero, primitive, positive leading coefficient
    long L_used = 0;        // ansatz degree
    long m = 0;             // actual degree of Q
    IntPolynomial product;  // P*Q
    std::vector<long> forbidden_checked;  // indices re-expanded and verified zero
};

/// Smallest L >= 0 with #S(L + d) > d; the counting bound under which the
/// homogeneous system is guaranteed a nontrivial kernel.
inline long minimal_ansatz(long P_degree, const IndexSet& S) {
    if (P_degree < 1) throw ConfigError("ansatz needs deg P >= 1");
    for (long L = 0; L + P_degree <= S.bound(); ++L)
        if (S.count_upto(L + P_degree) > P_degree) return L;
    throw Error("set too sparse at bound: counting condition never met within certification");
}

/// One row per forbidden index n in [0, L+d] \ S, one column per q_i;
/// entry (n, i) = coefficient of z^(n-i) in P.
inline IntegerMatrix build_constraints(const IntPolynomial& P, const IndexSet& S, long L) {
    if (P.is_zero()) throw ConfigError("constraints need nonzero P");
    long d = static_cast<long>(P.degree_checked());
    IntegerMatrix M;
    M.cols = static_cast<std::size_t>(L + 1);
    for (long n = 0; n <= L + d; ++n) {
        if (S.contains(n)) continue;
        std::vector<Int> row(M.cols, Int(0));
        for (long i = 0; i <= L; ++i)
            if (n - i >= 0 && n - i <= d) row[i] = P[static_cast<std::size_t>(n - i)];
        M.data.push_back(std::move(row));
        M.row_labels.push_back(n);
        ++M.rows;
    }
    return M;
}

namespace kernel_detail {

inline void primitivize(std::vector<Int>& v) {
    Int g(0);
    int top = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) top = static_cast<int>(i);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    if (top < 0) return;
    if (sgn(v[static_cast<std::size_t>(top)]) < 0) g = -g;
    for (Int& c : v) c /= g;
}

}  // namespace kernel_detail

/// Basis of the integer kernel lattice: Bareiss fraction-free elimination,
/// rational back-substitution per free column, denominators cleared and each
/// vector primitivized with its top nonzero entry positive.
inline std::vector<std::vector<Int>> integer_kernel(const IntegerMatrix& M) {
    if (M.cols < 1) throw ConfigError("kernel needs at least one column");
    std::size_t rows = M.rows, cols = M.cols;
    std::vector<std::vector<Int>> A = M.data;

    std::vector<std::size_t> pivot_row, pivot_col;
    Int prev(1);
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t sel = pr;
        while (sel < rows && A[sel][pc] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[pr]);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            for (std::size_t j = pc + 1; j < cols; ++j) {
                Int t = A[pr][pc] * A[i][j] - A[i][pc] * A[pr][j];
                mpz_divexact(A[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            A[i][pc] = 0;
        }
        prev = A[pr][pc];
        pivot_row.push_back(pr);
        pivot_col.push_back(pc);
        ++pr;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Int>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t k = pivot_col.size(); k-- > 0;) {
            std::size_t r = pivot_row[k], c = pivot_col[k];
            Rat s(0);
            for (std::size_t j = c + 1; j < cols; ++j)
                if (v[j] != 0) s += Rat(A[r][j]) * v[j];
            v[c] = -s / Rat(A[r][c]);
        }
        Int den(1);
        for (const Rat& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<Int> iv(cols);
        for (std::size_t j = 0; j < cols; ++j) iv[j] = Int(Rat(v[j] * Rat(den)).get_num());
        kernel_detail::primitivize(iv);
        // exactness audit: M * iv = 0
        for (std::size_t r = 0; r < rows; ++r) {
            Int acc(0);
            for (std::size_t j = 0; j < cols; ++j) acc += M.data[r][j] * iv[j];
            if (acc != 0) throw Error("internal: kernel vector fails M*v = 0");
        }
        basis.push_back(std::move(iv));
    }
    return basis;
}

/// Lemma solver: a nonzero primitive Q with support(P*Q) inside S. Selection
/// among the kernel basis is the vector of minimal L1 norm, then minimal
/// degree, then lexicographically smallest coefficients; this pins the build
/// deterministically and keeps L(Q*P) small for the gap recursions.
inline FitResult support_fit(const IntPolynomial& P, const IndexSet& S) {
    if (P.is_zero() || P.degree_checked() < 1)
        throw ConfigError("support fit needs deg P >= 1");
    long d = static_cast<long>(P.degree_checked());
    long L0 = minimal_ansatz(d, S);
    for (long L = L0; L <= L0 + 64; ++L) {
        if (L + d > S.bound())
            throw Error("set too sparse at bound: escalation crossed certification");
        IntegerMatrix M = build_constraints(P, S, L);
        std::vector<std::vector<Int>> basis;
        if (M.rows == 0) {
            std::vector<Int> e(static_cast<std::size_t>(L + 1), Int(0));
            e[0] = 1;
            basis.push_back(std::move(e));
        } else {
            basis = integer_kernel(M);
        }
        if (basis.empty()) {
            // cannot happen at the counting bound; escalate defensively
            continue;
        }
        auto norm1 = [](const std::vector<Int>& v) {
            Int s(0);
            for (const Int& c : v) s += abs(c);
            return s;
        };
        auto deg_of = [](const std::vector<Int>& v) {
            long m = -1;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) m = static_cast<long>(i);
            return m;
        };
        std::size_t best = 0;
        for (std::size_t i = 1; i < basis.size(); ++i) {
            Int ni = norm1(basis[i]), nb = norm1(basis[best]);
            if (ni != nb) {
                if (ni < nb) best = i;
                continue;
            }
            long di = deg_of(basis[i]), db = deg_of(basis[best]);
            if (di != db) {
                if (di < db) best = i;
                continue;
            }
            if (basis[i] < basis[best]) best = i;
        }
        FitResult fit;
        fit.Q = IntPolynomial(std::vector<Int>(basis[best]));
        fit.L_used = L;
        fit.m = static_cast<long>(fit.Q.degree_checked());
        fit.product = P * fit.Q;
        long pd = static_cast<long>(fit.product.degree_checked());
        for (long n = 0; n <= pd; ++n) {
            if (S.contains(n)) continue;
            if (fit.product[static_cast<std::size_t>(n)] != 0)
                throw Error("internal: forbidden coefficient survived the fit");
            fit.forbidden_checked.push_back(n);
        }
        return fit;
    }
    throw Error("support fit escalation cap exceeded; set membership at the boundary "
                "is likely mis-specified");
}

}  // namespace lacunary
