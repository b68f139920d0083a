#pragma once

// Independent reference computations used only by the tests. Nothing here
// shares code paths with the library routines it is compared against.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "weiltate/polycore.hpp"
#include "weiltate/real.hpp"
#include "weiltate/weil.hpp"

namespace weiltate::testing {

/// det(t*Id - M) by Gaussian elimination over Q.
inline mpq_class shifted_det_rational(const IntMatrix& m, long t) {
    const std::size_t n = m.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(-m(i, j)) + (i == j ? mpq_class(t) : mpq_class(0));
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const mpq_class f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

/// Characteristic polynomial from n+1 point evaluations and Newton interpolation over Q.
inline IntPoly charpoly_by_interpolation(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<mpq_class> xs(n + 1), dd(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        xs[i] = static_cast<long>(i);
        dd[i] = shifted_det_rational(m, static_cast<long>(i));
    }
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    // Expand sum dd[i] * prod_{j<i} (T - x_j).
    std::vector<mpq_class> poly(n + 1), basis{1};
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) poly[j] += dd[i] * basis[j];
        std::vector<mpq_class> next(basis.size() + 1);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            next[j + 1] += basis[j];
            next[j] -= xs[i] * basis[j];
        }
        basis = std::move(next);
    }
    std::vector<Integer> coeffs;
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1) throw std::runtime_error("non-integral interpolated coefficient");
        coeffs.push_back(c.get_num());
    }
    return IntPoly(std::move(coeffs));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

inline IntPoly random_monic(std::mt19937_64& rng, std::size_t degree, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Integer> c(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) c[i] = dist(rng);
    c[degree] = 1;
    return IntPoly(std::move(c));
}

/// Greedy multiset matching of complex numbers; true when every element of
/// lhs pairs with a distinct element of rhs within tol (relative to max(1,|z|)).
inline bool multiset_match(std::vector<Complex> lhs, std::vector<Complex> rhs, const Real& tol) {
    if (lhs.size() != rhs.size()) return false;
    std::vector<bool> used(rhs.size());
    const Real one(1L, tol.bits());
    for (const auto& z : lhs) {
        std::size_t best = rhs.size();
        Real best_gap(tol.bits());
        for (std::size_t j = 0; j < rhs.size(); ++j) {
            if (used[j]) continue;
            Real gap = abs(z - rhs[j]);
            if (best == rhs.size() || gap < best_gap) {
                best = j;
                best_gap = gap;
            }
        }
        if (best == rhs.size() || best_gap > tol * max(one, abs(z))) return false;
        used[best] = true;
    }
    return true;
}

/// All r-fold products of distinct entries (by position) of roots.
inline std::vector<Complex> subset_products(const std::vector<Complex>& roots, std::size_t r, unsigned bits) {
    std::vector<Complex> out;
    for (const auto& s : subsets_lex(roots.size(), r)) {
        Complex prod(Real(1L, bits), Real(bits));
        for (std::size_t i : s) prod = prod * roots[i];
        out.push_back(prod);
    }
    return out;
}

/// Random Weil polynomial of dimension d <= 3 over F_q: a product of
/// elliptic factors, optionally with one genuine (non-product) quartic
/// factor drawn from the classical coefficient box and kept only if valid.
inline WeilPoly random_weil(std::mt19937_64& rng, unsigned d, const Integer& q) {
    auto elliptic = [&]() {
        const long qi = q.get_si();
        long bound = 0;
        while ((bound + 1) * (bound + 1) <= 4 * qi) ++bound;
        std::uniform_int_distribution<long> dist(-bound, bound);
        return elliptic_weil(Integer(dist(rng)), q);
    };
    std::bernoulli_distribution use_quartic(0.35);
    if (d >= 2 && use_quartic(rng)) {
        const long qi = q.get_si();
        for (int attempt = 0; attempt < 200; ++attempt) {
            long a_bound = 0;
            while ((a_bound + 1) * (a_bound + 1) <= 16 * qi) ++a_bound;
            std::uniform_int_distribution<long> da(-a_bound, a_bound);
            const long a = da(rng);
            std::uniform_int_distribution<long> db(-2 * qi, a * a / 4 + 2 * qi);
            const long b = db(rng);
            IntPoly f(std::vector<Integer>{Integer(qi) * qi, Integer(a) * qi, Integer(b), Integer(a), Integer(1)});
            try {
                WeilPoly quartic = validate_weil(f, q);
                WeilPoly w = quartic;
                for (unsigned i = 2; i < d; ++i) w = product_variety(w, elliptic());
                return w;
            } catch (const std::exception&) {
            }
        }
    }
    WeilPoly w = elliptic();
    for (unsigned i = 1; i < d; ++i) w = product_variety(w, elliptic());
    return w;
}

inline std::vector<long> prime_powers_up_to(long limit) {
    std::vector<long> out;
    for (long q = 2; q <= limit; ++q) {
        long n = q, p = 2;
        while (n % p) ++p;
        while (n % p == 0) n /= p;
        if (n == 1) out.push_back(q);
    }
    return out;
}

// Splitting of p in Q(sqrt(disc)) from the roots of the minimal polynomial of
// the ring of integers mod p: two roots split, one (double) root ramifies.
inline int splitting_by_roots(long disc, long p) {
    const auto mod = [](long a, long m) { return ((a % m) + m) % m; };
    long b, c;  // x^2 + b x + c
    if (mod(disc, 4) == 0) {
        b = 0;
        c = -disc / 4;
    } else {
        b = -1;
        c = (1 - disc) / 4;
    }
    int roots = 0;
    for (long x = 0; x < p; ++x)
        if (mod(mod(x * x, p) + b * x + c, p) == 0) ++roots;
    return roots == 2 ? 1 : roots == 1 ? 0 : -1;
}

}  // namespace weiltate::testing
