#include <algorithm>

#include "weiltate/error.hpp"
#include "weiltate/real.hpp"

namespace weiltate {

namespace {

constexpr unsigned guard_bits = 64;
constexpr int max_iterations = 2000;

// p(z) and p'(z) together by Horner.
std::pair<Complex, Complex> eval_with_derivative(const IntPoly& f, const Complex& z) {
    const unsigned bits = z.bits();
    Complex p(bits), dp(bits);
    for (long i = f.degree(); i >= 0; --i) {
        dp = dp * z + p;
        p = p * z;
        p.re += Real(f.coeffs()[static_cast<std::size_t>(i)], bits);
    }
    return {p, dp};
}

// Simultaneous Aberth iteration on a squarefree polynomial.
std::vector<Complex> aberth(const IntPoly& f, unsigned bits) {
    const auto n = static_cast<std::size_t>(f.degree());
    std::vector<Complex> z;
    z.reserve(n);
    if (n == 1) {
        z.emplace_back(Real(-f.coeffs()[0], bits) / Real(f.coeffs()[1], bits), Real(bits));
        return z;
    }

    // Start on a circle whose radius is the geometric mean of the root moduli,
    // rotated off the real axis so conjugate pairs separate immediately.
    Real radius(1L, bits);
    {
        const Integer& lead = f.leading();
        std::size_t low = 0;
        while (f.coeffs()[low] == 0) ++low;
        if (low < n) {
            const Real ratio = abs(Real(f.coeffs()[low], bits) / Real(lead, bits));
            Real lr = log(ratio) / static_cast<long>(n - low);
            radius = exp(lr);
        }
        if (radius.is_zero()) radius = Real(1L, bits);
    }
    const Real two_pi = pi(bits) * 2L;
    for (std::size_t k = 0; k < n; ++k) {
        const Real angle = two_pi * static_cast<long>(k) / static_cast<long>(n) + Real(0.4, bits);
        z.emplace_back(radius * cos(angle), radius * sin(angle));
    }

    const Real tol = pow2(-static_cast<long>(bits) + 16, bits);
    const Real one(1L, bits);
    for (int iter = 0; iter < max_iterations; ++iter) {
        bool converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            auto [p, dp] = eval_with_derivative(f, z[i]);
            if (p.re.is_zero() && p.im.is_zero()) continue;
            const Complex ratio = p / dp;
            Complex repulsion(bits);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                repulsion = repulsion + Complex(one, Real(bits)) / (z[i] - z[j]);
            }
            const Complex denom = Complex(one, Real(bits)) - ratio * repulsion;
            const Complex step = ratio / denom;
            z[i] = z[i] - step;
            if (abs(step) > tol * max(one, abs(z[i]))) converged = false;
        }
        if (converged) return z;
    }
    fail(ErrorKind::PrecisionInsufficient, "root iteration did not converge");
}

}  // namespace

std::vector<ComplexRoot> complex_roots(const IntPoly& f, unsigned bits) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "roots of the zero polynomial");
    const unsigned wp = bits + guard_bits;
    std::vector<ComplexRoot> out;
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        auto roots = aberth(factor, wp);
        for (auto& r : roots) {
            // One Newton polish at full working precision.
            auto [p, dp] = eval_with_derivative(factor, r);
            if (!(dp.re.is_zero() && dp.im.is_zero())) r = r - p / dp;
            out.push_back({std::move(r), mult});
        }
    }
    return out;
}

std::vector<Complex> complex_roots_flat(const IntPoly& f, unsigned bits) {
    std::vector<Complex> out;
    for (auto& root : complex_roots(f, bits))
        for (unsigned i = 0; i < root.multiplicity; ++i) out.push_back(root.value);
    return out;
}

}  // namespace weiltate
