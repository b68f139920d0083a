#include "weiltate/tate.hpp"

#include <algorithm>
#include <functional>

#include "weiltate/arith.hpp"
#include "weiltate/error.hpp"
#include "weiltate/real.hpp"

namespace weiltate {

namespace {

void require_codimension(const WeilPoly& w, unsigned k) {
    if (k > w.d())
        fail(ErrorKind::OutOfRange, "codimension " + std::to_string(k) + " outside 0.." + std::to_string(w.d()));
}

std::uint64_t class_space_rank(unsigned d, unsigned k) {
    const Integer b = binomial(2ul * d, 2ul * k);
    if (!b.fits_ulong_p()) fail(ErrorKind::BudgetExceeded, "C(2d, 2k) does not fit in 64 bits");
    return b.get_ui();
}

}  // namespace

std::vector<std::uint64_t> totient_bounded(std::uint64_t bound) {
    // phi is multiplicative and phi(p^e) = p^(e-1)(p-1) >= p-1, so every prime
    // factor of such m has p - 1 <= bound. Walk the factorizations directly.
    std::vector<std::uint64_t> out;
    if (bound == 0) return out;
    if (bound > (1ull << 31)) fail(ErrorKind::BudgetExceeded, "totient bound too large to enumerate");
    const auto primes = primes_up_to(static_cast<std::uint32_t>(bound + 1));
    std::function<void(std::size_t, std::uint64_t, std::uint64_t)> walk =
        [&](std::size_t from, std::uint64_t m, std::uint64_t phi) {
            out.push_back(m);
            for (std::size_t i = from; i < primes.size(); ++i) {
                const std::uint64_t p = primes[i];
                std::uint64_t pm = m * p;
                std::uint64_t pphi = phi * (p - 1);
                if (pphi > bound) break;
                while (pphi <= bound) {
                    walk(i + 1, pm, pphi);
                    pm *= p;
                    pphi *= p;
                }
            }
        };
    walk(0, 1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

Integer degree_bound(unsigned d, unsigned k) {
    if (k > d) fail(ErrorKind::OutOfRange, "codimension " + std::to_string(k) + " outside 0.." + std::to_string(d));
    Integer l = 1;
    for (std::uint64_t m : totient_bounded(class_space_rank(d, k)))
        mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), m);
    return l;
}

unsigned CyclotomicSpectrum::count_dividing(const Integer& n) const {
    unsigned total = 0;
    for (const auto& [m, e] : multiplicity)
        if (mpz_divisible_ui_p(n.get_mpz_t(), m)) total += e * totient(m);
    return total;
}

unsigned CyclotomicSpectrum::total() const {
    unsigned t = 0;
    for (const auto& [m, e] : multiplicity) t += e * totient(m);
    return t;
}

Integer CyclotomicSpectrum::lcm() const {
    Integer l = 1;
    for (const auto& [m, e] : multiplicity) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), m);
    return l;
}

IntPoly rescaled_class_poly(const WeilPoly& w, unsigned k) {
    require_codimension(w, k);
    Integer qk;
    mpz_pow_ui(qk.get_mpz_t(), w.q().get_mpz_t(), k);
    return h_charpoly(w, 2 * k).poly.scale_variable(qk);
}

CyclotomicSpectrum cyclotomic_spectrum(const WeilPoly& w, unsigned k) {
    const IntPoly r = rescaled_class_poly(w, k);
    CyclotomicSpectrum spec;
    spec.k = k;
    spec.degree = static_cast<unsigned long>(r.degree());
    for (std::uint64_t m : totient_bounded(spec.degree)) {
        const unsigned e = cyclotomic_multiplicity(r, m);
        if (e) spec.multiplicity.emplace(m, e);
    }
    return spec;
}

unsigned tate_dim(const WeilPoly& w, unsigned k, const Integer& n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "extension degree must be positive");
    return cyclotomic_spectrum(w, k).count_dividing(n);
}

StableTate stable_tate_dim(const WeilPoly& w, unsigned k) {
    const auto spec = cyclotomic_spectrum(w, k);
    return {spec.total(), spec.lcm()};
}

unsigned long default_n_report(unsigned d) {
    Integer largest = 1;
    for (unsigned k = 0; k <= d; ++k) largest = std::max(largest, degree_bound(d, k));
    return largest > default_report_cap ? default_report_cap : largest.get_ui();
}

TateProfile tate_profile(const WeilPoly& w, std::optional<unsigned long> n_report) {
    const unsigned long n_max = n_report.value_or(default_n_report(w.d()));
    if (n_max < 1) fail(ErrorKind::InvalidArgument, "n_report must be at least 1");
    TateProfile profile{w.q(), w.d(), n_max, {}};
    for (unsigned k = 0; k <= w.d(); ++k) {
        const auto spec = cyclotomic_spectrum(w, k);
        TateRow row;
        row.k = k;
        row.dims.reserve(n_max);
        for (unsigned long n = 1; n <= n_max; ++n) row.dims.emplace_back(n, spec.count_dividing(Integer(n)));
        row.stable_dim = spec.total();
        row.min_stable_degree = spec.lcm();
        row.degree_bound = degree_bound(w.d(), k);
        profile.rows.push_back(std::move(row));
    }
    return profile;
}

unsigned tate_dim_numeric(const WeilPoly& w, unsigned k, unsigned long n, unsigned precision_bits) {
    require_codimension(w, k);
    if (n == 0) fail(ErrorKind::InvalidArgument, "extension degree must be positive");
    if (2 * w.d() > 16) fail(ErrorKind::BudgetExceeded, "subset enumeration limited to 2d <= 16");
    const unsigned bits = precision_bits + 64;
    const auto roots = complex_roots_flat(w.poly(), precision_bits);
    Integer qk;
    mpz_pow_ui(qk.get_mpz_t(), w.q().get_mpz_t(), k);
    const Real scale(qk, bits);
    const Real threshold = pow2(-static_cast<long>(precision_bits / 2), bits);
    const Real band = pow2(static_cast<long>(precision_bits / 4), bits);
    const Real one(1L, bits);

    unsigned count = 0;
    for (const auto& subset : subsets_lex(roots.size(), 2 * k)) {
        Complex prod(one, Real(bits));
        for (std::size_t i : subset) prod = prod * roots[i];
        // alpha_I^n = q^(kn) iff (alpha_I / q^k)^n = 1.
        const Complex ratio{prod.re / scale, prod.im / scale};
        const Complex power = pow(ratio, Integer(n));
        const Real gap = abs(Complex{power.re - one, power.im});
        if (gap > threshold / band && gap < threshold * band)
            fail(ErrorKind::PrecisionInsufficient, "ambiguous eigenvalue product at " + std::to_string(precision_bits) +
                                                       " bits: |alpha_I^n / q^(kn) - 1| = " + gap.to_string(6));
        if (gap < threshold) ++count;
    }
    return count;
}

}  // namespace weiltate
