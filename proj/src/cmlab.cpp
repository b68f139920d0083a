#include "weiltate/cmlab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "weiltate/arith.hpp"
#include "weiltate/error.hpp"
#include "weiltate/tate.hpp"
#include "weiltate/weil.hpp"

namespace weiltate {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

u64 reduce(long a, u64 p) {
    const long r = a % static_cast<long>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<long>(p) : r);
}

void require_prime(u64 p) {
    if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

// Square root of a quadratic residue a mod an odd prime p.
u64 sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    u64 q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, t2 = t;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        const u64 b = powmod(c, u64{1} << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::optional<u64> exact_sqrt(u64 n) {
    const u64 r = isqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

// x^2 + |D| y^2 = 4p for odd p, D < 0, D = 0 or 1 mod 4.
std::optional<std::pair<u64, u64>> cornacchia4(long D, u64 p) {
    const u64 absD = static_cast<u64>(-D);
    const u64 fourp = 4 * p;
    if (absD > fourp) return std::nullopt;
    u64 x0 = sqrt_mod(reduce(D, p), p);
    if ((x0 & 1) != (absD & 1)) x0 = p - x0;
    u64 a = 2 * p, b = x0;
    const u64 l = isqrt(fourp);
    while (b > l) {
        const u64 r = a % b;
        a = b;
        b = r;
    }
    const u64 rest = fourp - b * b;
    if (rest % absD != 0) return std::nullopt;
    const auto y = exact_sqrt(rest / absD);
    if (!y) return std::nullopt;
    return std::pair{b, *y};
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
    if (threads == 0) threads = default_thread_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

void fill_ranks(SurveyRow& row, long trace) {
    const WeilPoly e = elliptic_weil(Integer(trace), Integer(static_cast<unsigned long>(row.p)));
    const CyclotomicSpectrum spec = cyclotomic_spectrum(product_variety(e, e), 1);
    row.rank_base = spec.count_dividing(Integer(1));
    row.rank_stable = spec.total();
    row.stable_degree = spec.lcm();
}

DensityClass density_class(std::string name, u64 count, u64 total, std::optional<double> reference) {
    const double fraction = total ? static_cast<double>(count) / static_cast<double>(total) : 0.0;
    return {std::move(name), count, fraction, reference};
}

std::uint32_t checked_limit(u64 x) {
    if (x > 0xffffffffull) fail(ErrorKind::BudgetExceeded, "prime limit beyond 32 bits");
    return static_cast<std::uint32_t>(x);
}

}  // namespace

Integer EllipticCurve::discriminant() const {
    const Integer A1 = a1, A2 = a2, A3 = a3, A4 = a4, A6 = a6;
    const Integer b2 = A1 * A1 + 4 * A2;
    const Integer b4 = 2 * A4 + A1 * A3;
    const Integer b6 = A3 * A3 + 4 * A6;
    const Integer b8 = A1 * A1 * A6 + 4 * A2 * A6 - A1 * A3 * A4 + A2 * A3 * A3 - A4 * A4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

void EllipticCurve::validate() const {
    if (discriminant() == 0) fail(ErrorKind::InvalidArgument, "singular Weierstrass model (discriminant 0)");
}

EllipticCurve parse_curve(const std::string& text, std::string label) {
    const IntPoly coeffs = parse_poly(text);
    // parse_poly trims trailing zeros, so count the fields directly.
    if (std::count(text.begin(), text.end(), ',') != 4)
        fail(ErrorKind::Parse, "curve must be given as a1,a2,a3,a4,a6");
    long a[5];
    for (int i = 0; i < 5; ++i) {
        const Integer& c = coeffs.coeff(static_cast<std::size_t>(i));
        if (!c.fits_slong_p()) fail(ErrorKind::Parse, "curve coefficient out of range");
        a[i] = c.get_si();
    }
    EllipticCurve E{a[0], a[1], a[2], a[3], a[4], std::move(label)};
    E.validate();
    return E;
}

std::string to_string(Reduction r) {
    switch (r) {
        case Reduction::Ordinary: return "ordinary";
        case Reduction::Supersingular: return "supersingular";
        case Reduction::Bad: return "bad";
    }
    return "bad";
}

long field_discriminant(long D) {
    if (D == 0) fail(ErrorKind::InvalidArgument, "D must be nonzero");
    u64 n = static_cast<u64>(D < 0 ? -D : D);
    u64 core = 1;
    for (u64 f = 2; f * f <= n; ++f) {
        unsigned e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        if (e % 2) core *= f;
    }
    core *= n;
    const long d0 = D < 0 ? -static_cast<long>(core) : static_cast<long>(core);
    return ((d0 % 4) + 4) % 4 == 1 ? d0 : 4 * d0;
}

bool is_fundamental_discriminant(long D) { return D != 0 && D != 1 && field_discriminant(D) == D; }

std::vector<long> fundamental_discriminants(long limit) {
    std::vector<long> out;
    for (long a = 1; a <= limit; ++a)
        for (long D : {-a, a})
            if (is_fundamental_discriminant(D)) out.push_back(D);
    return out;
}

int kronecker(long D, u64 p) {
    require_prime(p);
    const Integer disc(field_discriminant(D));
    return mpz_kronecker_ui(disc.get_mpz_t(), p);
}

std::optional<long> ap_pointcount(const EllipticCurve& E, u64 p, u64 budget) {
    require_prime(p);
    if (p > budget) fail(ErrorKind::BudgetExceeded, "point count at p = " + std::to_string(p) + " over budget " +
                                                        std::to_string(budget));
    if (mpz_divisible_ui_p(E.discriminant().get_mpz_t(), p)) return std::nullopt;
    if (p == 2) {
        long points = 1;
        for (long x = 0; x < 2; ++x)
            for (long y = 0; y < 2; ++y) {
                const long lhs = y * y + E.a1 * x * y + E.a3 * y;
                const long rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
                if (((lhs - rhs) % 2 + 2) % 2 == 0) ++points;
            }
        return 3 - points;
    }
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    const u64 b2 = reduce((E.a1 % static_cast<long>(p)) * (E.a1 % static_cast<long>(p)) + 4 * (E.a2 % static_cast<long>(p)), p);
    const u64 b4 = reduce(2 * (E.a4 % static_cast<long>(p)) + (E.a1 % static_cast<long>(p)) * (E.a3 % static_cast<long>(p)), p);
    const u64 b6 = reduce((E.a3 % static_cast<long>(p)) * (E.a3 % static_cast<long>(p)) + 4 * (E.a6 % static_cast<long>(p)), p);
    std::vector<signed char> chi(p, -1);
    chi[0] = 0;
    for (u64 i = 1; i <= p / 2; ++i) chi[i * i % p] = 1;
    long sum = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 g = (4 * x + b2) % p;
        g = (g * x + 2 * b4) % p;
        g = (g * x + b6) % p;
        sum += chi[g];
    }
    return -sum;
}

const std::vector<long>& supported_cm_discriminants() {
    static const std::vector<long> ds{-3, -4, -7, -8, -11, -19, -43, -67, -163};
    return ds;
}

CmTrace ap_cm(long D, u64 p) {
    const auto& ds = supported_cm_discriminants();
    if (std::find(ds.begin(), ds.end(), D) == ds.end())
        fail(ErrorKind::UnsupportedDiscriminant, "D = " + std::to_string(D) + " is not a class number one discriminant");
    require_prime(p);
    if (p == 2 || static_cast<u64>(-D) % p == 0)
        fail(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " divides 2D");
    if (kronecker(D, p) == -1) return {Reduction::Supersingular, 0};
    const auto rep = cornacchia4(D, p);
    if (!rep) fail(ErrorKind::Internal, "no representation 4p = x^2 + |D| y^2 for split p = " + std::to_string(p));
    const long x = static_cast<long>(rep->first), y = static_cast<long>(rep->second);
    long trace = x;
    if (D == -4) {
        // 4p = x^2 + 4y^2 also reads (2y)^2 + 4(x/2)^2; y^2 = x^3 + x has x/2 odd.
        if ((x / 2) % 2 == 0) trace = 2 * y;
    } else if (D == -3) {
        // Sextic twists give traces x, (x + 3y)/2, (x - 3y)/2 up to sign; y^2 = x^3 + 1 has 6 | #E.
        for (long t : {x, std::labs(x + 3 * y) / 2, std::labs(x - 3 * y) / 2})
            if (t % 2 == 0) trace = t;
    }
    return {Reduction::Ordinary, trace, x, y};
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("WEILTATE_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Survey exe_survey(long D, u64 p_max, unsigned threads) {
    const auto& ds = supported_cm_discriminants();
    if (std::find(ds.begin(), ds.end(), D) == ds.end())
        fail(ErrorKind::UnsupportedDiscriminant, "D = " + std::to_string(D) + " is not a class number one discriminant");
    if (p_max > survey_budget)
        fail(ErrorKind::BudgetExceeded, "survey limit " + std::to_string(p_max) + " over budget " + std::to_string(survey_budget));
    const auto primes = primes_up_to(checked_limit(p_max));
    Survey s;
    s.D = D;
    s.rows.resize(primes.size());
    parallel_for(primes.size(), threads, [&](std::size_t i) {
        SurveyRow& row = s.rows[i];
        row.p = primes[i];
        row.kronecker = kronecker(D, row.p);
        if (row.p <= 3 || static_cast<u64>(-D) % row.p == 0) return;
        const CmTrace t = ap_cm(D, row.p);
        row.reduction = t.reduction;
        row.a_p = t.abs_a_p;
        fill_ranks(row, t.abs_a_p);
    });

    DensityReport& d = s.density;
    d.p_max = p_max;
    u64 split = 0, inert = 0, r4 = 0, r6 = 0;
    for (const auto& row : s.rows) {
        if (row.reduction == Reduction::Bad) {
            ++d.excluded_primes;
            continue;
        }
        ++d.good_primes;
        (*row.kronecker == 1 ? split : inert)++;
        if (*row.rank_stable == 4) ++r4;
        if (*row.rank_stable == 6) ++r6;
    }
    d.splitting = {density_class("split", split, d.good_primes, 0.5), density_class("inert", inert, d.good_primes, 0.5)};
    d.ranks = {density_class("rank_stable_4", r4, d.good_primes, 0.5),
               density_class("rank_stable_6", r6, d.good_primes, 0.5)};
    d.note = "fractions over good rational primes p >= 5 with p not dividing D; over primes of the CM field the "
             "rank 6 set has density 0";
    return s;
}

NonCmReport noncm_rank_check(const EllipticCurve& E, u64 p_max, unsigned threads) {
    E.validate();
    if (p_max > noncm_budget)
        fail(ErrorKind::BudgetExceeded, "non-CM check limit " + std::to_string(p_max) + " over budget " + std::to_string(noncm_budget));
    const auto primes = primes_up_to(checked_limit(p_max));
    NonCmReport rep;
    rep.curve = E;
    rep.p_max = p_max;
    rep.rows.resize(primes.size());
    parallel_for(primes.size(), threads, [&](std::size_t i) {
        SurveyRow& row = rep.rows[i];
        row.p = primes[i];
        const auto a = ap_pointcount(E, row.p, noncm_budget);
        if (!a) return;
        row.a_p = *a;
        row.reduction = *a % static_cast<long>(row.p) == 0 ? Reduction::Supersingular : Reduction::Ordinary;
        fill_ranks(row, *a);
    });
    for (const auto& row : rep.rows) {
        if (row.reduction == Reduction::Bad) continue;
        ++rep.good_primes;
        if (*row.rank_base != 4) rep.all_base_rank_4 = false;
        if (*row.rank_stable > 4) rep.exceptional_primes.push_back(row.p);
    }
    return rep;
}

NonsplitResult least_nonsplit_search(long D, const FieldParams& base, const Real& c) {
    if (!is_fundamental_discriminant(D)) fail(ErrorKind::InvalidArgument, std::to_string(D) + " is not a fundamental discriminant");
    base.validate();
    if (base.n_K != 1) fail(ErrorKind::InvalidArgument, "least_nonsplit_search needs the rationals as base field");
    NonsplitResult r;
    r.D = D;
    for (u64 p = 2;; ++p) {
        if (!is_prime(p)) continue;
        if (kronecker(D, p) == -1) {
            r.found_prime = p;
            break;
        }
    }
    const unsigned bits = std::max(base.log_abs_disc.bits(), c.bits());
    r.bound = least_nonsplit_bound(base, log_integer(Integer(std::labs(D)), bits), 2, c, bits);
    r.satisfied = log_integer(Integer(static_cast<unsigned long>(r.found_prime)), bits) <= r.bound.log_value;
    return r;
}

PiKCount pi_K_count(long D, u64 x) {
    if (!is_fundamental_discriminant(D)) fail(ErrorKind::InvalidArgument, std::to_string(D) + " is not a fundamental discriminant");
    if (x > pi_K_budget) fail(ErrorKind::BudgetExceeded, "pi_K limit " + std::to_string(x) + " over budget " + std::to_string(pi_K_budget));
    PiKCount r;
    r.D = D;
    r.x = x;
    const Integer disc(D);
    for (std::uint32_t p : primes_up_to(checked_limit(x))) {
        const int k = mpz_kronecker_ui(disc.get_mpz_t(), p);
        if (k == 1) r.count += 2;
        else if (k == 0) r.count += 1;
        else if (static_cast<u64>(p) * p <= x) r.count += 1;
    }
    if (x >= 2) {
        const unsigned bits = 128;
        Real li_x(bits), li_2(bits);
        mpfr_eint(li_x.get(), log(Real(Integer(static_cast<unsigned long>(x)), bits)).get(), MPFR_RNDN);
        mpfr_eint(li_2.get(), log(Real(2L, bits)).get(), MPFR_RNDN);
        r.li_x = (li_x - li_2).to_double();
        if (r.li_x > 0) r.ratio = static_cast<double>(r.count) / r.li_x;
    }
    return r;
}

}  // namespace weiltate
