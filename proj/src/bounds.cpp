#include "weiltate/bounds.hpp"

#include <algorithm>

#include "weiltate/error.hpp"

namespace weiltate {

namespace {

std::string text(const Real& x) { return x.to_string(30); }
std::string text(const Integer& x) { return x.get_str(); }
std::string text(unsigned long x) { return std::to_string(x); }

void echo_field(BoundReport& r, const FieldParams& fp) {
    r.inputs.emplace_back("n_K", text(fp.n_K));
    r.inputs.emplace_back("log_abs_disc_K", text(fp.log_abs_disc));
    r.inputs.emplace_back("exceptional_zero", to_string(fp.exceptional));
}

Real factorial(unsigned long n, unsigned bits) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Real(f, bits);
}

Real log_factorial(unsigned long n, unsigned bits) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return log_integer(f, bits);
}

std::vector<Integer> prime_set(const std::vector<Integer>& primes) {
    std::vector<Integer> out = primes;
    for (const auto& p : out)
        if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
            fail(ErrorKind::InvalidArgument, "ramified prime set contains non-prime " + p.get_str());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Real sum_log(const std::vector<Integer>& primes, unsigned bits) {
    Real s(0L, bits);
    for (const auto& p : primes) s += log_integer(p, bits);
    return s;
}

void attach_exact(BoundReport& r, unsigned bits) {
    const Real log2 = log(Real(2L, bits));
    const Real bits_needed = r.log_value / log2;
    if (r.log_value.sign() < 0 || bits_needed > Real(static_cast<long>(exact_value_max_bits), bits)) return;
    const unsigned wp = bits + static_cast<unsigned>(bits_needed.to_double()) + 64;
    const Integer v = exp(r.log_value.with_bits(wp)).ceil_integer();
    if (mpz_sizeinbase(v.get_mpz_t(), 2) <= exact_value_max_bits) r.exact_value = v;
}

}  // namespace

std::string to_string(ExceptionalZero z) {
    switch (z) {
        case ExceptionalZero::No: return "no";
        case ExceptionalZero::Yes: return "yes";
        case ExceptionalZero::Unknown: return "unknown";
    }
    return "unknown";
}

ExceptionalZero parse_exceptional_zero(const std::string& s) {
    if (s == "no") return ExceptionalZero::No;
    if (s == "yes") return ExceptionalZero::Yes;
    if (s == "unknown") return ExceptionalZero::Unknown;
    fail(ErrorKind::Parse, "exceptional zero flag must be yes, no or unknown, got '" + s + "'");
}

FieldParams FieldParams::rationals(unsigned bits) { return {1, Real(0L, bits), ExceptionalZero::No}; }

FieldParams FieldParams::from_abs_disc(unsigned long n_K, const Integer& abs_disc, ExceptionalZero z, unsigned bits) {
    if (abs_disc < 1) fail(ErrorKind::InvalidArgument, "|d_K| must be at least 1");
    FieldParams fp{n_K, log_integer(abs_disc, bits), z};
    fp.validate();
    return fp;
}

void FieldParams::validate() const {
    if (n_K == 0) fail(ErrorKind::InvalidArgument, "n_K must be at least 1");
    if (log_abs_disc.sign() < 0) fail(ErrorKind::InvalidArgument, "log|d_K| must be nonnegative");
    if (n_K == 1 && !log_abs_disc.is_zero()) fail(ErrorKind::InvalidArgument, "n_K = 1 forces log|d_K| = 0");
}

Real f_of_K(const FieldParams& fp, unsigned bits) {
    fp.validate();
    const Real n2 = Real(static_cast<long>(fp.n_K), bits) * Real(static_cast<long>(fp.n_K), bits);
    if (fp.exceptional == ExceptionalZero::No) return n2;
    const Real L = fp.log_abs_disc.with_bits(bits);
    const Real a = factorial(fp.n_K, bits) * L;
    const Real b = exp(L / static_cast<long>(fp.n_K));
    return max(a, b) + n2;
}

Real hensel_log_disc(unsigned long n_L, const std::vector<Integer>& ramified_primes, unsigned bits) {
    if (n_L == 0) fail(ErrorKind::InvalidArgument, "n_L must be at least 1");
    const auto P = prime_set(ramified_primes);
    const Real nL(static_cast<long>(n_L), bits);
    return (nL - 1L) * sum_log(P, bits) + nL * log(nL) * static_cast<long>(P.size());
}

Real hensel_galois_log_disc(unsigned long n_L, unsigned long n_K, const Real& log_d_K,
                            const std::vector<Integer>& ramified_primes_over_K, unsigned bits) {
    if (n_L == 0 || n_K == 0) fail(ErrorKind::InvalidArgument, "degrees must be at least 1");
    if (n_L % n_K != 0)
        fail(ErrorKind::InvalidArgument, "n_K = " + std::to_string(n_K) + " does not divide n_L = " + std::to_string(n_L));
    if (log_d_K.sign() < 0) fail(ErrorKind::InvalidArgument, "log d_K must be nonnegative");
    const auto P = prime_set(ramified_primes_over_K);
    const Real nL(static_cast<long>(n_L), bits), nK(static_cast<long>(n_K), bits);
    return Real(static_cast<long>(n_L - n_K), bits) * sum_log(P, bits) + nL * (log(nL) - log(nK)) +
           Real(static_cast<long>(n_L / n_K), bits) * log_d_K.with_bits(bits);
}

BoundReport least_nonsplit_bound(const FieldParams& fp, const Real& log_d_L, unsigned long n, const Real& c,
                                 unsigned bits) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "relative degree n must be at least 2");
    if (c.sign() <= 0) fail(ErrorKind::InvalidArgument, "c must be positive");
    if (log_d_L.sign() < 0) fail(ErrorKind::InvalidArgument, "log|d_L| must be nonnegative");
    BoundReport r;
    r.name = "least_nonsplit";
    echo_field(r, fp);
    r.inputs.emplace_back("log_abs_disc_L", text(log_d_L));
    r.inputs.emplace_back("n", text(n));
    r.inputs.emplace_back("c", text(c));
    r.unnormalized = {"c"};

    const Real constant = log(Real(55L, bits));
    const Real disc = c.with_bits(bits) * f_of_K(fp, bits) +
                      Real(5L, bits) / Real(static_cast<long>(2 * (n - 1)), bits) * log_d_L.with_bits(bits);
    r.branches = {{"constant_55", constant}, {"discriminant", disc}};
    r.active_branch = disc > constant ? "discriminant" : "constant_55";
    r.log_value = max(constant, disc);
    attach_exact(r, bits);
    return r;
}

BoundReport main_lemma_bound_B_log(const Real& log_N, const FieldParams& fp, const Integer& m, const Integer& d,
                                   unsigned bits) {
    if (m < 1 || d < 1) fail(ErrorKind::InvalidArgument, "m and d must be positive");
    BoundReport r;
    r.name = "B";
    r.inputs.emplace_back("log_N", text(log_N));
    echo_field(r, fp);
    r.inputs.emplace_back("m", text(m));
    r.inputs.emplace_back("d", text(d));

    const Real f = f_of_K(fp, bits);
    const Real lN = log_N.with_bits(bits);
    const Integer k = m * Integer(fp.n_K) * d * d;
    const Real kr(k, bits);
    const Real inner = f + Real(static_cast<long>(fp.n_K), bits) * lN;
    // Clamped below at 0 so the bound stays defined for any stand-in N.
    const Real tail = inner < Real(1L, bits) ? Real(0L, bits) : log(inner);
    r.log_value = f + kr * lN + (kr + 1L) * tail;
    attach_exact(r, bits);
    return r;
}

BoundReport main_lemma_bound_B(const Integer& N, const FieldParams& fp, const Integer& m, const Integer& d,
                               unsigned bits) {
    if (N < 1) fail(ErrorKind::InvalidArgument, "conductor N must be at least 1");
    BoundReport r = main_lemma_bound_B_log(log_integer(N, bits), fp, m, d, bits);
    r.inputs.front() = {"N", text(N)};
    return r;
}

BoundReport theorem1_bound_C(const Integer& N, unsigned long d, const Real& log_d_F, const FieldParams& fp,
                             const Real& c, const Real& c1, unsigned bits) {
    if (N < 1) fail(ErrorKind::InvalidArgument, "conductor N must be at least 1");
    if (d < 1) fail(ErrorKind::InvalidArgument, "dimension d must be at least 1");
    if (log_d_F.sign() <= 0) fail(ErrorKind::InvalidArgument, "log d_F must be positive");
    if (c < Real(1L, bits) || c1 < Real(1L, bits)) fail(ErrorKind::InvalidArgument, "c and c1 must be at least 1");

    // N' = 2^(4d) (2d+1)! N log d_F, used only through its logarithm.
    const Real log_Np = Real(static_cast<long>(4 * d), bits) * log(Real(2L, bits)) + log_factorial(2 * d + 1, bits) +
                        log_integer(N, bits) + log(log_d_F.with_bits(bits));
    Integer m;
    mpz_fac_ui(m.get_mpz_t(), 2 * d);
    const Integer dd = Integer(1) << static_cast<mp_bitcnt_t>(2 * d);
    const BoundReport b = main_lemma_bound_B_log(log_Np, fp, m, dd, bits);

    BoundReport r;
    r.name = "C";
    r.inputs.emplace_back("N", text(N));
    r.inputs.emplace_back("d", text(d));
    r.inputs.emplace_back("log_d_F", text(log_d_F));
    echo_field(r, fp);
    r.inputs.emplace_back("c", text(c));
    r.inputs.emplace_back("c1", text(c1));
    r.inputs.emplace_back("log_N_prime", text(log_Np));
    r.inputs.emplace_back("log_B", text(b.log_value));
    r.unnormalized = {"c", "c1"};
    r.log_value = log(c1.with_bits(bits)) + c.with_bits(bits) * b.log_value;
    attach_exact(r, bits);
    return r;
}

}  // namespace weiltate
