#include "weiltate/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "weiltate/error.hpp"

namespace weiltate {

namespace {

unsigned max_bits(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

Real::Real(unsigned bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

Real::Real(double v, unsigned bits) {
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(long v, unsigned bits) {
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(const Integer& v, unsigned bits) {
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, unsigned bits) {
    mpfr_init2(value_, bits);
    if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(value_);
        fail(ErrorKind::Parse, "invalid real number '" + decimal + "'");
    }
}

Real::Real(const Real& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    // Steal by swapping with a minimal placeholder; the moved-from value stays valid.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_bits(unsigned bits) const {
    Real r(bits);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(unsigned digits) const {
    if (mpfr_nan_p(value_)) return "nan";
    if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
    char* raw = nullptr;
    const std::string fmt = "%." + std::to_string(digits > 0 ? digits - 1 : 0) + "Re";
    if (mpfr_asprintf(&raw, fmt.c_str(), value_) < 0) fail(ErrorKind::Internal, "mpfr formatting failed");
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

Integer Real::ceil_integer() const {
    if (!is_finite()) fail(ErrorKind::InvalidArgument, "ceiling of a non-finite value");
    Integer out;
    mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDU);
    return out;
}

Integer Real::floor_integer() const {
    if (!is_finite()) fail(ErrorKind::InvalidArgument, "floor of a non-finite value");
    Integer out;
    mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDD);
    return out;
}

Real Real::operator-() const {
    Real r(bits());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
    Real r(max_bits(a, b));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(max_bits(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(max_bits(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(max_bits(a, b));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, long b) {
    Real r(a.bits());
    mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b) {
    Real r(a.bits());
    mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, long b) {
    Real r(a.bits());
    mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, long b) {
    Real r(a.bits());
    mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
}

#define WEILTATE_UNARY(name, call)                  \
    Real name(const Real& x) {                      \
        Real r(x.bits());                           \
        call(r.get(), x.get(), MPFR_RNDN);          \
        return r;                                   \
    }

WEILTATE_UNARY(abs, mpfr_abs)
WEILTATE_UNARY(sqrt, mpfr_sqrt)
WEILTATE_UNARY(log, mpfr_log)
WEILTATE_UNARY(exp, mpfr_exp)
WEILTATE_UNARY(log1p, mpfr_log1p)
WEILTATE_UNARY(cos, mpfr_cos)
WEILTATE_UNARY(sin, mpfr_sin)

#undef WEILTATE_UNARY

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pow2(long e, unsigned bits) {
    Real r(bits);
    mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
    return r;
}

Real pi(unsigned bits) {
    Real r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(max_bits(y, x));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real log_integer(const Integer& n, unsigned bits) {
    if (n <= 0) fail(ErrorKind::InvalidArgument, "log of a nonpositive integer");
    // Exact conversion first; mpfr_set_z would round a huge n before the log.
    const auto size = mpz_sizeinbase(n.get_mpz_t(), 2);
    Real x(static_cast<unsigned>(std::max<std::size_t>(size, bits) + 8));
    mpfr_set_z(x.get(), n.get_mpz_t(), MPFR_RNDN);
    return log(x).with_bits(bits);
}

// ---------------------------------------------------------------------------

Complex operator/(const Complex& a, const Complex& b) {
    const Real den = b.re * b.re + b.im * b.im;
    if (den.is_zero()) fail(ErrorKind::DivisionByZero, "complex division by zero");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) {
    Real r(z.bits());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}

Complex pow(const Complex& z, const Integer& e) {
    if (e < 0) return Complex(Real(1L, z.bits()), Real(z.bits())) / pow(z, -e);
    Complex result(Real(1L, z.bits()), Real(z.bits()));
    Complex base = z;
    const auto nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
        if (i + 1 < nbits) base = base * base;
    }
    return result;
}

Complex evaluate(const IntPoly& f, const Complex& z) {
    const unsigned bits = z.bits();
    Complex acc(bits);
    for (long i = f.degree(); i >= 0; --i) {
        acc = acc * z;
        acc.re += Real(f.coeffs()[static_cast<std::size_t>(i)], bits);
    }
    return acc;
}

}  // namespace weiltate
