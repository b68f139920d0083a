#pragma once

// Arbitrary precision reals and complex numbers over MPFR.
//
// Each value carries its own precision in bits; binary operations round to
// the larger precision of their operands. There is no global precision
// state, so values built on different threads never interfere.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "weiltate/polycore.hpp"

namespace weiltate {

class Real {
public:
    static constexpr unsigned default_bits = 256;

    explicit Real(unsigned bits = default_bits);
    Real(double v, unsigned bits);
    Real(long v, unsigned bits);
    Real(const Integer& v, unsigned bits);
    /// Parses a decimal string.
    Real(const std::string& decimal, unsigned bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    unsigned bits() const noexcept { return static_cast<unsigned>(mpfr_get_prec(value_)); }
    /// Copy rounded to the given precision.
    Real with_bits(unsigned bits) const;

    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr get() noexcept { return value_; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Decimal scientific form with the given significant digits.
    std::string to_string(unsigned digits = 30) const;
    /// Round toward +infinity to an integer.
    Integer ceil_integer() const;
    /// Round toward -infinity to an integer.
    Integer floor_integer() const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }

    Real operator-() const;
    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator*(const Real& a, long b);
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b);
    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

private:
    mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real log1p(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// 2^e at the given precision.
Real pow2(long e, unsigned bits);
Real pi(unsigned bits);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
/// log of a positive integer, computed without overflow.
Real log_integer(const Integer& n, unsigned bits);

struct Complex {
    Real re;
    Real im;

    explicit Complex(unsigned bits = Real::default_bits) : re(bits), im(bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    unsigned bits() const noexcept { return re.bits(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex operator-() const { return {-re, -im}; }
};

Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Complex pow(const Complex& z, const Integer& e);
/// Evaluates a polynomial with integer coefficients at z (Horner).
Complex evaluate(const IntPoly& f, const Complex& z);

struct ComplexRoot {
    Complex value;
    unsigned multiplicity;
};

/// All complex roots of a nonzero polynomial with their multiplicities,
/// accurate to roughly 2^-bits relative. Multiplicities come from an exact
/// squarefree decomposition, so only simple roots are ever iterated on.
std::vector<ComplexRoot> complex_roots(const IntPoly& f, unsigned bits);

/// Roots listed individually, each repeated by its multiplicity.
std::vector<Complex> complex_roots_flat(const IntPoly& f, unsigned bits);

}  // namespace weiltate
