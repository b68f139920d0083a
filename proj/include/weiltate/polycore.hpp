#pragma once

// Exact integer polynomial and matrix kernel.
//
// Everything here works over Z with GMP integers; nothing is ever reduced
// to floating point. Polynomials are dense, index i holding the coefficient
// of T^i, and always kept in canonical form (no trailing zeros).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace weiltate {

using Integer = mpz_class;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t degree);
    /// T - root
    static IntPoly linear_root(const Integer& root);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    /// Coefficient of T^i, zero beyond the degree.
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    Integer evaluate(const Integer& x) const;
    /// f(s*T).
    IntPoly scale_variable(const Integer& s) const;
    /// T^deg * f(1/T).
    IntPoly reciprocal() const;
    IntPoly derivative() const;
    /// gcd of the coefficients, made positive; zero for the zero polynomial.
    Integer content() const;
    /// Divides out the content and normalizes the leading coefficient to be positive.
    IntPoly primitive_part() const;
    IntPoly pow(unsigned e) const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

struct DivRem {
    IntPoly quotient;
    IntPoly remainder;
};

/// Division over Z. Proceeds while the leading coefficient of the running
/// remainder is divisible by the leading coefficient of the divisor, so for a
/// monic divisor deg(remainder) < deg(divisor) always holds.
DivRem divrem(const IntPoly& a, const IntPoly& b);

/// Quotient a / b; throws unless b divides a exactly in Z[T].
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// gcd in Z[T], primitive with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Yun decomposition f = c * prod a_i^i; returns the nonconstant (a_i, i).
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

/// Comma separated coefficients from the constant term upward, "5,-3,1" is T^2 - 3T + 5.
IntPoly parse_poly(std::string_view text);
std::string format_poly(const IntPoly& f);
/// Human readable form, "T^2 - 3*T + 5".
std::string pretty_poly(const IntPoly& f, std::string_view var = "T");

// ---------------------------------------------------------------------------

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Integer> entries() const noexcept { return entries_; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    IntMatrix pow(const Integer& e) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

/// det(T*Id - M) by the Berkowitz algorithm; only ring operations on Z.
IntPoly charpoly(const IntMatrix& m);

/// Matrix of r x r minors, rows and columns indexed by r-subsets in
/// lexicographic order of their sorted index tuples.
IntMatrix compound_matrix(const IntMatrix& m, std::size_t r);

/// Companion matrix of a monic f: ones on the subdiagonal, -f_i in the last column.
IntMatrix companion(const IntPoly& f);

/// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t r);

Integer binomial(unsigned long n, unsigned long k);

// ---------------------------------------------------------------------------

/// Euler's totient of m >= 1.
std::uint64_t totient(std::uint64_t m);

/// Phi_m, served from the shared cache when m <= its capacity.
IntPoly cyclotomic(std::uint64_t m);

/// Largest e with Phi_m^e dividing f in Z[T].
unsigned cyclotomic_multiplicity(const IntPoly& f, std::uint64_t m);

/// Thread safe lazily filled table of cyclotomic polynomials Phi_1..Phi_capacity.
class CyclotomicCache {
public:
    static constexpr std::uint64_t default_capacity = 10000;

    explicit CyclotomicCache(std::uint64_t capacity = default_capacity);
    ~CyclotomicCache();
    CyclotomicCache(const CyclotomicCache&) = delete;
    CyclotomicCache& operator=(const CyclotomicCache&) = delete;

    std::uint64_t capacity() const noexcept { return capacity_; }
    /// Phi_m; values beyond the capacity are computed without caching.
    IntPoly get(std::uint64_t m) const;

    static CyclotomicCache& shared();

private:
    struct Slot;
    IntPoly compute(std::uint64_t m) const;

    std::uint64_t capacity_;
    std::unique_ptr<Slot[]> slots_;
};

}  // namespace weiltate
