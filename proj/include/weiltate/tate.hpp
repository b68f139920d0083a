#pragma once

// Dimensions of Tate-class spaces of an abelian variety over F_q and its
// finite extensions.
//
// In codimension k the Frobenius eigenvalues on H^2k are the products
// alpha_I over 2k-subsets I of the H^1 roots. A class is Tate over F_{q^n}
// exactly when alpha_I^n = q^(kn), i.e. when alpha_I / q^k is an n-th root
// of unity. The roots of R(T) = Q_2k(q^k T) are those ratios, so counting
// Tate classes is counting cyclotomic factors of R with multiplicity.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weiltate/polycore.hpp"
#include "weiltate/weil.hpp"

namespace weiltate {

/// All m >= 1 with phi(m) <= bound, ascending.
std::vector<std::uint64_t> totient_bounded(std::uint64_t bound);

/// lcm{ m : phi(m) <= C(2d, 2k) }: every Tate class in codimension k of any
/// d-dimensional abelian variety is defined over the extension of this degree.
Integer degree_bound(unsigned d, unsigned k);

/// Multiplicity of each primitive m-th root of unity among the ratios
/// alpha_I / q^k, for every m that can occur.
struct CyclotomicSpectrum {
    unsigned k = 0;
    /// Degree of R, i.e. C(2d, 2k).
    unsigned long degree = 0;
    /// Only nonzero multiplicities are stored.
    std::map<std::uint64_t, unsigned> multiplicity;

    /// Number of ratios that are n-th roots of unity: sum over m | n of phi(m) times the multiplicity.
    unsigned count_dividing(const Integer& n) const;
    unsigned total() const;
    /// lcm of the m that occur; 1 when none beyond m = 1 do.
    Integer lcm() const;
};

/// Q_2k(q^k T), whose roots are alpha_I / q^k.
IntPoly rescaled_class_poly(const WeilPoly& w, unsigned k);

CyclotomicSpectrum cyclotomic_spectrum(const WeilPoly& w, unsigned k);

/// dim T^k over F_{q^n}, counted with multiplicity.
unsigned tate_dim(const WeilPoly& w, unsigned k, const Integer& n);
inline unsigned tate_dim(const WeilPoly& w, unsigned k, unsigned long n) { return tate_dim(w, k, Integer(n)); }

struct StableTate {
    unsigned stable_dim = 0;
    /// Least n with tate_dim(w, k, n) = stable_dim.
    Integer min_stable_degree;
};

StableTate stable_tate_dim(const WeilPoly& w, unsigned k);

struct TateRow {
    unsigned k = 0;
    std::vector<std::pair<unsigned long, unsigned>> dims;  // (n, dim) for n = 1..n_report
    unsigned stable_dim = 0;
    Integer min_stable_degree;
    Integer degree_bound;
};

struct TateProfile {
    Integer q;
    unsigned d = 0;
    unsigned long n_report = 0;
    std::vector<TateRow> rows;  // k = 0..d
};

constexpr unsigned long default_report_cap = 60;

/// n_report defaults to the largest degree bound over k, capped at 60.
unsigned long default_n_report(unsigned d);

TateProfile tate_profile(const WeilPoly& w, std::optional<unsigned long> n_report = std::nullopt);

/// Brute-force count of 2k-subsets with |alpha_I^n - q^(kn)| < 2^(-bits/2) q^(kn),
/// from numerically computed roots. Throws PrecisionInsufficient if some
/// product lands within a factor 2^(bits/4) of the threshold.
unsigned tate_dim_numeric(const WeilPoly& w, unsigned k, unsigned long n, unsigned precision_bits = 200);

}  // namespace weiltate
