#pragma once

// Effective bounds, evaluated in natural-log space.
//
// The absolute constants c, c1 are never fixed numerically; they are plain
// parameters (default 1) and every report lists them as unnormalized.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weiltate/polycore.hpp"
#include "weiltate/real.hpp"

namespace weiltate {

enum class ExceptionalZero { No, Yes, Unknown };

std::string to_string(ExceptionalZero z);
ExceptionalZero parse_exceptional_zero(const std::string& s);

struct FieldParams {
    unsigned long n_K = 1;
    Real log_abs_disc{0L, Real::default_bits};
    ExceptionalZero exceptional = ExceptionalZero::No;

    static FieldParams rationals(unsigned bits = Real::default_bits);
    /// Builds from |d_K| directly; checks the invariants.
    static FieldParams from_abs_disc(unsigned long n_K, const Integer& abs_disc, ExceptionalZero z,
                                     unsigned bits = Real::default_bits);
    /// Throws InvalidArgument when n_K = 0, log|d_K| < 0, or n_K = 1 with log|d_K| != 0.
    void validate() const;
};

struct BoundBranch {
    std::string name;
    Real log_value;
};

struct BoundReport {
    std::string name;
    /// Echo of every input, in a fixed order, as decimal text.
    std::vector<std::pair<std::string, std::string>> inputs;
    /// Names of inputs that are unnormalized absolute constants.
    std::vector<std::string> unnormalized;
    Real log_value;
    /// ceil(exp(log_value)) when that fits in 4096 bits.
    std::optional<Integer> exact_value;
    /// Only for bounds that are a max of several terms.
    std::vector<BoundBranch> branches;
    std::string active_branch;
};

constexpr unsigned exact_value_max_bits = 4096;

Real f_of_K(const FieldParams& fp, unsigned bits = Real::default_bits);

Real hensel_log_disc(unsigned long n_L, const std::vector<Integer>& ramified_primes, unsigned bits = Real::default_bits);

Real hensel_galois_log_disc(unsigned long n_L, unsigned long n_K, const Real& log_d_K,
                            const std::vector<Integer>& ramified_primes_over_K, unsigned bits = Real::default_bits);

BoundReport least_nonsplit_bound(const FieldParams& fp, const Real& log_d_L, unsigned long n, const Real& c,
                                 unsigned bits = Real::default_bits);

BoundReport main_lemma_bound_B(const Integer& N, const FieldParams& fp, const Integer& m, const Integer& d,
                               unsigned bits = Real::default_bits);
/// Same bound with the first argument given through its logarithm, which may
/// be a non-integer stand-in.
BoundReport main_lemma_bound_B_log(const Real& log_N, const FieldParams& fp, const Integer& m, const Integer& d,
                                   unsigned bits = Real::default_bits);

BoundReport theorem1_bound_C(const Integer& N, unsigned long d, const Real& log_d_F, const FieldParams& fp,
                             const Real& c, const Real& c1, unsigned bits = Real::default_bits);

}  // namespace weiltate
