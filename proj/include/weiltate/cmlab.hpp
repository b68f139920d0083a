#pragma once

// Experiments over rational primes: CM and non-CM surveys of E x E,
// least non-split primes and prime ideal counts in quadratic fields.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weiltate/bounds.hpp"
#include "weiltate/polycore.hpp"

namespace weiltate {

struct EllipticCurve {
    long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    std::string label;

    Integer discriminant() const;
    /// Throws InvalidArgument on a singular model.
    void validate() const;
};

/// "a1,a2,a3,a4,a6"
EllipticCurve parse_curve(const std::string& text, std::string label = {});

enum class Reduction { Ordinary, Supersingular, Bad };
std::string to_string(Reduction r);

struct SurveyRow {
    std::uint64_t p = 0;
    /// Absent for surveys without a CM field.
    std::optional<int> kronecker;
    /// Trace for point counts; |trace| for CM surveys. Absent at bad primes.
    std::optional<long> a_p;
    Reduction reduction = Reduction::Bad;
    std::optional<unsigned> rank_base;
    std::optional<unsigned> rank_stable;
    std::optional<Integer> stable_degree;
};

struct DensityClass {
    std::string name;
    std::uint64_t count = 0;
    double fraction = 0;
    std::optional<double> reference;
};

struct DensityReport {
    std::uint64_t p_max = 0;
    std::uint64_t good_primes = 0;
    std::uint64_t excluded_primes = 0;
    /// split / inert over good primes.
    std::vector<DensityClass> splitting;
    /// rank_stable_4 / rank_stable_6 over good primes.
    std::vector<DensityClass> ranks;
    std::string note;
};

struct Survey {
    long D = 0;
    std::vector<SurveyRow> rows;
    DensityReport density;
};

constexpr std::uint64_t pointcount_budget = 1'000'000;
constexpr std::uint64_t survey_budget = 10'000'000;
constexpr std::uint64_t noncm_budget = 10'000;
constexpr std::uint64_t pi_K_budget = 100'000'000;

/// Discriminant of Q(sqrt(D)).
long field_discriminant(long D);
bool is_fundamental_discriminant(long D);
/// Fundamental discriminants with 0 < |D| <= limit, ordered by |D| then sign.
std::vector<long> fundamental_discriminants(long limit);

int kronecker(long D, std::uint64_t p);

/// nullopt at primes of bad reduction of the given model.
std::optional<long> ap_pointcount(const EllipticCurve& E, std::uint64_t p, std::uint64_t budget = pointcount_budget);

const std::vector<long>& supported_cm_discriminants();

struct CmTrace {
    Reduction reduction;
    long abs_a_p;
    /// The representation 4p = x^2 + |D| y^2; zero when inert.
    long x = 0, y = 0;
};

/// For D = -4 and -3 the chosen x matches y^2 = x^3 + x and y^2 = x^3 + 1.
CmTrace ap_cm(long D, std::uint64_t p);

/// 0 lets the implementation choose; WEILTATE_THREADS overrides the default.
unsigned default_thread_count();

Survey exe_survey(long D, std::uint64_t p_max, unsigned threads = 0);

struct NonCmReport {
    EllipticCurve curve;
    std::uint64_t p_max = 0;
    std::vector<SurveyRow> rows;
    std::uint64_t good_primes = 0;
    bool all_base_rank_4 = true;
    /// Good primes with rank_stable > 4.
    std::vector<std::uint64_t> exceptional_primes;
};

NonCmReport noncm_rank_check(const EllipticCurve& E, std::uint64_t p_max, unsigned threads = 0);

struct NonsplitResult {
    long D = 0;
    std::uint64_t found_prime = 0;
    BoundReport bound;
    bool satisfied = false;
};

NonsplitResult least_nonsplit_search(long D, const FieldParams& base, const Real& c);

struct PiKCount {
    long D = 0;
    std::uint64_t x = 0;
    std::uint64_t count = 0;
    /// li(x) - li(2); zero for x < 2.
    double li_x = 0;
    /// Absent when li_x is zero.
    std::optional<double> ratio;
};

PiKCount pi_K_count(long D, std::uint64_t x);

}  // namespace weiltate
