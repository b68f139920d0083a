#include <doctest.h>

#include <numeric>
#include <random>

#include "support/oracles.hpp"
#include "weiltate/error.hpp"
#include "weiltate/tate.hpp"

using namespace weiltate;

namespace {

WeilPoly supersingular_square() { return validate_weil(IntPoly{25, 0, 10, 0, 1}, 5); }

// phi enumerated naively up to a generous cutoff, independent of the factor walk.
std::vector<std::uint64_t> naive_totient_bounded(std::uint64_t bound, std::uint64_t cutoff) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m <= cutoff; ++m) {
        std::uint64_t phi = 0;
        for (std::uint64_t i = 1; i <= m; ++i)
            if (std::gcd(i, m) == 1) ++phi;
        if (phi <= bound) out.push_back(m);
    }
    return out;
}

}  // namespace

TEST_CASE("totient-bounded enumeration") {
    CHECK(totient_bounded(1) == std::vector<std::uint64_t>{1, 2});
    CHECK(totient_bounded(2) == std::vector<std::uint64_t>{1, 2, 3, 4, 6});
    CHECK(totient_bounded(6) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18});
    // phi(m) >= sqrt(m/2), so m <= 2 B^2 covers everything.
    for (std::uint64_t b : {3u, 4u, 8u, 15u, 20u})
        CHECK(totient_bounded(b) == naive_totient_bounded(b, 2 * b * b));
}

TEST_CASE("degree_bound") {
    CHECK(degree_bound(1, 1) == 2);
    CHECK(degree_bound(1, 0) == 2);
    CHECK(degree_bound(2, 1) == 2520);
    CHECK(degree_bound(2, 2) == 2);
    // C(6,2) = 15: 16 * 9 * 5 * 7 * 11 * 13
    CHECK(degree_bound(3, 1) == 720720);
    CHECK(degree_bound(3, 2) == degree_bound(3, 1));
    CHECK(degree_bound(4, 2) > Integer(1) << 64);
    CHECK_THROWS_AS(degree_bound(1, 2), Error);
}

TEST_CASE("tate_dim on the supersingular square") {
    const WeilPoly w = supersingular_square();
    CHECK(tate_dim(w, 1, 1ul) == 4);
    CHECK(tate_dim(w, 1, 2ul) == 6);
    CHECK(tate_dim(w, 1, 3ul) == 4);
    CHECK(tate_dim(w, 0, 1ul) == 1);
    CHECK(tate_dim(w, 2, 1ul) == 1);
    CHECK_THROWS_AS(tate_dim(w, 3, 1ul), Error);
    CHECK_THROWS_AS(tate_dim(w, 1, 0ul), Error);
    const auto st = stable_tate_dim(w, 1);
    CHECK(st.stable_dim == 6);
    CHECK(st.min_stable_degree == 2);
}

TEST_CASE("tate_dim on elliptic curves and the ordinary square") {
    for (long a : {-4, -3, 0, 1, 2, 3, 4}) {
        const WeilPoly e = elliptic_weil(a, 5);
        CHECK(tate_dim(e, 1, 1ul) == 1);
        const auto st = stable_tate_dim(e, 1);
        CHECK(st.stable_dim == 1);
        CHECK(st.min_stable_degree == 1);
    }
    const WeilPoly e = validate_weil(IntPoly{5, -3, 1}, 5);
    const WeilPoly ord = product_variety(e, e);
    const auto st = stable_tate_dim(ord, 1);
    CHECK(st.stable_dim == 4);
    CHECK(st.min_stable_degree == 1);
    // No cyclotomic factor beyond Phi_1 occurs in R.
    const auto spec = cyclotomic_spectrum(ord, 1);
    CHECK(spec.multiplicity.size() == 1);
    CHECK(spec.multiplicity.at(1) == 4);
}

TEST_CASE("conductor 37 curve at p = 2 acquires a fourth root of unity") {
    // a_2 = -2: pi = -1 +- i and pi / conj(pi) = -+ i.
    const WeilPoly e = elliptic_weil(-2, 2);
    const WeilPoly w = product_variety(e, e);
    CHECK(tate_dim(w, 1, 1ul) == 4);
    CHECK(tate_dim(w, 1, 2ul) == 4);
    CHECK(tate_dim(w, 1, 4ul) == 6);
    const auto st = stable_tate_dim(w, 1);
    CHECK(st.stable_dim == 6);
    CHECK(st.min_stable_degree == 4);
}

TEST_CASE("tate_profile") {
    const TateProfile prof = tate_profile(supersingular_square());
    CHECK(prof.d == 2);
    CHECK(prof.n_report == 60);
    REQUIRE(prof.rows.size() == 3);
    const TateRow& k1 = prof.rows[1];
    CHECK(k1.dims[0] == std::pair<unsigned long, unsigned>{1, 4});
    CHECK(k1.dims[1] == std::pair<unsigned long, unsigned>{2, 6});
    CHECK(k1.stable_dim == 6);
    CHECK(k1.min_stable_degree == 2);
    CHECK(k1.degree_bound == 2520);
    for (const auto& [n, dim] : prof.rows[0].dims) CHECK(dim == 1);
    CHECK(prof.rows[0].stable_dim == 1);
    CHECK(prof.rows[2].stable_dim >= 1);

    const TateProfile ell = tate_profile(validate_weil(IntPoly{5, -3, 1}, 5));
    CHECK(ell.n_report == 2);
    CHECK(ell.rows[1].stable_dim == 1);
    CHECK(tate_profile(supersingular_square(), 3).rows[1].dims.size() == 3);
}

TEST_CASE("tate_dim properties on random Weil polynomials") {
    std::mt19937_64 rng(2718);
    const auto qs = testing::prime_powers_up_to(32);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned d = 1 + trial % 3;
        const Integer q = qs[rng() % qs.size()];
        const WeilPoly w = testing::random_weil(rng, d, q);
        for (unsigned k = 0; k <= d; ++k) {
            const auto st = stable_tate_dim(w, k);
            const Integer bound = degree_bound(d, k);
            CHECK(tate_dim(w, k, bound) == st.stable_dim);
            CHECK(tate_dim(w, k, st.min_stable_degree) == st.stable_dim);
            CHECK(mpz_divisible_p(bound.get_mpz_t(), st.min_stable_degree.get_mpz_t()));
            for (unsigned long n = 1; n <= 12; ++n) {
                const unsigned dim = tate_dim(w, k, n);
                CHECK(dim <= st.stable_dim);
                CHECK(dim == tate_dim(w, d - k, n));
                CHECK(dim <= tate_dim(w, k, 2 * n));
                CHECK(dim <= tate_dim(w, k, 3 * n));
            }
            for (unsigned long n = 1; n < st.min_stable_degree && n <= 60; ++n) CHECK(tate_dim(w, k, n) < st.stable_dim);
            for (unsigned long n = 1; n <= 4; ++n) CHECK(tate_dim(w, k, n) == tate_dim(base_change(w, n), k, 1ul));
        }
    }
}

TEST_CASE("stabilization is exhaustive up to twice the bound for d <= 2") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 4; ++trial) {
        const WeilPoly w = testing::random_weil(rng, 2, 4);
        const auto st = stable_tate_dim(w, 1);
        const unsigned long limit = 2 * degree_bound(2, 1).get_ui();
        const auto spec = cyclotomic_spectrum(w, 1);
        for (unsigned long n = 1; n <= limit; ++n) CHECK(spec.count_dividing(Integer(n)) <= st.stable_dim);
    }
}

TEST_CASE("tate_dim_numeric") {
    const WeilPoly w = supersingular_square();
    CHECK(tate_dim_numeric(w, 1, 1) == 4);
    CHECK(tate_dim_numeric(w, 1, 2) == 6);
    CHECK(tate_dim_numeric(validate_weil(IntPoly{5, 0, 1}, 5), 1, 1) == 1);
    CHECK(tate_dim_numeric(w, 0, 7) == 1);

    std::mt19937_64 rng(404);
    const auto qs = testing::prime_powers_up_to(100);
    for (int trial = 0; trial < 100; ++trial) {
        const WeilPoly e1 = testing::random_weil(rng, 1, qs[rng() % qs.size()]);
        const WeilPoly e2 = testing::random_weil(rng, 1, e1.q());
        const WeilPoly x = product_variety(e1, e2);
        for (unsigned long n : {1ul, 2ul, 3ul, 4ul, 6ul, 12ul})
            CHECK(tate_dim_numeric(x, 1, n) == tate_dim(x, 1, n));
    }
}

TEST_CASE("tate_dim_numeric reports ambiguity at starved precision") {
    // At 8 bits the ambiguity band [2^-6, 2^-2] catches (ratio)^n near 1
    // for a non-torsion ratio raised to a large power.
    const WeilPoly w = product_variety(validate_weil(IntPoly{5, -3, 1}, 5), validate_weil(IntPoly{5, -3, 1}, 5));
    bool ambiguous = false;
    for (unsigned long n = 1; n <= 400 && !ambiguous; ++n) {
        try {
            tate_dim_numeric(w, 1, n, 8);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PrecisionInsufficient);
            ambiguous = true;
        }
    }
    CHECK(ambiguous);
}
