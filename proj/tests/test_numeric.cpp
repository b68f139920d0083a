#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "weiltate/real.hpp"

using namespace weiltate;

TEST_CASE("real arithmetic keeps its precision") {
    const Real a(2L, 300);
    const Real r = sqrt(a);
    CHECK(r.bits() == 300);
    CHECK(abs(r * r - a) < pow2(-295, 300));
    CHECK(Real(1L, 64) + Real(1L, 512) == Real(2L, 512));
    CHECK((Real(1L, 64) + Real(1L, 512)).bits() == 512);
    CHECK(log_integer(Integer(1) << 4000, 128).to_double() == doctest::Approx(4000 * 0.6931471805599453));
    CHECK(Real("2.5", 100).ceil_integer() == 3);
    CHECK(Real("-2.5", 100).floor_integer() == -3);
    CHECK(Real(1L, 128).to_string(5) == "1.0000e+00");
}

TEST_CASE("roots of simple polynomials") {
    auto roots = complex_roots(IntPoly{5, 0, 1}, 128);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) {
        CHECK(abs(r.value.re) < pow2(-120, 128));
        CHECK(abs(abs(r.value.im) - sqrt(Real(5L, 192))) < pow2(-120, 192));
    }

    // Repeated roots keep full accuracy through the squarefree split.
    const IntPoly f = IntPoly{5, 0, 1}.pow(3) * IntPoly{-2, 1}.pow(2);
    auto flat = complex_roots_flat(f, 200);
    CHECK(flat.size() == 8);
    for (const auto& z : flat) {
        const Complex v = evaluate(IntPoly{5, 0, 1} * IntPoly{-2, 1}, z);
        CHECK(abs(v) < pow2(-190, 264));
    }
}

TEST_CASE("compound eigenvalues are subset products at 200 bits") {
    std::mt19937_64 rng(1234);
    const unsigned bits = 200;
    const Real tol = pow2(-100, bits + 64);
    for (int trial = 0; trial < 24; ++trial) {
        const std::size_t s = 2 + trial % 5;  // up to 6x6
        const std::size_t r = 1 + rng() % s;
        const IntMatrix m = testing::random_matrix(rng, s, -6, 6);
        const auto eig = complex_roots_flat(charpoly(m), bits);
        const auto expected = testing::subset_products(eig, r, bits + 64);
        const auto actual = complex_roots_flat(charpoly(compound_matrix(m, r)), bits);
        CHECK_MESSAGE(testing::multiset_match(actual, expected, tol), "s=" << s << " r=" << r);
    }
}
