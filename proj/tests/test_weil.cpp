#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "weiltate/error.hpp"
#include "weiltate/weil.hpp"

using namespace weiltate;

namespace {

ErrorKind kind_of(const IntPoly& f, long q) {
    try {
        validate_weil(f, Integer(q));
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected validation failure");
    return ErrorKind::Internal;
}

// T^deg * Q(c / T), scaled to integer coefficients: coefficient of T^j is Q_(deg-j) c^(deg-j).
IntPoly inverted(const IntPoly& f, const Integer& c) {
    const auto deg = static_cast<std::size_t>(f.degree());
    std::vector<Integer> out(deg + 1);
    for (std::size_t j = 0; j <= deg; ++j) {
        Integer cp;
        mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), deg - j);
        out[j] = f.coeff(deg - j) * cp;
    }
    return IntPoly(std::move(out));
}

bool scalar_multiple(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return false;
    // a * lc(b) == b * lc(a)
    return a * b.leading() == b * a.leading();
}

}  // namespace

TEST_CASE("validate_weil accepts genuine Weil polynomials") {
    const WeilPoly ss = validate_weil(IntPoly{5, 0, 1}, 5);
    CHECK(ss.d() == 1);
    CHECK(ss.p() == 5);
    const WeilPoly ord = validate_weil(IntPoly{5, -3, 1}, 5);
    CHECK(ord.d() == 1);
    const WeilPoly f4 = validate_weil(IntPoly{4, 0, 1}, 4);
    CHECK(f4.p() == 2);
    // (T - 3)^2 over F_9: real roots of modulus 3.
    CHECK(validate_weil(IntPoly{9, -6, 1}, 9).d() == 1);
}

TEST_CASE("validate_weil names the failed invariant") {
    CHECK(kind_of(IntPoly{5, -6, 1}, 5) == ErrorKind::RootModulusFails);
    CHECK(kind_of(IntPoly{6, 0, 1}, 6) == ErrorKind::NotPrimePower);
    CHECK(kind_of(IntPoly{5, 0, 2}, 5) == ErrorKind::NotMonic);
    CHECK(kind_of(IntPoly{5, 0, 0, 1}, 5) == ErrorKind::OddDegree);
    CHECK(kind_of(IntPoly{1}, 5) == ErrorKind::OddDegree);
    CHECK(kind_of(IntPoly{4, 0, 1}, 5) == ErrorKind::FunctionalEquationFails);
    CHECK(kind_of(IntPoly{25, 1, 0, 0, 1}, 5) == ErrorKind::FunctionalEquationFails);
    CHECK(kind_of(IntPoly{}, 5) == ErrorKind::NotMonic);
}

TEST_CASE("elliptic_weil decides the Hasse bound exactly") {
    CHECK(elliptic_weil(4, 4).poly() == IntPoly{4, -4, 1});
    CHECK_THROWS_AS(elliptic_weil(5, 4), Error);
    CHECK(elliptic_weil(-2, 2).poly() == IntPoly{2, 2, 1});
}

TEST_CASE("product_variety") {
    const WeilPoly a = validate_weil(IntPoly{5, 0, 1}, 5);
    const WeilPoly b = validate_weil(IntPoly{5, -3, 1}, 5);
    const WeilPoly aa = product_variety(a, a);
    CHECK(aa.poly() == IntPoly{25, 0, 10, 0, 1});
    CHECK(aa.d() == 2);
    const WeilPoly ab = product_variety(a, b);
    CHECK(ab.poly().degree() == 4);
    CHECK(ab == product_variety(b, a));
    CHECK_THROWS_AS(product_variety(a, validate_weil(IntPoly{7, 0, 1}, 7)), Error);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const WeilPoly x = testing::random_weil(rng, 1, 7);
        const WeilPoly y = testing::random_weil(rng, 1, 7);
        const WeilPoly z = testing::random_weil(rng, 1, 7);
        CHECK(product_variety(product_variety(x, y), z) == product_variety(x, product_variety(y, z)));
        CHECK(product_variety(x, y) == product_variety(y, x));
        // Products of valid polynomials pass the full check again.
        CHECK(validate_weil(product_variety(x, y).poly(), 7) == product_variety(x, y));
    }
}

TEST_CASE("h_charpoly") {
    const WeilPoly e = validate_weil(IntPoly{5, -3, 1}, 5);
    CHECK(h_charpoly(e, 2).poly == IntPoly{-5, 1});
    CHECK(h_charpoly(e, 0).poly == IntPoly{-1, 1});
    CHECK(h_charpoly(e, 1).poly == e.poly());
    CHECK_THROWS_AS(h_charpoly(e, 3), Error);

    // Pairwise products of {i sqrt5, i sqrt5, -i sqrt5, -i sqrt5}: -5, 5, 5, 5, 5, -5.
    const WeilPoly ss = validate_weil(IntPoly{25, 0, 10, 0, 1}, 5);
    const CohomPoly h2 = h_charpoly(ss, 2);
    CHECK(h2.poly == IntPoly{-5, 1}.pow(4) * IntPoly{5, 1}.pow(2));
    CHECK(h2.r == 2);
    CHECK(h_charpoly(ss, 4).poly == IntPoly{-25, 1});
}

TEST_CASE("h_charpoly root multisets against numeric subset products") {
    std::mt19937_64 rng(31);
    const unsigned bits = 200;
    const Real tol = pow2(-100, bits + 64);
    for (int trial = 0; trial < 12; ++trial) {
        const unsigned d = 1 + trial % 3;
        const WeilPoly w = testing::random_weil(rng, d, Integer(trial % 2 ? 9 : 11));
        const auto roots = complex_roots_flat(w.poly(), bits);
        for (unsigned r = 0; r <= 2 * d; ++r) {
            const CohomPoly h = h_charpoly(w, r);
            CHECK(h.poly.degree() == static_cast<long>(binomial(2 * d, r).get_ui()));
            const auto expected = testing::subset_products(roots, r, bits + 64);
            CHECK(testing::multiset_match(complex_roots_flat(h.poly, bits), expected, tol));
        }
    }
}

TEST_CASE("h_charpoly duality and weight symmetry") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned d = 1 + trial % 3;
        const Integer q = std::vector<long>{2, 3, 4, 5, 7, 8, 9, 25}[trial % 8];
        const WeilPoly w = testing::random_weil(rng, d, q);
        Integer qd;
        mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
        CHECK(h_charpoly(w, 2 * d).poly == IntPoly::linear_root(qd));
        for (unsigned r = 0; r <= 2 * d; ++r) {
            const IntPoly qr = h_charpoly(w, r).poly;
            // alpha -> q^d / alpha sends H^(2d-r) roots onto H^r roots.
            CHECK(scalar_multiple(inverted(h_charpoly(w, 2 * d - r).poly, qd), qr));
            // alpha -> q^r / alpha preserves the H^r roots.
            Integer qw;
            mpz_pow_ui(qw.get_mpz_t(), q.get_mpz_t(), r);
            CHECK(scalar_multiple(inverted(qr, qw), qr));
        }
    }
}

TEST_CASE("base_change") {
    const WeilPoly ss = validate_weil(IntPoly{5, 0, 1}, 5);
    CHECK(base_change(ss, 1) == ss);
    const WeilPoly ss2 = base_change(ss, 2);
    CHECK(ss2.poly() == IntPoly{25, 10, 1});
    CHECK(ss2.q() == 25);
    CHECK(validate_weil(ss2.poly(), 25) == ss2);

    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 15; ++trial) {
        const WeilPoly w = testing::random_weil(rng, 1 + trial % 3, Integer(std::vector<long>{3, 4, 5, 7}[trial % 4]));
        const unsigned long a = 1 + rng() % 4, b = 1 + rng() % 4;
        CHECK(base_change(base_change(w, a), b) == base_change(w, a * b));
    }
}

TEST_CASE("base_change commutes with h_charpoly on roots") {
    std::mt19937_64 rng(61);
    const unsigned bits = 200;
    const Real tol = pow2(-100, bits + 64);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned d = 1 + trial % 3;
        const unsigned long n = 1 + trial % 3;
        const WeilPoly w = testing::random_weil(rng, d, 5);
        const unsigned r = static_cast<unsigned>(rng() % (2 * d + 1));
        auto powered = complex_roots_flat(h_charpoly(w, r).poly, bits);
        for (auto& z : powered) z = pow(z, Integer(n));
        const auto direct = complex_roots_flat(h_charpoly(base_change(w, n), r).poly, bits);
        CHECK(testing::multiset_match(direct, powered, tol));
    }
}

TEST_CASE("reciprocal convention") {
    // det(T - F) = T^2 - 3T + 5  <->  1 - 3T + 5T^2
    CHECK(reciprocal_convention(IntPoly{5, -3, 1}) == IntPoly{1, -3, 5});
}
