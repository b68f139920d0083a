#include "weiltate/weil.hpp"

#include "weiltate/arith.hpp"
#include "weiltate/error.hpp"
#include "weiltate/real.hpp"

namespace weiltate {

namespace {

Integer power(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

PrimePower require_prime_power(const Integer& q) {
    auto pp = prime_power_decomposition(q);
    if (!pp) fail(ErrorKind::NotPrimePower, "q = " + q.get_str() + " is not a prime power");
    return *pp;
}

}  // namespace

WeilPoly validate_weil(const IntPoly& f, const Integer& q, const WeilCheckOptions& options) {
    const PrimePower pp = require_prime_power(q);
    if (!f.is_monic()) fail(ErrorKind::NotMonic, "Weil polynomial must be monic");
    if (f.degree() < 2 || f.degree() % 2 != 0)
        fail(ErrorKind::OddDegree, "Weil polynomial degree must be positive and even, got " + std::to_string(f.degree()));
    const auto d = static_cast<unsigned>(f.degree() / 2);
    const auto deg = static_cast<std::size_t>(f.degree());

    const Integer qd = power(q, d);
    if (f.coeffs()[0] != qd)
        fail(ErrorKind::FunctionalEquationFails, "constant term " + f.coeffs()[0].get_str() + " differs from q^d = " + qd.get_str());
    // Coefficient of T^j in T^(2d) f(q/T) is c_(2d-j) q^(2d-j).
    for (std::size_t j = 0; j <= deg; ++j) {
        const Integer lhs = f.coeffs()[deg - j] * power(q, deg - j);
        const Integer rhs = f.coeffs()[j] * qd;
        if (lhs != rhs)
            fail(ErrorKind::FunctionalEquationFails,
                 "functional equation T^(2d) f(q/T) = q^d f(T) fails at T^" + std::to_string(j));
    }

    const unsigned bits = options.precision_bits;
    const Real qr(q, bits + 64);
    const Real tol = pow2(-static_cast<long>(options.tolerance_bits), bits + 64) * qr;
    for (const auto& root : complex_roots(f, bits)) {
        const Real gap = abs(norm(root.value) - qr);
        if (gap > tol)
            fail(ErrorKind::RootModulusFails,
                 "root of modulus^2 " + norm(root.value).to_string(12) + " violates |alpha|^2 = q = " + q.get_str());
    }
    return WeilPoly(f, q, pp.prime, d);
}

WeilPoly elliptic_weil(const Integer& trace, const Integer& q) {
    const PrimePower pp = require_prime_power(q);
    if (trace * trace > 4 * q)
        fail(ErrorKind::RootModulusFails, "trace " + trace.get_str() + " violates a^2 <= 4q for q = " + q.get_str());
    return WeilPoly(IntPoly(std::vector<Integer>{q, -trace, 1}), q, pp.prime, 1);
}

WeilPoly product_variety(const WeilPoly& a, const WeilPoly& b) {
    if (a.q_ != b.q_)
        fail(ErrorKind::MismatchedField, "product of Weil polynomials over q = " + a.q_.get_str() + " and q = " + b.q_.get_str());
    return WeilPoly(a.poly_ * b.poly_, a.q_, a.p_, a.d_ + b.d_);
}

CohomPoly h_charpoly(const WeilPoly& w, unsigned r) {
    if (r > 2 * w.d())
        fail(ErrorKind::OutOfRange, "cohomology degree " + std::to_string(r) + " outside 0.." + std::to_string(2 * w.d()));
    if (r == 0) return {IntPoly::linear_root(1), 0, w.q()};
    return {charpoly(compound_matrix(companion(w.poly()), r)), r, w.q()};
}

WeilPoly base_change(const WeilPoly& w, unsigned long n) {
    if (n == 0) fail(ErrorKind::InvalidArgument, "base change degree must be positive");
    if (n == 1) return w;
    IntPoly f = charpoly(companion(w.poly_).pow(Integer(n)));
    return WeilPoly(std::move(f), power(w.q_, n), w.p_, w.d_);
}

IntPoly reciprocal_convention(const IntPoly& monic) { return monic.reciprocal(); }

}  // namespace weiltate
