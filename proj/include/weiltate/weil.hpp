#pragma once

// Weil polynomials of abelian varieties over finite fields.
//
// A WeilPoly stores det(T - Frob | H^1): monic, degree 2d, constant term
// q^d, every root of absolute value sqrt(q). The reciprocal form
// prod(1 - alpha_i T) is produced only for display.

#include "weiltate/polycore.hpp"

namespace weiltate {

struct WeilCheckOptions {
    /// Working precision for the numeric root-modulus guard.
    unsigned precision_bits = 128;
    /// Accept | |alpha|^2 - q | <= 2^-tolerance_bits * q.
    unsigned tolerance_bits = 64;
};

class WeilPoly {
public:
    const IntPoly& poly() const noexcept { return poly_; }
    const Integer& q() const noexcept { return q_; }
    const Integer& p() const noexcept { return p_; }
    unsigned d() const noexcept { return d_; }

    friend bool operator==(const WeilPoly& a, const WeilPoly& b) {
        return a.poly_ == b.poly_ && a.q_ == b.q_;
    }

private:
    WeilPoly(IntPoly poly, Integer q, Integer p, unsigned d)
        : poly_(std::move(poly)), q_(std::move(q)), p_(std::move(p)), d_(d) {}

    friend WeilPoly validate_weil(const IntPoly&, const Integer&, const WeilCheckOptions&);
    friend WeilPoly product_variety(const WeilPoly&, const WeilPoly&);
    friend WeilPoly base_change(const WeilPoly&, unsigned long);
    friend WeilPoly elliptic_weil(const Integer&, const Integer&);

    IntPoly poly_;
    Integer q_;
    Integer p_;
    unsigned d_ = 0;
};

/// Characteristic polynomial of Frobenius on H^r: its roots are the products
/// of r distinct H^1 roots, with multiplicity.
struct CohomPoly {
    IntPoly poly;
    unsigned r = 0;
    Integer q;

    unsigned weight() const noexcept { return r; }
};

/// Checks, in order: q a prime power, monic, positive even degree, constant
/// term q^d together with the exact functional equation
/// T^(2d) f(q/T) = q^d f(T), and finally the numeric root modulus test.
WeilPoly validate_weil(const IntPoly& f, const Integer& q, const WeilCheckOptions& options = {});

/// Weil polynomial of the product: H^1 is the direct sum.
WeilPoly product_variety(const WeilPoly& a, const WeilPoly& b);

/// charpoly(compound_matrix(companion(w), r)); r = 0 gives T - 1.
CohomPoly h_charpoly(const WeilPoly& w, unsigned r);

/// Weil polynomial over F_{q^n}: roots alpha_i^n, via the n-th power of the companion matrix.
WeilPoly base_change(const WeilPoly& w, unsigned long n);

/// prod(1 - alpha_i T) form of a monic det(T - Frob).
IntPoly reciprocal_convention(const IntPoly& monic);

/// Elliptic Weil polynomial T^2 - a T + q. The root modulus condition is
/// decided exactly here (a^2 <= 4q), so no numerics are involved.
WeilPoly elliptic_weil(const Integer& trace, const Integer& q);

}  // namespace weiltate
