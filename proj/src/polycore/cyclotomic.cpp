#include <mutex>

#include "weiltate/error.hpp"
#include "weiltate/polycore.hpp"

namespace weiltate {

std::uint64_t totient(std::uint64_t m) {
    if (m == 0) fail(ErrorKind::InvalidArgument, "totient of 0");
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

struct CyclotomicCache::Slot {
    std::once_flag once;
    IntPoly poly;
};

CyclotomicCache::CyclotomicCache(std::uint64_t capacity)
    : capacity_(capacity), slots_(std::make_unique<Slot[]>(capacity + 1)) {}

CyclotomicCache::~CyclotomicCache() = default;

CyclotomicCache& CyclotomicCache::shared() {
    static CyclotomicCache cache;
    return cache;
}

IntPoly CyclotomicCache::compute(std::uint64_t m) const {
    // Phi_m = (T^m - 1) / prod_{d | m, d < m} Phi_d
    IntPoly f = IntPoly::monomial(1, m) - IntPoly{1};
    for (std::uint64_t d = 1; d < m; ++d)
        if (m % d == 0) f = divide_exact(f, get(d));
    return f;
}

IntPoly CyclotomicCache::get(std::uint64_t m) const {
    if (m == 0) fail(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
    if (m > capacity_) return compute(m);
    Slot& slot = slots_[m];
    std::call_once(slot.once, [&] { slot.poly = compute(m); });
    return slot.poly;
}

IntPoly cyclotomic(std::uint64_t m) { return CyclotomicCache::shared().get(m); }

unsigned cyclotomic_multiplicity(const IntPoly& f, std::uint64_t m) {
    if (f.is_zero()) fail(ErrorKind::InvalidArgument, "cyclotomic multiplicity of the zero polynomial");
    if (m == 0) fail(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
    if (totient(m) > static_cast<std::uint64_t>(f.degree())) return 0;
    const IntPoly phi = cyclotomic(m);
    unsigned e = 0;
    IntPoly rest = f;
    while (rest.degree() >= phi.degree()) {
        auto [q, r] = divrem(rest, phi);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++e;
    }
    return e;
}

}  // namespace weiltate
