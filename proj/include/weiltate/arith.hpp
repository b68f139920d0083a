#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weiltate/polycore.hpp"

namespace weiltate {

struct PrimePower {
    Integer prime;
    unsigned long exponent;
};

/// q = p^e with p prime, or nullopt. Primality of a large base is decided by
/// GMP's probabilistic test.
std::optional<PrimePower> prime_power_decomposition(const Integer& q);

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Primes <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace weiltate
