#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace burnside {

bool is_prime(long long n);

// Prime factorization as (prime, exponent) pairs with ascending primes.
std::vector<std::pair<long long, long long>> factorize(long long n);

// Returns p if n = p^k with k >= 1, 0 if n == 1, -1 otherwise.
long long prime_power_base(long long n);

// Stable 64-bit FNV-1a, used for cache file names.
std::uint64_t fnv1a64(const std::string_view text);

}  // namespace burnside
