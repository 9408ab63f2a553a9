#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gapn {

bool is_prime(std::uint64_t v);

// Distinct prime factors in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp);

// (base^exp) mod m, m > 0.
std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

using Int128 = __int128;

std::string to_string_i128(Int128 v);

} // namespace gapn
