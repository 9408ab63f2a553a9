#include "gapn/numeric.hpp"

namespace gapn {

bool is_prime(std::uint64_t v)
{
    if (v < 2)
        return false;
    if (v % 2 == 0)
        return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2) {
        if (v % d == 0)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0)
                v /= d;
        }
    }
    if (v > 1)
        out.push_back(v);
    return out;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp)
{
    std::uint64_t r = 1;
    while (exp > 0) {
        if (exp & 1u)
            r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    unsigned __int128 r = 1;
    unsigned __int128 b = base % m;
    while (exp > 0) {
        if (exp & 1u)
            r = (r * b) % m;
        b = (b * b) % m;
        exp >>= 1u;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string_i128(Int128 v)
{
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

} // namespace gapn
