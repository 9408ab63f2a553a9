#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gapn/errors.hpp"

namespace gapn {

// Exact element of Z[zeta_p], zeta_p a primitive p-th root of unity.
// Stored as integer coordinates c_0..c_{p-1} of sum c_j zeta^j, kept in
// the canonical form c_{p-1} = 0 (subtract the relation sum_j zeta^j = 0).
// No floating point is involved anywhere.
class CyclotomicInt {
public:
    explicit CyclotomicInt(std::uint32_t p);

    static CyclotomicInt rational(std::uint32_t p, std::int64_t v);
    static CyclotomicInt root_power(std::uint32_t p, std::uint32_t j);
    // sum_j counts[j] * zeta^j from a length-p histogram.
    static CyclotomicInt from_histogram(std::uint32_t p, std::span<const std::uint64_t> counts);
    static CyclotomicInt from_coords(std::uint32_t p, std::span<const std::int64_t> coords);

    std::uint32_t p() const { return p_; }
    const std::vector<std::int64_t>& coords() const { return c_; }

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator-() const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt& operator+=(const CyclotomicInt& o);

    CyclotomicInt conj() const;
    // z * conj(z); rational and nonnegative as a complex norm, but for
    // p >= 5 it may be a non-rational real cyclotomic integer.
    CyclotomicInt norm() const { return *this * conj(); }

    bool is_zero() const;
    bool is_rational() const;
    // Throws NonRationalSumError when not rational.
    std::int64_t rational_value() const;

    bool operator==(const CyclotomicInt& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator<(const CyclotomicInt& o) const;

    // Rational values print as plain integers, everything else as
    // "c0+c1*z+c2*z^2+...".
    std::string to_string() const;

private:
    std::uint32_t p_;
    std::vector<std::int64_t> c_;

    void canonicalize();
};

} // namespace gapn
