#include "gapn/cyclotomic.hpp"

#include <sstream>

namespace gapn {

CyclotomicInt::CyclotomicInt(std::uint32_t p) : p_(p), c_(p, 0)
{
    if (p < 2)
        throw BadParametersError("cyclotomic order must be a prime >= 2");
}

void CyclotomicInt::canonicalize()
{
    std::int64_t t = c_[p_ - 1];
    if (t != 0) {
        for (auto& v : c_)
            v -= t;
    }
}

CyclotomicInt CyclotomicInt::rational(std::uint32_t p, std::int64_t v)
{
    CyclotomicInt z(p);
    z.c_[0] = v;
    return z;
}

CyclotomicInt CyclotomicInt::root_power(std::uint32_t p, std::uint32_t j)
{
    CyclotomicInt z(p);
    z.c_[j % p] = 1;
    z.canonicalize();
    return z;
}

CyclotomicInt CyclotomicInt::from_histogram(std::uint32_t p, std::span<const std::uint64_t> counts)
{
    if (counts.size() != p)
        throw BadParametersError("histogram must have exactly p bins");
    CyclotomicInt z(p);
    for (std::uint32_t j = 0; j < p; ++j)
        z.c_[j] = static_cast<std::int64_t>(counts[j]);
    z.canonicalize();
    return z;
}

CyclotomicInt CyclotomicInt::from_coords(std::uint32_t p, std::span<const std::int64_t> coords)
{
    if (coords.size() != p)
        throw BadParametersError("coordinate vector must have length p");
    CyclotomicInt z(p);
    for (std::uint32_t j = 0; j < p; ++j)
        z.c_[j] = coords[j];
    z.canonicalize();
    return z;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const
{
    CyclotomicInt z(p_);
    for (std::uint32_t j = 0; j < p_; ++j)
        z.c_[j] = c_[j] + o.c_[j];
    return z; // sum of canonical forms is canonical
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o)
{
    for (std::uint32_t j = 0; j < p_; ++j)
        c_[j] += o.c_[j];
    return *this;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const
{
    CyclotomicInt z(p_);
    for (std::uint32_t j = 0; j < p_; ++j)
        z.c_[j] = c_[j] - o.c_[j];
    return z;
}

CyclotomicInt CyclotomicInt::operator-() const
{
    CyclotomicInt z(p_);
    for (std::uint32_t j = 0; j < p_; ++j)
        z.c_[j] = -c_[j];
    return z;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const
{
    CyclotomicInt z(p_);
    for (std::uint32_t i = 0; i < p_; ++i) {
        if (c_[i] == 0)
            continue;
        for (std::uint32_t j = 0; j < p_; ++j) {
            if (o.c_[j] == 0)
                continue;
            std::uint32_t k = i + j;
            if (k >= p_)
                k -= p_;
            z.c_[k] += c_[i] * o.c_[j];
        }
    }
    z.canonicalize();
    return z;
}

CyclotomicInt CyclotomicInt::conj() const
{
    CyclotomicInt z(p_);
    for (std::uint32_t j = 0; j < p_; ++j)
        z.c_[(p_ - j) % p_] = c_[j];
    z.canonicalize();
    return z;
}

bool CyclotomicInt::is_zero() const
{
    for (auto v : c_)
        if (v != 0)
            return false;
    return true;
}

bool CyclotomicInt::is_rational() const
{
    for (std::uint32_t j = 1; j < p_; ++j)
        if (c_[j] != 0)
            return false;
    return true;
}

std::int64_t CyclotomicInt::rational_value() const
{
    if (!is_rational())
        throw NonRationalSumError("cyclotomic value is not rational: " + to_string());
    return c_[0];
}

bool CyclotomicInt::operator<(const CyclotomicInt& o) const
{
    bool r1 = is_rational();
    bool r2 = o.is_rational();
    if (r1 != r2)
        return r1; // rationals sort first
    if (r1)
        return c_[0] < o.c_[0];
    return c_ < o.c_;
}

std::string CyclotomicInt::to_string() const
{
    if (is_rational())
        return std::to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t j = 0; j < p_; ++j) {
        if (c_[j] == 0)
            continue;
        if (first) {
            os << c_[j];
            first = false;
        } else {
            os << (c_[j] >= 0 ? "+" : "") << c_[j];
        }
        if (j == 1)
            os << "*z";
        else if (j > 1)
            os << "*z^" << j;
    }
    if (first)
        os << 0;
    return os.str();
}

} // namespace gapn
