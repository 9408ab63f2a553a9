#include <doctest.h>

#include "gapn/cyclotomic.hpp"
#include "gapn/rng.hpp"

using namespace gapn;

namespace {

CyclotomicInt random_value(std::uint32_t p, Rng& rng)
{
    std::vector<std::int64_t> coords(p);
    for (auto& c : coords)
        c = static_cast<std::int64_t>(rng.below(21)) - 10;
    return CyclotomicInt::from_coords(p, coords);
}

} // namespace

TEST_CASE("defining relations of zeta_p")
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        CyclotomicInt z = CyclotomicInt::root_power(p, 1);
        CyclotomicInt pw = CyclotomicInt::rational(p, 1);
        for (std::uint32_t i = 0; i < p; ++i)
            pw = pw * z;
        CHECK(pw == CyclotomicInt::rational(p, 1)); // zeta^p = 1

        CyclotomicInt sum(p);
        for (std::uint32_t j = 0; j < p; ++j)
            sum += CyclotomicInt::root_power(p, j);
        CHECK(sum.is_zero()); // 1 + zeta + ... + zeta^{p-1} = 0
    }
}

TEST_CASE("canonicalization is idempotent and sound")
{
    // adding a multiple of (1, 1, ..., 1) does not change the value
    std::vector<std::int64_t> a{4, -1, 3, 0, 2};
    std::vector<std::int64_t> b{9, 4, 8, 5, 7};
    CHECK(CyclotomicInt::from_coords(5, a) == CyclotomicInt::from_coords(5, b));
    CyclotomicInt z = CyclotomicInt::from_coords(5, a);
    CHECK(z.coords()[4] == 0);
    CHECK(CyclotomicInt::from_coords(5, z.coords()) == z);
}

TEST_CASE("ring axioms on random values")
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        Rng rng(100 + p);
        for (int trial = 0; trial < 30; ++trial) {
            CyclotomicInt x = random_value(p, rng);
            CyclotomicInt y = random_value(p, rng);
            CyclotomicInt z = random_value(p, rng);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x - x == CyclotomicInt(p));
            CHECK(-(-x) == x);
        }
    }
}

TEST_CASE("conjugation")
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        Rng rng(7 * p);
        CHECK(CyclotomicInt::root_power(p, 1).conj()
              == CyclotomicInt::root_power(p, p - 1));
        for (int trial = 0; trial < 20; ++trial) {
            CyclotomicInt x = random_value(p, rng);
            CyclotomicInt y = random_value(p, rng);
            CHECK(x.conj().conj() == x);
            CHECK((x * y).conj() == x.conj() * y.conj());
        }
    }
}

TEST_CASE("norms are rational and nonnegative for p = 3")
{
    // the real subfield of Q(zeta_3) is Q, so z conj(z) is a plain integer
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        CyclotomicInt z = random_value(3, rng);
        CyclotomicInt nz = z.norm();
        REQUIRE(nz.is_rational());
        CHECK(nz.rational_value() >= 0);
    }
    // for p >= 5 the norm is real but need not be rational
    CyclotomicInt w = CyclotomicInt::rational(5, 1) + CyclotomicInt::root_power(5, 1);
    CHECK_FALSE(w.norm().is_rational());
    CHECK(w.norm().conj() == w.norm());
    CHECK_THROWS_AS(w.norm().rational_value(), NonRationalSumError);
}

TEST_CASE("histogram sums and rendering")
{
    std::vector<std::uint64_t> balanced{4, 4, 4};
    CHECK(CyclotomicInt::from_histogram(3, balanced).is_zero());
    std::vector<std::uint64_t> counts{7, 1, 1};
    CyclotomicInt z = CyclotomicInt::from_histogram(3, counts);
    CHECK(z == CyclotomicInt::rational(3, 6));
    CHECK(z.to_string() == "6");
    CyclotomicInt nr = CyclotomicInt::rational(3, 2) - CyclotomicInt::root_power(3, 1);
    CHECK(nr.to_string() == "2-1*z");
    CHECK(CyclotomicInt(3).to_string() == "0");
}

TEST_CASE("ordering puts rationals first in numeric order")
{
    CyclotomicInt a = CyclotomicInt::rational(3, -5);
    CyclotomicInt b = CyclotomicInt::rational(3, 4);
    CyclotomicInt c = CyclotomicInt::root_power(3, 1);
    CHECK(a < b);
    CHECK(b < c);
    CHECK_FALSE(c < a);
}
