#include <doctest.h>

#include "gapn/field.hpp"
#include "gapn/numeric.hpp"
#include "helpers.hpp"

using namespace gapn;
using gapn::test::gf35;

TEST_CASE("construction accepts the worked F_3^5 presentation")
{
    FieldPtr f = gf35();
    CHECK(f->p() == 3);
    CHECK(f->n() == 5);
    CHECK(f->size() == 243);
    CHECK(f->to_string() == "p=3,n=5,mod=1,2,0,0,0,1");
}

TEST_CASE("construction validates its inputs")
{
    CHECK_NOTHROW(Field(3, 1, {1, 1}));
    CHECK_THROWS_AS(Field(3, 2, {0, 0, 1}), ReducibleError); // x^2 = x * x
    CHECK_THROWS_AS(Field(4, 2, {1, 1, 1}), NotPrimeError);
    CHECK_THROWS_AS(Field(1, 2, {1, 1, 1}), NotPrimeError);
    CHECK_THROWS_AS(Field(2, 25, std::vector<std::uint32_t>(26, 1)), TooLargeError);
    CHECK_THROWS_AS(Field(3, 2, {1, 1, 2}), BadParametersError); // not monic
    CHECK_THROWS_AS(Field(3, 2, {1, 1}), BadParametersError);    // wrong length
    CHECK_THROWS_AS(Field(3, 2, {1, 3, 1}), BadParametersError); // coefficient >= p
    // x^2 + x + 1 = (x - 1)^2 over F_3
    CHECK_THROWS_AS(Field(3, 2, {1, 1, 1}), ReducibleError);
}

TEST_CASE("multiplication matches the modulus relation a^5 = a + 2")
{
    FieldPtr f = gf35();
    CHECK(f->mul(81, 3) == 5); // a^4 * a
    CHECK(element_to_string(*f, 5) == "a+2");
    for (Elem x = 0; x < f->size(); ++x)
        CHECK(f->mul(x, 1) == x);
}

TEST_CASE("field axioms hold exhaustively on F_3^5")
{
    const Field& f = *gf35();
    const std::uint32_t q = f.size();
    for (Elem x = 0; x < q; ++x) {
        CHECK(f.add(x, f.neg(x)) == 0);
        if (x != 0)
            CHECK(f.mul(f.inv(x), x) == 1);
        CHECK(f.pow(x, q - 1) == (x == 0 ? 0 : 1));
    }
    // associativity, commutativity, distributivity
    for (Elem x = 0; x < q; x += 7) {
        for (Elem y = 0; y < q; ++y) {
            CHECK(f.add(x, y) == f.add(y, x));
            CHECK(f.mul(x, y) == f.mul(y, x));
            for (Elem z = 0; z < q; z += 3) {
                CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
            }
        }
    }
    CHECK_THROWS_AS(f.inv(0), DivisionByZeroError);
}

TEST_CASE("axioms hold exhaustively on small fields of each characteristic")
{
    for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
        FieldPtr fp = make_field(p, n);
        const Field& f = *fp;
        for (Elem x = 0; x < f.size(); ++x)
            for (Elem y = 0; y < f.size(); ++y)
                for (Elem z = 0; z < f.size(); ++z) {
                    CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                    CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                }
    }
}

TEST_CASE("digit/index encoding round-trips")
{
    for (const FieldPtr& f : {gf35(), make_field(2, 4), make_field(5, 2)}) {
        for (Elem x = 0; x < f->size(); ++x) {
            auto d = f->digits(x);
            CHECK(f->from_digits(d) == x);
        }
    }
}

TEST_CASE("trace is the F_p-linear absolute trace")
{
    const Field& f = *gf35();
    CHECK(f.trace(1) == 2); // Tr(1) = n mod p = 5 mod 3

    // linearity and Frobenius invariance, exhaustively on F_3^3
    FieldPtr g3 = make_field(3, 3);
    for (Elem x = 0; x < g3->size(); ++x) {
        CHECK(g3->trace(g3->frobenius(x, 1)) == g3->trace(x));
        for (Elem y = 0; y < g3->size(); ++y)
            CHECK(g3->trace(g3->add(x, y)) == (g3->trace(x) + g3->trace(y)) % 3);
    }

    // every fiber of Tr on F_3^5 has p^{n-1} = 81 elements
    std::uint32_t fiber[3] = {0, 0, 0};
    for (Elem x = 0; x < f.size(); ++x)
        ++fiber[f.trace(x)];
    CHECK(fiber[0] == 81);
    CHECK(fiber[1] == 81);
    CHECK(fiber[2] == 81);
}

TEST_CASE("frobenius is the p-power map")
{
    const Field& f = *gf35();
    CHECK(f.frobenius(3, 1) == 27); // a -> a^3
    for (Elem x = 0; x < f.size(); ++x) {
        CHECK(f.frobenius(x, 5) == x);
        CHECK(f.frobenius(x, 1) == f.pow(x, 3));
    }
    FieldPtr g = make_field(2, 4);
    for (Elem x = 0; x < g->size(); ++x)
        for (Elem y = 0; y < g->size(); ++y)
            CHECK(g->frobenius(g->add(x, y), 3)
                  == g->add(g->frobenius(x, 3), g->frobenius(y, 3)));
}

TEST_CASE("primitive element has full multiplicative order")
{
    CHECK(make_field(3, 1)->primitive_element() == 2);
    const Field& f = *gf35();
    Elem g = f.primitive_element();
    CHECK(f.element_order(g) == 242);
    for (std::uint64_t q : prime_factors(242))
        CHECK(f.pow(g, 242 / q) != 1);
}

TEST_CASE("default modulus is the lexicographically smallest irreducible")
{
    CHECK(Field::default_modulus(3, 2) == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(Field::default_modulus(5, 2) == std::vector<std::uint32_t>{1, 1, 1});
    for (auto [p, n] : {std::pair{2u, 8u}, {3u, 4u}, {5u, 3u}, {7u, 2u}})
        CHECK_NOTHROW(make_field(p, n));
}

TEST_CASE("gcd(i, n) = 1 forces exactly p - 1 roots of x^{p^i - 1} = 1")
{
    for (auto [p, n, i] : {std::tuple{3u, 5u, 1u}, {3u, 5u, 2u}, {3u, 4u, 1u},
                           {5u, 3u, 2u}, {2u, 5u, 3u}}) {
        FieldPtr f = make_field(p, n);
        std::uint64_t e = pow_u64(p, i) - 1;
        std::uint32_t hits = 0;
        for (Elem x = 1; x < f->size(); ++x) {
            if (f->pow(x, e) == 1)
                ++hits;
        }
        CHECK(hits == p - 1);
    }
}

TEST_CASE("field spec text form round-trips")
{
    FieldPtr f = Field::parse("p=3,n=5,mod=1,2,0,0,0,1");
    CHECK(f->to_string() == gf35()->to_string());
    FieldPtr d = Field::parse("p=5,n=2");
    CHECK(d->to_string() == "p=5,n=2,mod=1,1,1");
    CHECK_THROWS_AS(Field::parse("q=3"), gapn::ParseError);
    CHECK_THROWS_AS(Field::parse("p=3,n="), gapn::ParseError);
    CHECK_THROWS_AS(Field::parse("p=3,n=2,mod=0,0,1"), ReducibleError);
}

TEST_CASE("the flat addition table agrees with digit addition")
{
    FieldPtr f = make_field(3, 3);
    const Elem* tab = f->add_table();
    REQUIRE(tab != nullptr);
    for (Elem x = 0; x < f->size(); ++x)
        for (Elem y = 0; y < f->size(); ++y)
            CHECK(tab[x * f->size() + y] == f->add(x, y));
}

TEST_CASE("scalar multiplication is repeated addition")
{
    FieldPtr f = make_field(3, 3);
    for (Elem x = 0; x < f->size(); ++x) {
        Elem acc = 0;
        for (std::uint32_t c = 0; c < 3; ++c) {
            CHECK(f->scalar_mul(c, x) == acc);
            CHECK(f->scalar_mul(c, x) == f->mul(f->from_base(c), x));
            acc = f->add(acc, x);
        }
    }
}

TEST_CASE("element rendering uses the basis root")
{
    const Field& f = *gf35();
    CHECK(element_to_string(f, 0) == "0");
    CHECK(element_to_string(f, 49) == "a^3+2a^2+a+1");
    CHECK(element_to_string(f, 81) == "a^4");
}
