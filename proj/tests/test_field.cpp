#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "logmonoid/error.hpp"
#include "logmonoid/field.hpp"

#include <random>

using namespace logmonoid;

TEST_CASE("prime fields agree with integer arithmetic") {
    for (long long p : {2, 3, 5, 7, 13}) {
        Fq f(p);
        CHECK(f.degree() == 1);
        for (long long a = 0; a < p; ++a)
            for (long long b = 0; b < p; ++b) {
                CHECK(f.add(a, b) == (a + b) % p);
                CHECK(f.mul(a, b) == (a * b) % p);
                CHECK(f.sub(a, b) == (a - b + p) % p);
                if (b) CHECK(f.mul(f.inv(b), b) == 1);
            }
        CHECK(f.from_integer(-1) == p - 1);
    }
}

TEST_CASE("extension fields have no zero divisors and the right unit group") {
    for (long long q : {4, 8, 9, 16, 25, 27}) {
        Fq f(q);
        CHECK(f.order() == q);
        for (long long a = 1; a < q; ++a) {
            for (long long b = 1; b < q; ++b) CHECK(f.mul(a, b) != 0);
            CHECK(f.pow(a, q - 1) == 1);
        }
        CHECK(f.multiplicative_order(f.primitive_element()) == q - 1);
        for (std::uint32_t g = 1; g < f.primitive_element(); ++g) CHECK(f.multiplicative_order(g) < q - 1);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (long long q : {9, 49, 64, 81, 125}) {
        Fq f(q);
        std::uniform_int_distribution<long long> u(0, q - 1);
        for (int t = 0; t < 300; ++t) {
            std::uint32_t a = u(rng), b = u(rng), c = u(rng);
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            CHECK(f.add(a, f.neg(a)) == 0);
        }
    }
}

TEST_CASE("roots of unity") {
    Fq f3(3), f5(5);
    CHECK(*f3.root_of_unity(2) == 2);
    CHECK(*f5.root_of_unity(4) == 2);
    CHECK_FALSE(f5.root_of_unity(3).has_value());
    Fq f13(13);
    for (long long m : {1, 2, 3, 4, 6, 12}) CHECK(f13.multiplicative_order(*f13.root_of_unity(m)) == m);
}

TEST_CASE("invalid orders are rejected") {
    for (long long q : {0, 1, 6, 12, 65537 * 2}) CHECK_THROWS_AS(Fq{q}, InputError);
}

TEST_CASE("matrix linear algebra") {
    Field f = make_field(7);
    FqMatrix a = fq_matrix(*f, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(rank(*f, a) == 2);
    FqMatrix k = kernel(*f, a);
    REQUIRE(k.cols() == 1);
    CHECK(is_zero(FqMatrix(a * k)));
    CHECK(column_basis(*f, a).cols() == 2);
    FqMatrix b = fq_matrix(*f, {{1, 1}, {0, 1}});
    FqMatrix bi = *inverse(*f, b);
    CHECK(fq_equal(FqMatrix(b * bi), fq_identity(*f, 2)));
    CHECK(fq_equal(power(*f, b, -3), fq_matrix(*f, {{1, 4}, {0, 1}})));
    CHECK(fq_equal(power(*f, b, 7), fq_identity(*f, 2)));
    CHECK_FALSE(inverse(*f, a).has_value());
    auto x = solve(*f, a, FqVector(a.col(0) + a.col(2)));
    REQUIRE(x.has_value());
    CHECK(fq_equal(FqMatrix(a * *x), FqMatrix(a.col(0) + a.col(2))));
    CHECK(kronecker(b, fq_identity(*f, 2)).rows() == 4);
}
