#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "arbordyn/errors.hpp"
#include "arbordyn/fields.hpp"

using namespace arbordyn;

TEST_CASE("prime field basics over F_7") {
    FieldDesc f7 = FieldDesc::prime_field(7);
    CHECK(f7.from_int(-1).a == 6);
    CHECK(f7.inv({3, 0}).a == 5);
    CHECK(f7.mul({3, 0}, {5, 0}).a == 1);
    CHECK(f7.sqrt({2, 0}).a == 3);  // roots 3 and 4; canonical is the smaller
    CHECK(f7.is_square({2, 0}));
    CHECK_FALSE(f7.is_square({3, 0}));
    CHECK_THROWS_AS((void)f7.sqrt({3, 0}), Error);
    CHECK_THROWS_AS((void)f7.inv({0, 0}), Error);
}

TEST_CASE("sqrt against brute force for p < 100") {
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 41ull, 97ull}) {
        FieldDesc fd = FieldDesc::prime_field(p);
        std::set<uint64_t> squares;
        for (uint64_t x = 0; x < p; ++x) squares.insert(x * x % p);
        for (uint64_t a = 0; a < p; ++a) {
            bool sq = squares.count(a) > 0;
            CHECK(fd.is_square({a, 0}) == sq);
            if (sq) {
                FF r = fd.sqrt({a, 0});
                CHECK(fd.mul(r, r).a == a);
                // canonical: lexicographically smaller of the two roots
                if (a != 0) CHECK(r.a <= p - r.a);
            }
        }
    }
}

TEST_CASE("F_9 quadratic extension") {
    FieldDesc f9 = FieldDesc::quadratic_ext(3);
    CHECK(f9.p == 3);
    CHECK(f9.k == 2);
    // lexicographically least irreducible quadratic over F_3 is u^2 + 1
    CHECK(f9.m1 == 0);
    CHECK(f9.m0 == 1);
    // frobenius is an involution fixing exactly F_3
    uint64_t fixed = 0;
    for (uint64_t a = 0; a < 3; ++a)
        for (uint64_t b = 0; b < 3; ++b) {
            FF x{a, b};
            CHECK(f9.frobenius(f9.frobenius(x)) == x);
            if (f9.frobenius(x) == x) ++fixed;
        }
    CHECK(fixed == 3);
    // every nonzero element inverts
    for (uint64_t a = 0; a < 3; ++a)
        for (uint64_t b = 0; b < 3; ++b) {
            FF x{a, b};
            if (f9.is_zero(x)) continue;
            CHECK(f9.mul(x, f9.inv(x)) == f9.one());
        }
    // squares: exactly (9-1)/2 + 1 elements, and sqrt squares them back
    uint64_t nsq = 0;
    for (uint64_t a = 0; a < 3; ++a)
        for (uint64_t b = 0; b < 3; ++b) {
            FF x{a, b};
            if (f9.is_square(x)) {
                ++nsq;
                FF r = f9.sqrt(x);
                CHECK(f9.mul(r, r) == x);
            }
        }
    CHECK(nsq == 5);
}

TEST_CASE("extension of larger prime fields agrees with Euler counts") {
    for (uint64_t p : {5ull, 13ull}) {
        FieldDesc fq = FieldDesc::quadratic_ext(p);
        uint64_t nsq = 0;
        for (uint64_t a = 0; a < p; ++a)
            for (uint64_t b = 0; b < p; ++b)
                if (fq.is_square({a, b})) ++nsq;
        CHECK(nsq == (p * p - 1) / 2 + 1);
    }
}

TEST_CASE("format and parse round trip") {
    FieldDesc f9 = FieldDesc::quadratic_ext(3);
    for (uint64_t a = 0; a < 3; ++a)
        for (uint64_t b = 0; b < 3; ++b) {
            FF x{a, b};
            CHECK(f9.parse(f9.format(x)) == x);
        }
    FieldDesc f7 = FieldDesc::prime_field(7);
    CHECK(f7.parse("5") == FF{5, 0});
    CHECK(f7.format({5, 0}) == "5");
}

TEST_CASE("pow and subfield lift consistency") {
    FieldDesc f9 = FieldDesc::quadratic_ext(3);
    for (uint64_t a = 0; a < 3; ++a)
        for (uint64_t b = 0; b < 3; ++b) {
            FF x{a, b};
            if (f9.is_zero(x)) continue;
            CHECK(f9.pow(x, 8) == f9.one());         // group order
            CHECK(f9.pow(x, 3) == f9.frobenius(x));  // frobenius = x^p
        }
}
