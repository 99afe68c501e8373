#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "arbordyn/errors.hpp"
#include "arbordyn/parse.hpp"
#include "arbordyn/poly.hpp"

using namespace arbordyn;

namespace {

Poly random_poly(const FieldDesc& fd, int deg, std::mt19937_64& rng) {
    std::vector<int64_t> c(deg + 1);
    for (auto& v : c) v = static_cast<int64_t>(rng() % fd.p);
    if (c.back() == 0) c.back() = 1;
    return Poly::from_int_coeffs(fd, c);
}

}  // namespace

TEST_CASE("divmod recomposition and exact division") {
    std::mt19937_64 rng(1);
    FieldDesc f7 = FieldDesc::prime_field(7);
    for (int i = 0; i < 200; ++i) {
        Poly f = random_poly(f7, 1 + rng() % 8, rng);
        Poly g = random_poly(f7, 1 + rng() % 4, rng);
        auto [q, r] = divmod(f, g);
        CHECK(q * g + r == f);
        CHECK(r.deg() < g.deg());
        CHECK(exact_div(f * g, g) == f);
    }
    CHECK_THROWS_AS((void)divmod(Poly::t(f7), Poly::zero(f7)), Error);
}

TEST_CASE("gcd pulls out common factors") {
    std::mt19937_64 rng(2);
    FieldDesc f5 = FieldDesc::prime_field(5);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(f5, 1 + rng() % 4, rng);
        Poly b = random_poly(f5, 1 + rng() % 4, rng);
        Poly c = random_poly(f5, 1 + rng() % 3, rng);
        Poly g = gcd(a * c, b * c);
        CHECK(divmod(g, monic(c)).second.is_zero());
        CHECK(divmod(a * c, g).second.is_zero());
        CHECK(divmod(b * c, g).second.is_zero());
    }
}

TEST_CASE("squarefree decomposition reconstructs, including char-p branch") {
    FieldDesc f3 = FieldDesc::prime_field(3);
    Poly t = Poly::t(f3);
    Poly one = Poly::constant(f3, f3.one());
    SUBCASE("(t+1)^3 over F_3 via the p-th-root branch") {
        Poly f = pow(t + one, 3);
        auto sfd = squarefree_decomposition(f);
        REQUIRE(sfd.parts.size() == 1);
        CHECK(sfd.parts[0].first == t + one);
        CHECK(sfd.parts[0].second == 3);
    }
    SUBCASE("random products reconstruct") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 100; ++i) {
            Poly f = random_poly(f3, 1 + rng() % 3, rng);
            Poly g = random_poly(f3, 1 + rng() % 2, rng);
            Poly h = f * f * g;
            auto sfd = squarefree_decomposition(h);
            Poly rec = Poly::constant(f3, sfd.unit);
            for (auto& [part, mult] : sfd.parts) {
                rec = rec * pow(part, mult);
                CHECK(gcd(part, derivative(part)).is_constant());
            }
            CHECK(rec == h);
        }
    }
}

TEST_CASE("p-th roots and p-power degree") {
    FieldDesc f3 = FieldDesc::prime_field(3);
    Poly t = Poly::t(f3);
    Poly cube = pow(t + Poly::constant(f3, f3.from_int(2)), 3);  // t^3+2
    CHECK(is_pth_power(cube));
    CHECK(pth_root(cube) == t + Poly::constant(f3, f3.from_int(2)));
    Poly nine = pow(t + Poly::constant(f3, f3.one()), 9);
    RationalFn rf{nine, Poly::constant(f3, f3.one())};
    CHECK(pth_power_degree(rf) == 2);
    RationalFn rf2{t, Poly::constant(f3, f3.one())};
    CHECK(pth_power_degree(rf2) == 0);
}

TEST_CASE("geometric squarefree part and closure square test") {
    std::mt19937_64 rng(4);
    FieldDesc f5 = FieldDesc::prime_field(5);
    for (int i = 0; i < 100; ++i) {
        Poly f = random_poly(f5, 1 + rng() % 4, rng);
        Poly d = squarefree_part_geometric(f);
        CHECK(gcd(d, derivative(d) + Poly::zero(f5)).is_constant());
        // f * d is a square in the closure
        CHECK(is_square_in_closure(f * d));
        // f is a closure square iff d is constant
        CHECK(is_square_in_closure(f) == d.is_constant());
        CHECK(is_square_in_closure(f * f));
        Poly sq = f * f;
        Poly c2 = scalar_mul(f5.from_int(2), sq);
        CHECK(is_square_in_closure(c2));  // constants are closure squares
    }
}

TEST_CASE("resultant multiplicativity and common-root detection") {
    std::mt19937_64 rng(5);
    FieldDesc f7 = FieldDesc::prime_field(7);
    for (int i = 0; i < 100; ++i) {
        Poly f = random_poly(f7, 1 + rng() % 3, rng);
        Poly g = random_poly(f7, 1 + rng() % 3, rng);
        Poly h = random_poly(f7, 1 + rng() % 3, rng);
        FF lhs = resultant(f, g * h);
        FF rhs = f7.mul(resultant(f, g), resultant(f, h));
        CHECK(lhs == rhs);
        CHECK(resultant(f, g * f) == f7.zero());
    }
}

TEST_CASE("eval and compose consistency") {
    std::mt19937_64 rng(6);
    FieldDesc f7 = FieldDesc::prime_field(7);
    for (int i = 0; i < 50; ++i) {
        Poly f = random_poly(f7, rng() % 5, rng);
        Poly g = random_poly(f7, 1 + rng() % 3, rng);
        FF x{rng() % 7, 0};
        CHECK(eval(compose(f, g), x) == eval(f, eval(g, x)));
    }
}

TEST_CASE("format round trips through the parser") {
    std::mt19937_64 rng(7);
    FieldDesc f5 = FieldDesc::prime_field(5);
    CHECK(format(Poly::from_int_coeffs(f5, {1, 1, 2, 2, 1})) == "t^4+2*t^3+2*t^2+t+1");
    for (int i = 0; i < 50; ++i) {
        Poly f = random_poly(f5, rng() % 6, rng);
        CHECK(parse_poly(format(f), f5) == f);
    }
}

TEST_CASE("lift into the quadratic extension") {
    FieldDesc f3 = FieldDesc::prime_field(3);
    FieldDesc f9 = f3.extension();
    Poly f = Poly::from_int_coeffs(f3, {1, 2, 1});
    Poly lf = lift(f, f9);
    CHECK(lf.fd == f9);
    CHECK(lf.deg() == 2);
    CHECK_THROWS_AS((void)lift(Poly::t(f9), f3), Error);
}
