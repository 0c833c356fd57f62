#include <doctest.h>

#include <random>

#include "cubegrowth/errors.hpp"
#include "test_support.hpp"

using namespace cubegrowth;
using ts::P;

TEST_SUITE("polynomial") {

TEST_CASE("construction trims trailing zeros") {
    CHECK(P({1, 2, 0, 0}) == P({1, 2}));
    CHECK(P({0, 0}).is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(P({0, 0, 3}).degree() == 2);
}

TEST_CASE("arithmetic") {
    const Polynomial a = P({1, 2, 1}); // (1+t)^2
    const Polynomial b = P({1, 1});
    CHECK(b * b == a);
    CHECK(a - a == Polynomial());
    CHECK(a + Polynomial() == a);
    CHECK(-b == P({-1, -1}));
    CHECK(b * Rational(3) == P({3, 3}));
}

TEST_CASE("evaluation and composition") {
    const Polynomial f = P({1, 6, 12, 8}); // octahedron f-polynomial
    CHECK(f.eval(Rational(-1)) == Rational(-1));
    CHECK(f.eval(Rational(-1, 2)) == Rational(0));
    // composition with t-1 and -t, used by the Dehn-Sommerville check
    CHECK(f.compose(P({-1, 1})) == P({-1, 6, -12, 8}));
    CHECK(f.compose(P({0, -1})) == P({1, -6, 12, -8}));
    CHECK(P({5}).compose(P({1, 2, 3})) == P({5}));
}

TEST_CASE("reversal and shifting") {
    CHECK(P({1, 0, -2}).reversed() == P({-2, 0, 1}));
    CHECK(P({1, 1}).shifted(2) == P({0, 0, 1, 1}));
    CHECK(Polynomial().reversed().is_zero());
}

TEST_CASE("division") {
    const auto [q, r] = Polynomial::div_rem(P({-1, 0, 0, 1}), P({-1, 1}));
    CHECK(q == P({1, 1, 1}));
    CHECK(r.is_zero());
    CHECK(Polynomial::div_exact(P({1, 0, -1}), P({1, 1})) == P({1, -1}));
    CHECK_THROWS_AS((void)Polynomial::div_exact(P({1, 1, 1}), P({1, 1})), Error);
    CHECK_THROWS_AS((void)Polynomial::div_rem(P({1}), Polynomial()), DivisionByZeroError);
}

TEST_CASE("gcd basics") {
    CHECK(Polynomial::gcd(P({1, 0, -1}), P({1, 1})) == P({1, 1}));
    CHECK(Polynomial::gcd(P({1, 1}), Polynomial()) == P({1, 1}));
    CHECK(Polynomial::gcd(Polynomial(), Polynomial()).is_zero());
    // gcd is monic
    CHECK(Polynomial::gcd(P({0, 2}), P({0, 4})) == P({0, 1}));
}

TEST_CASE("gcd divides both and contains common factors") {
    std::mt19937 rng(20240811u);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_poly = [&](int maxDeg) {
        std::vector<Rational> cs;
        const int d = static_cast<int>(rng() % (maxDeg + 1));
        for (int i = 0; i <= d; ++i) cs.emplace_back(coeff(rng));
        return Polynomial::from_coeffs(cs);
    };
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = random_poly(4);
        const Polynomial b = random_poly(4);
        const Polynomial g = random_poly(3);
        if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
        const Polynomial gg = Polynomial::gcd(a * g, b * g);
        CHECK(Polynomial::div_rem(a * g, gg).second.is_zero());
        CHECK(Polynomial::div_rem(b * g, gg).second.is_zero());
        CHECK(Polynomial::div_rem(gg, Polynomial::gcd(g, g)).second.is_zero());
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("rendering") {
    CHECK(P({1, 0, -2, 1}).to_string() == "1 - 2*t^2 + t^3");
    CHECK(P({0, -1}).to_string() == "-t");
    CHECK(Polynomial().to_string() == "0");
    CHECK(P({1, 4, 4}).to_string() == "1 + 4*t + 4*t^2");
    CHECK(Polynomial::from_coeffs({Rational(1, 2)}).to_string() == "1/2");
}

}
