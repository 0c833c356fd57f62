#include <doctest.h>

#include <random>

#include "cubegrowth/errors.hpp"
#include "test_support.hpp"

using namespace cubegrowth;
using ts::P;
using ts::RF;

TEST_SUITE("rational_function") {

TEST_CASE("canonical form") {
    // common factors cancel
    CHECK(RF({1, 0, -1}, {1, 0, -1}) == RF({1}));
    // sign convention: lowest denominator coefficient positive
    CHECK(RF({1}, {-1, 1}) == RF({-1}, {1, -1}));
    CHECK(RF({1}, {-1, 1}).den().coeff(0) == Rational(1));
    // joint integer content is stripped
    CHECK(RF({2, 2}, {4}) == RF({1, 1}, {2}));
    // rational inputs scale to integers
    CHECK(RationalFunction(Rational(1, 2)).to_string() == "(1)/(2)");
    CHECK_THROWS_AS(RationalFunction(P({1}), Polynomial()), DivisionByZeroError);
}

TEST_CASE("arithmetic cancellations from the segment coefficients") {
    const RationalFunction a = RF({1}, {1, 0, -1});      // 1/(1-t^2)
    const RationalFunction mt = RF({0, -1}, {1, 0, -1}); // -t/(1-t^2)
    // 1/(1-t^2) + (-t/(1-t^2)) * t = 1
    CHECK(a + mt * RationalFunction::variable() == RationalFunction(1));
    // squaring
    CHECK(mt * mt == RationalFunction(P({0, 0, 1}), ts::one_minus_t2() * ts::one_minus_t2()));
}

TEST_CASE("division and common denominators") {
    CHECK(RF({1}, {1, 1}) + RF({0, 1}, {1, 1}) == RationalFunction(1));
    CHECK(RF({1}) / RF({1, 1}) == RF({1}, {1, 1}));
    CHECK_THROWS_AS(RF({1}) / RationalFunction(), DivisionByZeroError);
    const RationalFunction r = RF({1, 3}, {2, 0, 5});
    CHECK(r - r == RationalFunction());
    CHECK(r / r == RationalFunction(1));
}

TEST_CASE("poly_subst") {
    const Polynomial p = P({1, 2}); // 1 + 2t
    CHECK(poly_subst(p, RF({0, -1}, {1, 1})) == RF({1, -1}, {1, 1}));
    CHECK(poly_subst(p, RF({0, 0, 1}, {1, 0, -1})) == RF({1, 0, 1}, {1, 0, -1}));
    CHECK(poly_subst(P({1}), RF({3, 7}, {1, 1, 5})) == RationalFunction(1));
}

TEST_CASE("series") {
    // growth of the infinite dihedral group: oracle below is a line count
    const std::vector<Rational> s = RF({1, 1}, {1, -1}).series(4);
    std::vector<Rational> line;
    for (int k = 0; k <= 4; ++k) line.emplace_back(k == 0 ? 1 : 2); // points of Z at distance k
    CHECK(s == line);
    CHECK(RF({1}, {1, 0, -1}).series(4) == std::vector<Rational>{1, 0, 1, 0, 1});
    CHECK(RF({1}).series(2) == std::vector<Rational>{1, 0, 0});
    CHECK_THROWS_AS(RF({1}, {0, 1}).series(3), PreconditionError);
}

TEST_CASE("inverted variable") {
    CHECK(RF({1, 1}, {1, -1}).inverted_variable() == -RF({1, 1}, {1, -1}));
    CHECK(RF({0, 1}).inverted_variable() == RF({1}, {0, 1}));
    const RationalFunction self = RationalFunction(P({0, 0, 1}), ts::one_minus_t2() * ts::one_minus_t2());
    CHECK(self.inverted_variable() == self);
    CHECK(RationalFunction().inverted_variable().is_zero());
}

TEST_CASE("pow") {
    const RationalFunction mt = RF({0, -1}, {1, 0, -1});
    CHECK(mt.pow(0) == RationalFunction(1));
    CHECK(mt.pow(2) == mt * mt);
    CHECK(mt.pow(3) == mt * mt * mt);
}

TEST_CASE("field axioms on random small values") {
    std::mt19937 rng(7u);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_rf = [&]() {
        auto poly = [&](int maxDeg) {
            std::vector<Rational> cs;
            const int d = static_cast<int>(rng() % (maxDeg + 1));
            for (int i = 0; i <= d; ++i) cs.emplace_back(coeff(rng));
            return Polynomial::from_coeffs(cs);
        };
        Polynomial den;
        while (den.is_zero()) den = poly(3);
        return RationalFunction(poly(3), den);
    };
    for (int trial = 0; trial < 120; ++trial) {
        const RationalFunction a = random_rf(), b = random_rf(), c = random_rf();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RationalFunction());
        CHECK(a + b == b + a);
        if (!a.is_zero()) {
            CHECK(a / a == RationalFunction(1));
            CHECK(a.inverted_variable().inverted_variable() == a);
        }
    }
}

TEST_CASE("series of a product is the truncated convolution") {
    std::mt19937 rng(99u);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_ps = [&]() {
        std::vector<Rational> num, den;
        den.emplace_back(1 + static_cast<int>(rng() % 3)); // nonzero at t=0
        for (int i = 0; i < 3; ++i) {
            num.emplace_back(coeff(rng));
            den.emplace_back(coeff(rng));
        }
        return RationalFunction(Polynomial::from_coeffs(num), Polynomial::from_coeffs(den));
    };
    const int n = 8;
    for (int trial = 0; trial < 60; ++trial) {
        const RationalFunction r = random_ps(), s = random_ps();
        const auto rs = r.series(n), ss = s.series(n), ps = (r * s).series(n);
        for (int k = 0; k <= n; ++k) {
            Rational acc(0);
            for (int j = 0; j <= k; ++j) acc += rs[static_cast<size_t>(j)] * ss[static_cast<size_t>(k - j)];
            CHECK(acc == ps[static_cast<size_t>(k)]);
        }
    }
}

TEST_CASE("canonical rendering") {
    CHECK(RF({1}, {1, 0, -1}).to_string() == "(1)/(1 - t^2)");
    CHECK(RF({0, -1}, {1, 0, -2, 0, 1}).to_string() == "(-t)/(1 - 2*t^2 + t^4)");
    CHECK(RationalFunction().to_string() == "(0)/(1)");
    CHECK(RationalFunction(7).to_string() == "(7)/(1)");
}

}
