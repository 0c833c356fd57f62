#include <doctest.h>

#include <random>

#include "cubegrowth/errors.hpp"
#include "cubegrowth/matrix.hpp"
#include "test_support.hpp"

using namespace cubegrowth;
using ts::P;
using ts::RF;

namespace {

RatMatrix from_rows(const std::vector<std::vector<RationalFunction>>& rows) {
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("segment coefficient matrix times growth matrix is the identity") {
    const RationalFunction cxx = ts::over_1mt2({1});
    const RationalFunction cxy = ts::over_1mt2({0, -1});
    const RatMatrix c = from_rows({{cxx, cxy}, {cxy, cxx}});
    const RatMatrix g = from_rows({{RF({1}), RF({0, 1})}, {RF({0, 1}), RF({1})}});
    CHECK(mat_mul(c, g).is_identity());
    CHECK(mat_mul(g, c).is_identity());
}

TEST_CASE("product with the identity and dimension checks") {
    const RatMatrix a = from_rows({{RF({1, 2}), RF({0, 5}, {1, 1})}, {RF({3}), RF({1}, {2, 1})}});
    CHECK(mat_mul(a, RatMatrix::identity(2)) == a);
    CHECK(mat_mul(RatMatrix::identity(2), a) == a);
    CHECK_FALSE(a.is_identity());
    CHECK(RatMatrix::identity(3).is_identity());
    CHECK_THROWS_AS(mat_mul(a, RatMatrix::identity(3)), DimensionMismatchError);
}

TEST_CASE("1x1 dihedral case") {
    const RatMatrix c = from_rows({{RF({1, -1}, {1, 1})}});
    const RatMatrix g = from_rows({{RF({1, 1}, {1, -1})}});
    CHECK(mat_mul(c, g).is_identity());
}

TEST_CASE("solve of the segment star system") {
    const RatMatrix a = from_rows({{RF({1}), RF({0, 1})}, {RF({0, 1}), RF({1})}});
    const auto x = mat_solve(a, {RF({1}), RF({0})});
    CHECK(x[0] == ts::over_1mt2({1}));
    CHECK(x[1] == ts::over_1mt2({0, -1}));
}

TEST_CASE("solve of the 3x3 path star system") {
    const RationalFunction t = RationalFunction::variable();
    const RationalFunction one(1);
    const RatMatrix a = from_rows({{one, t, t * t}, {t, one, t}, {t * t, t, one}});
    const auto x = mat_solve(a, {RF({0}), RF({1}), RF({0})});
    CHECK(x[0] == ts::over_1mt2({0, -1}));
    CHECK(x[1] == ts::over_1mt2({1, 0, 1}));
    CHECK(x[2] == ts::over_1mt2({0, -1}));
}

TEST_CASE("solve with the identity matrix returns the right-hand side") {
    const std::vector<RationalFunction> b = {RF({1, 2, 3}), RF({0, 5}, {1, 1}), RF({7})};
    CHECK(mat_solve(RatMatrix::identity(3), b) == b);
}

TEST_CASE("singular and mismatched systems are distinguished") {
    const RatMatrix sing = from_rows({{RF({1}), RF({1})}, {RF({1}), RF({1})}});
    CHECK_THROWS_AS(mat_solve(sing, {RF({1}), RF({0})}), SingularMatrixError);
    CHECK_THROWS_AS(mat_solve(RatMatrix::identity(2), {RF({1})}), DimensionMismatchError);
    RatMatrix rect(2, 3);
    CHECK_THROWS_AS(mat_solve(rect, {RF({1}), RF({0})}), DimensionMismatchError);
}

TEST_CASE("random solves substitute back exactly") {
    std::mt19937 rng(2024u);
    std::uniform_int_distribution<int> coeff(-2, 2);
    auto random_rf = [&]() {
        std::vector<Rational> num{Rational(coeff(rng))};
        num.emplace_back(coeff(rng));
        return RationalFunction(Polynomial::from_coeffs(num), P({1, 1}));
    };
    int solved = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3;
        RatMatrix a(n, n);
        std::vector<RationalFunction> b(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a.at(i, j) = random_rf();
            b[static_cast<size_t>(i)] = random_rf();
        }
        std::vector<RationalFunction> x;
        try {
            x = mat_solve(a, b);
        } catch (const SingularMatrixError&) {
            continue;
        }
        for (int i = 0; i < n; ++i) {
            RationalFunction acc;
            for (int j = 0; j < n; ++j) acc += a.at(i, j) * x[static_cast<size_t>(j)];
            CHECK(acc == b[static_cast<size_t>(i)]);
        }
        ++solved;
    }
    CHECK(solved > 20);
}

}
