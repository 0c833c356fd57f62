#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubegrowth/rational.hpp"

namespace cubegrowth {

/// Dense univariate polynomial in the formal variable t with exact rational
/// coefficients, stored in ascending degree. The zero polynomial is the empty
/// coefficient sequence; otherwise the top coefficient is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }

    static Polynomial variable() { return monomial(1, 1); }
    static Polynomial monomial(const Rational& c, int k);
    static Polynomial from_coeffs(std::vector<Rational> cs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;
    bool has_integer_coeffs() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Horner evaluation at an exact rational point.
    Rational eval(const Rational& x) const;
    /// p(inner(t)), exact.
    Polynomial compose(const Polynomial& inner) const;
    /// Coefficient reversal: t^deg * p(1/t). Zero maps to zero.
    Polynomial reversed() const;
    /// p * t^k.
    Polynomial shifted(int k) const;

    /// Euclidean division; b must be nonzero.
    static std::pair<Polynomial, Polynomial> div_rem(const Polynomial& a, const Polynomial& b);
    /// Exact quotient; throws if the remainder is nonzero.
    static Polynomial div_exact(const Polynomial& a, const Polynomial& b);
    /// Monic gcd (primitive remainder sequence over the integers inside).
    /// gcd(0,0) = 0.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// Ascending-degree rendering, e.g. "1 - 2*t^2 + t^4"; "0" for zero.
    std::string to_string() const;

  private:
    std::vector<Rational> coeffs_;
    void trim();
};

} // namespace cubegrowth
