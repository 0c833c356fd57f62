#pragma once

#include <string>
#include <vector>

#include "cubegrowth/polynomial.hpp"

namespace cubegrowth {

/// Exact ratio of polynomials in t, kept in canonical form: numerator and
/// denominator are coprime integer-coefficient polynomials with no common
/// integer content, and the denominator's lowest-order nonzero coefficient
/// is positive. Equal values have identical representations.
class RationalFunction {
  public:
    RationalFunction() : den_(1) {}
    RationalFunction(long v) : num_(v), den_(1) {}
    RationalFunction(const Rational& v) : num_(v), den_(1) { canonicalize(); }
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) { canonicalize(); }
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction pow(unsigned e) const;

    /// r(1/t): reverse coefficient sequences and rebalance by a power of t.
    /// Zero maps to zero.
    RationalFunction inverted_variable() const;

    /// First n+1 Taylor coefficients at t = 0, exact. Requires the
    /// denominator to have nonzero constant term.
    std::vector<Rational> series(int n) const;

    /// Canonical "(num)/(den)" rendering with integer coefficients.
    std::string to_string() const;

  private:
    Polynomial num_, den_;
    void canonicalize();
};

/// Exact p(r) for a polynomial p and rational function r.
RationalFunction poly_subst(const Polynomial& p, const RationalFunction& r);

} // namespace cubegrowth
