#include "cubegrowth/rational_function.hpp"

#include <algorithm>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::div_exact(num_, g);
        den_ = Polynomial::div_exact(den_, g);
    }
    // Scale so both polynomials are integral with coprime joint content.
    Integer lcm(1);
    for (const auto& c : num_.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : den_.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    if (lcm != 1) {
        num_ *= Rational(lcm);
        den_ *= Rational(lcm);
    }
    Integer content(0);
    for (const auto& c : num_.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
    for (const auto& c : den_.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
    if (content > 1) {
        Rational inv(Integer(1), content);
        num_ *= inv;
        den_ *= inv;
    }
    // Sign convention: lowest-order nonzero denominator coefficient positive.
    for (const auto& c : den_.coeffs()) {
        if (c == 0) continue;
        if (c < 0) {
            num_ *= Rational(-1);
            den_ *= Rational(-1);
        }
        break;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DivisionByZeroError("division by the zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

RationalFunction RationalFunction::pow(unsigned e) const {
    RationalFunction acc(1);
    RationalFunction base(*this);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

RationalFunction RationalFunction::inverted_variable() const {
    if (is_zero()) return RationalFunction();
    const int n = num_.degree();
    const int m = den_.degree();
    Polynomial rn = num_.reversed();
    Polynomial rd = den_.reversed();
    if (m >= n)
        return RationalFunction(rn.shifted(m - n), rd);
    return RationalFunction(rn, rd.shifted(n - m));
}

std::vector<Rational> RationalFunction::series(int n) const {
    const Rational d0 = den_.coeff(0);
    if (d0 == 0)
        throw PreconditionError("series expansion requires a denominator with nonzero constant term");
    std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
        Rational acc = num_.coeff(k);
        for (int j = 1; j <= std::min(k, den_.degree()); ++j)
            acc -= den_.coeff(j) * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = acc / d0;
    }
    return out;
}

std::string RationalFunction::to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction poly_subst(const Polynomial& p, const RationalFunction& r) {
    RationalFunction acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * r + RationalFunction(*it);
    return acc;
}

} // namespace cubegrowth
