#include "cubegrowth/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubegrowth/errors.hpp"

namespace cubegrowth {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int k) {
    Polynomial p;
    if (c == 0) return p;
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Rational(0));
    p.coeffs_.back() = c;
    return p;
}

Polynomial Polynomial::from_coeffs(std::vector<Rational> cs) {
    Polynomial p;
    p.coeffs_ = std::move(cs);
    p.trim();
    return p;
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rational Polynomial::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

bool Polynomial::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return is_integral(c); });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial::from_coeffs(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial(*it);
    return acc;
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> rev(coeffs_.rbegin(), coeffs_.rend());
    return from_coeffs(std::move(rev));
}

Polynomial Polynomial::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> out(static_cast<size_t>(k), Rational(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return from_coeffs(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::div_rem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + b.degree())] / lead;
        quo[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * b.coeffs_[static_cast<size_t>(j)];
    }
    return {from_coeffs(std::move(quo)), from_coeffs(std::move(rem))};
}

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = div_rem(a, b);
    if (!r.is_zero()) throw Error("polynomial division was not exact");
    return q;
}

namespace {

// Primitive integer image of a rational polynomial: scale out the lcm of
// coefficient denominators, then the gcd of numerators; leading entry > 0.
std::vector<Integer> primitive_int(const Polynomial& p) {
    Integer lcm(1);
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    Integer content(0);
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    if (!out.empty() && out.back() < 0)
        for (auto& v : out) v = -v;
    return out;
}

void strip_content(std::vector<Integer>& p) {
    Integer content(0);
    for (const auto& v : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1)
        for (auto& v : p) v /= content;
    if (!p.empty() && p.back() < 0)
        for (auto& v : p) v = -v;
}

// Pseudo-remainder of integer polynomials: a scaled by powers of lead(b)
// so every elimination step stays integral. Callers strip content anyway,
// so the exact scaling power does not matter.
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    const Integer lb = b.back();
    while (a.size() >= b.size()) {
        const Integer top = a.back();
        const size_t offset = a.size() - b.size();
        for (auto& v : a) v *= lb;
        for (size_t j = 0; j < b.size(); ++j) a[offset + j] -= top * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

} // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return Polynomial();
    if (a.is_zero()) return div_exact(b, Polynomial(b.leading()));
    if (b.is_zero()) return div_exact(a, Polynomial(a.leading()));

    std::vector<Integer> u = primitive_int(a);
    std::vector<Integer> v = primitive_int(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<Integer> r = pseudo_rem(u, v);
        strip_content(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> cs;
    cs.reserve(u.size());
    for (const auto& x : u) cs.emplace_back(x);
    Polynomial g = from_coeffs(std::move(cs));
    return div_exact(g, Polynomial(g.leading())); // monic
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        Rational ac = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = (ac == 1) && k > 0;
        if (!unit) out += rational_to_string(ac);
        if (k > 0) {
            if (!unit) out += "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace cubegrowth
