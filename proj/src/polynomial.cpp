#include "bv/polynomial.hpp"

#include <algorithm>

namespace bv {

Polynomial Polynomial::monomial(Nat n, const Rational& c) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> cs(n + 1, Rational(0));
    cs[n] = c;
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> r(coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * c;
    return Polynomial(std::move(r));
}

Rational Polynomial::eval(const Rational& a) const {
    Rational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * a + *it;
    return v;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> r(coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r[i - 1] = coeffs_[i] * Rational(Int(i));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
    // Accumulate coeff(i) * (a*x + b)^i with the power expanded incrementally.
    Polynomial result;
    Polynomial lin({b, a});
    Polynomial power = Polynomial::constant(Rational(1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) power = power * lin;
        if (!coeffs_[i].is_zero()) result = result + power * coeffs_[i];
    }
    return result;
}

Polynomial Polynomial::pow(Nat e) const {
    Polynomial r = Polynomial::constant(Rational(1));
    for (Nat i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational abs = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = abs == Rational(1);
        if (i == 0 || !unit) out += abs.to_string();
        if (i >= 1) {
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace bv
