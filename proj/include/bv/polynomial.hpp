#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bv/rational.hpp"

namespace bv {

/// Dense univariate polynomial over Rational. coeffs[i] is the coefficient
/// of x^i; the highest stored coefficient is nonzero. The zero polynomial
/// stores nothing and has no degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs)
        : coeffs_(coeffs) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    /// c * x^n
    static Polynomial monomial(Nat n, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const { return *this * Rational(-1); }
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return coeffs_ != o.coeffs_; }

    /// Exact value at a.
    Rational eval(const Rational& a) const;
    /// Formal derivative.
    Polynomial derivative() const;
    /// p(a*x + b), by exact expansion of the powers of (a*x + b).
    Polynomial compose_affine(const Rational& a, const Rational& b) const;
    /// p^e by repeated multiplication.
    Polynomial pow(Nat e) const;

    /// Renders in the CLI expression grammar, ascending powers,
    /// e.g. "1 - x + 3/2x^2". Zero renders as "0".
    std::string to_string() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

}  // namespace bv
