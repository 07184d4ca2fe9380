#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bv {

using Int = mpz_class;
using Nat = std::uint64_t;

/// Exact rational scalar. Always in canonical form: denominator >= 1,
/// gcd(|num|, den) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Parses "num" or "num/den", base 10, optional leading '-'.
    static Rational from_string(const std::string& s);

    const Int numerator() const { return q_.get_num(); }
    const Int denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    /// "num/den", or just "num" when den = 1.
    std::string to_string() const;

private:
    explicit Rational(const mpq_class& q) : q_(q) {}
    mpq_class q_;  // GMP keeps mpq canonical through arithmetic
};

/// n choose k as an exact integer; 0 when k > n.
Int binomial(Nat n, Nat k);

/// (-1)^n as a Rational.
inline Rational alt_sign(Nat n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace bv
