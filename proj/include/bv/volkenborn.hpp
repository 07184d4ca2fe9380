#pragma once

#include <optional>
#include <string>

#include "bv/polynomial.hpp"
#include "bv/rational.hpp"
#include "bv/report.hpp"

namespace bv {

/// p-adic valuation; infinite exactly for the value 0.
struct Valuation {
    std::optional<long> value;  // nullopt = +infinity

    bool is_infinite() const { return !value.has_value(); }
    bool operator>=(long bound) const { return is_infinite() || *value >= bound; }
    bool operator==(const Valuation& o) const { return value == o.value; }
    std::string to_string() const { return value ? std::to_string(*value) : "inf"; }
};

struct OracleComparison {
    Nat prime = 0;
    Nat depth = 0;
    Rational riemann_value;
    Rational exact_value;
    Valuation discrepancy_valuation;
    long bound = 0;
    bool pass = false;
};

/// Number of direct-summation terms below which riemann_sum also runs the
/// term-by-term path and asserts it equals the closed form.
inline constexpr unsigned long kDefaultBruteForceLimit = 100000;

/// I1(f) = sum_j a_j B_j for f = sum_j a_j x^j.
Rational volkenborn(const Polynomial& f);

/// B_n(shift), computed both as poly_eval(bernoulli_poly(n), shift) and as
/// the integral of (x + shift)^n; the two paths are asserted equal.
Rational volkenborn_shifted_moment(Nat n, const Rational& shift);

/// S_N = p^{-N} sum_{x=0}^{p^N-1} f(x), exact. Uses the Faulhaber closed
/// form per monomial; below brute_force_limit terms the direct sum is also
/// computed and asserted equal.
Rational riemann_sum(const Polynomial& f, Nat p, Nat N,
                     unsigned long brute_force_limit = kDefaultBruteForceLimit);

/// Direct-summation path of the Riemann sum, exposed for tests.
Rational riemann_sum_direct(const Polynomial& f, Nat p, Nat N);

/// sum_{x=0}^{M-1} x^j via Faulhaber's closed form.
Rational power_sum(Nat j, const Int& M);

Valuation padic_valuation(const Rational& r, Nat p);

OracleComparison oracle_compare(const Polynomial& f, Nat p, Nat N,
                                unsigned long brute_force_limit = kDefaultBruteForceLimit);

/// Checks I1(f(x+n)) = I1(f) + sum_{l=0}^{n-1} f'(l). Requires n >= 1.
IdentityReport verify_shift(const Polynomial& f, Nat n);

/// Trial-division primality used to validate CLI input (p <= 10^6).
bool is_prime(Nat p);

}  // namespace bv
