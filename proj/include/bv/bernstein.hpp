#pragma once

#include <vector>

#include "bv/polynomial.hpp"
#include "bv/rational.hpp"
#include "bv/report.hpp"

namespace bv {

/// Truncated exponential power series in t with polynomial coefficients:
/// sum_{n=0}^{order} c_n(x) t^n / n!.
struct ExpSeries {
    Nat order = 0;
    std::vector<Polynomial> coeffs;  // coeffs[n] = c_n(x), exactly order+1 entries
};

/// C(n,k) x^k (1-x)^{n-k}; the zero polynomial when n < k.
Polynomial bernstein_basis(Nat k, Nat n);

/// sum_{k=0}^n f(k/n) * basis(k,n). Requires n >= 1.
Polynomial bernstein_operator(const Polynomial& f, Nat n);

/// Truncation of t^k e^{(1-x)t} x^k / k! to the given order, built by honest
/// truncated-series multiplication so genfun_check is a real cross-check.
ExpSeries generating_series(Nat k, Nat order);

/// Compares the generating series coefficients against bernstein_basis for
/// every n <= order.
IdentityReport genfun_check(Nat k, Nat order);

}  // namespace bv
