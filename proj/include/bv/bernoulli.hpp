#pragma once

#include <vector>

#include "bv/polynomial.hpp"
#include "bv/rational.hpp"

namespace bv {

/// Exact Bernoulli numbers B_0..B_max in the convention B_1 = -1/2.
/// Immutable after construction.
class BernoulliTable {
public:
    explicit BernoulliTable(Nat max_index);

    Nat max_index() const { return values_.size() - 1; }
    const Rational& at(Nat n) const { return values_.at(n); }
    const std::vector<Rational>& values() const { return values_; }

private:
    std::vector<Rational> values_;
};

/// Convenience wrapper over a table large enough for n.
Rational bernoulli_number(Nat n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}; degree n, monic.
Polynomial bernoulli_poly(Nat n);

/// von Staudt-Clausen structure: for even n >= 2 the denominator of B_n is
/// the squarefree product of primes q with (q-1) | n. Returns true when the
/// table entry matches.
bool von_staudt_clausen_ok(const BernoulliTable& table, Nat n);

}  // namespace bv
