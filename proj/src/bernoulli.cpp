#include "bv/bernoulli.hpp"

#include <stdexcept>

namespace bv {

BernoulliTable::BernoulliTable(Nat max_index) {
    values_.reserve(max_index + 1);
    values_.push_back(Rational(1));
    // B_n = -(1/(n+1)) * sum_{k<n} C(n+1,k) B_k
    for (Nat n = 1; n <= max_index; ++n) {
        Rational s(0);
        for (Nat k = 0; k < n; ++k)
            s += Rational(binomial(n + 1, k)) * values_[k];
        values_.push_back(-s / Rational(Int(n + 1)));
    }
    // Every identity downstream depends on the B_1 = -1/2 convention;
    // fail loudly if the recurrence ever drifts from it.
    if (max_index >= 1 && values_[1] != Rational(-1, 2))
        throw std::logic_error("BernoulliTable: B_1 != -1/2");
}

Rational bernoulli_number(Nat n) {
    BernoulliTable t(n);
    return t.at(n);
}

Polynomial bernoulli_poly(Nat n) {
    BernoulliTable t(n);
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (Nat k = 0; k <= n; ++k)
        coeffs[n - k] = Rational(binomial(n, k)) * t.at(k);
    return Polynomial(std::move(coeffs));
}

bool von_staudt_clausen_ok(const BernoulliTable& table, Nat n) {
    if (n == 0 || n % 2 != 0) return false;
    Int expected(1);
    for (Nat q = 2; q <= n + 1; ++q) {
        bool prime = q >= 2;
        for (Nat d = 2; d * d <= q; ++d)
            if (q % d == 0) { prime = false; break; }
        if (prime && n % (q - 1) == 0) expected *= Int(q);
    }
    return table.at(n).denominator() == expected;
}

}  // namespace bv
