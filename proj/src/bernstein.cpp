#include "bv/bernstein.hpp"

#include <stdexcept>

namespace bv {

Polynomial bernstein_basis(Nat k, Nat n) {
    if (n < k) return Polynomial();
    Polynomial xk = Polynomial::monomial(k);
    Polynomial one_minus_x({Rational(1), Rational(-1)});
    return xk * one_minus_x.pow(n - k) * Rational(binomial(n, k));
}

Polynomial bernstein_operator(const Polynomial& f, Nat n) {
    if (n == 0) throw std::invalid_argument("bernstein_operator: n must be >= 1");
    Polynomial r;
    for (Nat k = 0; k <= n; ++k) {
        Rational fv = f.eval(Rational(Int(k), Int(n)));
        if (!fv.is_zero()) r = r + bernstein_basis(k, n) * fv;
    }
    return r;
}

ExpSeries generating_series(Nat k, Nat order) {
    // Raw coefficients of t^m: the exponential factor contributes
    // (1-x)^m / m!, the prefactor t^k x^k / k! is a one-term series.
    // Convolve, then renormalize raw t^n coefficients by n!.
    std::vector<Polynomial> exp_raw(order + 1);
    Polynomial one_minus_x({Rational(1), Rational(-1)});
    Polynomial pw = Polynomial::constant(Rational(1));
    Int fact(1);
    for (Nat m = 0; m <= order; ++m) {
        if (m > 0) {
            pw = pw * one_minus_x;
            fact *= Int(m);
        }
        exp_raw[m] = pw * (Rational(1) / Rational(fact));
    }

    Int kfact(1);
    for (Nat i = 2; i <= k; ++i) kfact *= Int(i);
    Polynomial pre = Polynomial::monomial(k) * (Rational(1) / Rational(kfact));

    ExpSeries s;
    s.order = order;
    s.coeffs.resize(order + 1);
    Int nfact(1);
    for (Nat n = 0; n <= order; ++n) {
        if (n > 0) nfact *= Int(n);
        Polynomial raw;  // coefficient of t^n in the product
        if (n >= k) raw = pre * exp_raw[n - k];
        s.coeffs[n] = raw * Rational(nfact);
    }
    return s;
}

IdentityReport genfun_check(Nat k, Nat order) {
    ExpSeries s = generating_series(k, order);
    IdentityReport r;
    r.identity = "genfun";
    // The basis convention is part of the report header: the printed form of
    // the basis uses (1-x)^{n-k}, not the alternating (x-1)^{n-k} variant.
    r.params = {{"k", std::to_string(k)},
                {"order", std::to_string(order)},
                {"basis", "C(n,k) x^k (1-x)^(n-k)"}};
    r.pass = true;
    std::string lhs, rhs;
    for (Nat n = 0; n <= order; ++n) {
        Polynomial expect = bernstein_basis(k, n);
        if (s.coeffs[n] != expect) {
            r.pass = false;
            r.witness = "series coefficient at t^" + std::to_string(n) +
                        "/n! is " + s.coeffs[n].to_string() + ", basis gives " +
                        expect.to_string();
            r.lhs = s.coeffs[n].to_string();
            r.rhs = expect.to_string();
            return r;
        }
    }
    r.lhs = s.coeffs[order].to_string();
    r.rhs = r.lhs;
    return r;
}

}  // namespace bv
