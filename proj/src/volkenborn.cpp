#include "bv/volkenborn.hpp"

#include <stdexcept>

#include "bv/bernoulli.hpp"

namespace bv {

bool is_prime(Nat p) {
    if (p < 2 || p > 1000000) return false;
    for (Nat d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

static void require_prime(Nat p, const char* who) {
    if (!is_prime(p))
        throw std::invalid_argument(std::string(who) + ": p must be a prime <= 10^6");
}

Rational volkenborn(const Polynomial& f) {
    if (f.is_zero()) return Rational(0);
    BernoulliTable table(*f.degree());
    Rational r(0);
    for (std::size_t j = 0; j < f.coeffs().size(); ++j)
        r += f.coeff(j) * table.at(j);
    return r;
}

Rational volkenborn_shifted_moment(Nat n, const Rational& shift) {
    Rational via_poly = bernoulli_poly(n).eval(shift);
    Rational via_integral =
        volkenborn(Polynomial::monomial(n).compose_affine(Rational(1), shift));
    if (via_poly != via_integral)
        throw std::logic_error("volkenborn_shifted_moment: paths disagree at n=" +
                               std::to_string(n));
    return via_poly;
}

Rational power_sum(Nat j, const Int& M) {
    // sum_{x=0}^{M-1} x^j = (1/(j+1)) sum_{i=0}^{j} C(j+1,i) B_i M^{j+1-i}
    BernoulliTable table(j);
    Rational s(0);
    for (Nat i = 0; i <= j; ++i) {
        Int mpow;
        mpz_pow_ui(mpow.get_mpz_t(), M.get_mpz_t(), j + 1 - i);
        s += Rational(binomial(j + 1, i)) * table.at(i) * Rational(mpow);
    }
    return s / Rational(Int(j + 1));
}

Rational riemann_sum_direct(const Polynomial& f, Nat p, Nat N) {
    require_prime(p, "riemann_sum");
    Int M;
    mpz_ui_pow_ui(M.get_mpz_t(), p, N);
    // sum_j a_j * (sum_x x^j), power chain per x
    std::size_t deg = f.is_zero() ? 0 : *f.degree();
    std::vector<Int> sums(deg + 1, Int(0));
    for (Int x(0); x < M; ++x) {
        Int pw(1);
        for (std::size_t j = 0; j <= deg; ++j) {
            sums[j] += pw;
            pw *= x;
        }
    }
    Rational total(0);
    for (std::size_t j = 0; j <= deg; ++j)
        total += f.coeff(j) * Rational(sums[j]);
    return total / Rational(M);
}

Rational riemann_sum(const Polynomial& f, Nat p, Nat N,
                     unsigned long brute_force_limit) {
    require_prime(p, "riemann_sum");
    if (N < 1) throw std::invalid_argument("riemann_sum: N must be >= 1");
    Int M;
    mpz_ui_pow_ui(M.get_mpz_t(), p, N);
    Rational total(0);
    std::size_t deg = f.is_zero() ? 0 : *f.degree();
    for (std::size_t j = 0; j <= deg; ++j) {
        Rational a = f.coeff(j);
        if (!a.is_zero()) total += a * power_sum(j, M);
    }
    Rational closed = total / Rational(M);
    if (M <= Int(brute_force_limit)) {
        Rational direct = riemann_sum_direct(f, p, N);
        if (direct != closed)
            throw std::logic_error("riemann_sum: Faulhaber and direct paths disagree");
    }
    return closed;
}

Valuation padic_valuation(const Rational& r, Nat p) {
    require_prime(p, "padic_valuation");
    if (r.is_zero()) return Valuation{std::nullopt};
    Int pz(static_cast<unsigned long>(p));
    Int tmp;
    Int num = r.numerator();
    if (num < 0) num = -num;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
    Int den = r.denominator();
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
    return Valuation{vn - vd};
}

OracleComparison oracle_compare(const Polynomial& f, Nat p, Nat N,
                                unsigned long brute_force_limit) {
    require_prime(p, "oracle_compare");
    OracleComparison c;
    c.prime = p;
    c.depth = N;
    c.riemann_value = riemann_sum(f, p, N, brute_force_limit);
    c.exact_value = volkenborn(f);
    c.discrepancy_valuation = padic_valuation(c.riemann_value - c.exact_value, p);

    // bound = N - max_j v_p(j+1) - 1 + min(0, min_j v_p(a_j)), over the
    // indices j >= 1 with a_j != 0. The -1 covers the squarefree Bernoulli
    // denominators in the Faulhaber correction terms.
    long max_vj = 0;
    long min_va = 0;
    if (!f.is_zero()) {
        for (std::size_t j = 1; j < f.coeffs().size(); ++j) {
            Rational a = f.coeff(j);
            if (a.is_zero()) continue;
            Valuation vj = padic_valuation(Rational(Int(j + 1)), p);
            if (*vj.value > max_vj) max_vj = *vj.value;
            Valuation va = padic_valuation(a, p);
            if (*va.value < min_va) min_va = *va.value;
        }
    }
    c.bound = static_cast<long>(N) - max_vj - 1 + min_va;
    c.pass = c.discrepancy_valuation >= c.bound;
    return c;
}

IdentityReport verify_shift(const Polynomial& f, Nat n) {
    if (n == 0) throw std::invalid_argument("verify_shift: n must be >= 1");
    Rational lhs = volkenborn(f.compose_affine(Rational(1), Rational(Int(n))));
    Rational rhs = volkenborn(f);
    Polynomial fp = f.derivative();
    for (Nat l = 0; l < n; ++l) rhs += fp.eval(Rational(Int(l)));

    IdentityReport r;
    r.identity = "shift";
    r.params = {{"f", f.to_string()}, {"n", std::to_string(n)}};
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.pass = lhs == rhs;
    if (!r.pass)
        r.witness = "I1(f(x+n)) = " + r.lhs + " but I1(f) + sum f'(l) = " + r.rhs;
    return r;
}

}  // namespace bv
