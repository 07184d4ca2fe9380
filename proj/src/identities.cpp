#include "bv/identities.hpp"

#include <stdexcept>

#include "bv/bernoulli.hpp"
#include "bv/bernstein.hpp"
#include "bv/volkenborn.hpp"

namespace bv {

namespace {

IdentityReport make_report(std::string id,
                           std::vector<std::pair<std::string, std::string>> params,
                           const Rational& lhs, const Rational& rhs,
                           std::optional<Rational> direct = std::nullopt) {
    IdentityReport r;
    r.identity = std::move(id);
    r.params = std::move(params);
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.pass = lhs == rhs;
    if (direct) {
        r.direct = direct->to_string();
        if (r.pass && lhs != *direct) {
            r.pass = false;
            r.witness = "closed forms agree at " + r.lhs +
                        " but direct integration gives " + r.direct.value();
        }
    }
    if (!r.pass && !r.witness)
        r.witness = "lhs = " + r.lhs + ", rhs = " + r.rhs;
    return r;
}

// Closed form for Bernstein products: prod C(n_i,k_i)^{m_i} *
// sum_{l=0}^{D-K} C(D-K,l) (-1)^l B_{K+l} with D = sum n_i m_i, K = sum k_i m_i.
Rational product_closed_form(const std::vector<BernsteinFactor>& spec) {
    Nat total_deg = 0, total_k = 0;
    Rational prefactor(1);
    for (const auto& f : spec) {
        total_deg += f.degree * f.power;
        total_k += f.k * f.power;
        Rational b(binomial(f.degree, f.k));
        for (Nat m = 0; m < f.power; ++m) prefactor *= b;
    }
    Nat span = total_deg - total_k;
    BernoulliTable table(total_deg);
    Rational s(0);
    for (Nat l = 0; l <= span; ++l)
        s += alt_sign(l) * Rational(binomial(span, l)) * table.at(total_k + l);
    return prefactor * s;
}

Rational product_direct_integral(const std::vector<BernsteinFactor>& spec) {
    Polynomial prod = Polynomial::constant(Rational(1));
    for (const auto& f : spec)
        prod = prod * bernstein_basis(f.k, f.degree).pow(f.power);
    return volkenborn(prod);
}

std::string spec_to_string(const std::vector<BernsteinFactor>& spec) {
    std::string s;
    for (const auto& f : spec) {
        if (!s.empty()) s += ",";
        s += "(" + std::to_string(f.k) + "," + std::to_string(f.degree) + "," +
             std::to_string(f.power) + ")";
    }
    return s;
}

}  // namespace

IdentityReport integral_bernstein_two_ways(Nat k, Nat n) {
    if (k > n) throw std::invalid_argument("integral_bernstein_two_ways: requires k <= n");
    BernoulliTable table(n);
    Rational pre(binomial(n, k));

    Rational a(0);  // C(n,k) sum_j C(n-k,j) (-1)^{n-k-j} B_{n-j}
    for (Nat j = 0; j <= n - k; ++j)
        a += Rational(binomial(n - k, j)) * alt_sign(n - k - j) * table.at(n - j);
    a *= pre;

    Rational b(0);  // C(n,k) sum_j C(k,j) (-1)^{k-j} sum_l C(n-j,l) (-1)^l B_l
    for (Nat j = 0; j <= k; ++j) {
        Rational inner(0);
        for (Nat l = 0; l <= n - j; ++l)
            inner += Rational(binomial(n - j, l)) * alt_sign(l) * table.at(l);
        b += Rational(binomial(k, j)) * alt_sign(k - j) * inner;
    }
    b *= pre;

    Rational direct = volkenborn(bernstein_basis(k, n));
    return make_report("two-ways",
                       {{"k", std::to_string(k)}, {"n", std::to_string(n)}},
                       a, b, direct);
}

IdentityReport verify_prop_2_1(Nat n, Nat k) {
    if (k > n) throw std::invalid_argument("verify_prop_2_1: requires k <= n");
    BernoulliTable table(n);

    Rational lhs(0);
    for (Nat j = 0; j <= n - k; ++j)
        lhs += Rational(binomial(n - k, j)) * alt_sign(n - k - j) * table.at(n - j);

    Rational rhs(0);
    for (Nat j = 0; j <= k; ++j) {
        Rational inner(0);
        for (Nat l = 0; l <= n - j; ++l)
            inner += Rational(binomial(n - j, l)) * alt_sign(l) * table.at(l);
        rhs += Rational(binomial(k, j)) * alt_sign(k - j) * inner;
    }

    // Cross-check: scaled by C(n,k), both sides equal the direct integral.
    Rational direct = volkenborn(bernstein_basis(k, n));
    Rational scaled = lhs * Rational(binomial(n, k));
    auto r = make_report("prop-2-1",
                         {{"n", std::to_string(n)}, {"k", std::to_string(k)}},
                         lhs, rhs);
    r.direct = direct.to_string();
    if (r.pass && scaled != direct) {
        r.pass = false;
        r.witness = "C(n,k)*lhs = " + scaled.to_string() +
                    " but direct integration gives " + r.direct.value();
    }
    return r;
}

IdentityReport verify_thm_2_2(Nat n) {
    if (n < 2)
        throw std::invalid_argument(
            "verify_thm_2_2: the identity requires n > 1 (at n = 1 it is false: "
            "I1(1-x) = 3/2 but I1(x) + 1 = 1/2)");
    Polynomial one_minus_x({Rational(1), Rational(-1)});
    Rational lhs = volkenborn(one_minus_x.pow(n));
    Rational rhs = volkenborn(Polynomial::monomial(n)) + Rational(Int(n));
    return make_report("thm-2-2", {{"n", std::to_string(n)}}, lhs, rhs);
}

IdentityReport thm_2_2_boundary_diagnostic() {
    Polynomial one_minus_x({Rational(1), Rational(-1)});
    Rational lhs = volkenborn(one_minus_x);
    Rational rhs = volkenborn(Polynomial::monomial(1)) + Rational(1);
    IdentityReport r = make_report("thm-2-2", {{"n", "1"}}, lhs, rhs);
    r.witness = "hypothesis n > 1 is sharp: at n = 1, I1(1-x) = " + r.lhs +
                " while I1(x) + 1 = " + r.rhs;
    return r;
}

IdentityReport verify_bn2(Nat n) {
    if (n < 2) throw std::invalid_argument("verify_bn2: requires n >= 2");
    Rational lhs = bernoulli_poly(n).eval(Rational(2));
    Rational rhs = bernoulli_number(n) + Rational(Int(n));
    return make_report("bn2", {{"n", std::to_string(n)}}, lhs, rhs);
}

IdentityReport verify_reflection(Nat n) {
    Polynomial bn = bernoulli_poly(n);
    Polynomial lhs = bn * alt_sign(n);
    Polynomial rhs = bn.compose_affine(Rational(-1), Rational(1));
    IdentityReport r;
    r.identity = "reflection";
    r.params = {{"n", std::to_string(n)}};
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.pass = lhs == rhs;
    if (!r.pass)
        r.witness = "(-1)^n B_n(x) = " + r.lhs + " but B_n(1-x) = " + r.rhs;
    return r;
}

IdentityReport verify_cor_2_3(Nat n, Nat k) {
    if (k < 2 || k > n)
        throw std::invalid_argument("verify_cor_2_3: requires k > 1 and k <= n");
    Polynomial integrand =
        Polynomial::monomial(n - k) *
        Polynomial({Rational(1), Rational(-1)}).pow(k);
    Rational lhs = volkenborn(integrand);

    BernoulliTable table(n);
    Rational rhs(0);
    for (Nat l = 0; l <= n - k; ++l)
        rhs += Rational(binomial(n - k, l)) * alt_sign(l) *
               (table.at(l + k) + Rational(Int(l + k)));
    return make_report("cor-2-3",
                       {{"n", std::to_string(n)}, {"k", std::to_string(k)}},
                       lhs, rhs);
}

IdentityReport verify_thm_2_4(Nat k, const std::vector<Nat>& degrees) {
    std::vector<BernsteinFactor> spec;
    for (Nat n : degrees) {
        if (n < k) throw std::invalid_argument("verify_thm_2_4: requires every degree >= k");
        spec.push_back({k, n, 1});
    }
    Rational lhs = product_direct_integral(spec);
    Rational rhs = product_closed_form(spec);
    return make_report("thm-2-4",
                       {{"k", std::to_string(k)}, {"spec", spec_to_string(spec)}},
                       lhs, rhs);
}

IdentityReport verify_thm_2_5(Nat k, const std::vector<std::pair<Nat, Nat>>& spec) {
    std::vector<BernsteinFactor> full;
    for (const auto& [n, m] : spec) {
        if (n < k) throw std::invalid_argument("verify_thm_2_5: requires every degree >= k");
        if (m < 1) throw std::invalid_argument("verify_thm_2_5: requires every power >= 1");
        full.push_back({k, n, m});
    }
    Rational lhs = product_direct_integral(full);
    Rational rhs = product_closed_form(full);
    return make_report("thm-2-5",
                       {{"k", std::to_string(k)}, {"spec", spec_to_string(full)}},
                       lhs, rhs);
}

IdentityReport verify_thm_2_6(const std::vector<BernsteinFactor>& spec) {
    for (const auto& f : spec) {
        if (f.degree < f.k)
            throw std::invalid_argument("verify_thm_2_6: requires every degree >= its k");
        if (f.power < 1)
            throw std::invalid_argument("verify_thm_2_6: requires every power >= 1");
    }
    Rational lhs = product_direct_integral(spec);
    Rational rhs = product_closed_form(spec);
    return make_report("thm-2-6", {{"spec", spec_to_string(spec)}}, lhs, rhs);
}

}  // namespace bv
