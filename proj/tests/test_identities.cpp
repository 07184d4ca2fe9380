#include <doctest.h>

#include <random>

#include "bv/bernoulli.hpp"
#include "bv/bernstein.hpp"
#include "bv/identities.hpp"
#include "bv/volkenborn.hpp"

using namespace bv;

TEST_CASE("integral of B_{k,n} two ways") {
    auto r = integral_bernstein_two_ways(1, 2);
    CHECK(r.pass);
    CHECK(r.lhs == "-4/3");
    CHECK(r.direct == "-4/3");

    for (Nat n = 0; n <= 8; ++n) {
        auto rn = integral_bernstein_two_ways(n, n);
        CHECK(rn.pass);
        CHECK(rn.lhs == bernoulli_number(n).to_string());
    }

    auto r03 = integral_bernstein_two_ways(0, 3);
    CHECK(r03.pass);
    CHECK(r03.direct == "3");

    CHECK_THROWS_AS(integral_bernstein_two_ways(3, 2), std::invalid_argument);
}

TEST_CASE("Proposition 2.1") {
    auto r = verify_prop_2_1(2, 1);
    CHECK(r.pass);
    CHECK(r.lhs == "-2/3");
    CHECK(r.rhs == "-2/3");

    for (Nat n = 0; n <= 15; ++n)
        for (Nat k = 0; k <= n; ++k) CHECK(verify_prop_2_1(n, k).pass);

    CHECK_THROWS_AS(verify_prop_2_1(2, 3), std::invalid_argument);
}

TEST_CASE("Theorem 2.2 and its sharp hypothesis") {
    auto r2 = verify_thm_2_2(2);
    CHECK(r2.pass);
    CHECK(r2.lhs == "13/6");

    auto r3 = verify_thm_2_2(3);
    CHECK(r3.pass);
    CHECK(r3.lhs == "3");

    for (Nat n = 2; n <= 25; ++n) CHECK(verify_thm_2_2(n).pass);

    CHECK_THROWS_AS(verify_thm_2_2(1), std::invalid_argument);
    auto d = thm_2_2_boundary_diagnostic();
    CHECK(!d.pass);
    CHECK(d.lhs == "3/2");
    CHECK(d.rhs == "1/2");
    CHECK(d.witness.has_value());
}

TEST_CASE("B_n(2) = B_n + n") {
    auto r = verify_bn2(2);
    CHECK(r.pass);
    CHECK(r.lhs == "13/6");
    CHECK(verify_bn2(3).lhs == "3");
    for (Nat n = 2; n <= 40; ++n) CHECK(verify_bn2(n).pass);
    CHECK_THROWS_AS(verify_bn2(1), std::invalid_argument);
}

TEST_CASE("reflection identity") {
    for (Nat n : {0u, 1u, 2u}) CHECK(verify_reflection(n).pass);
    for (Nat n = 0; n <= 40; ++n) CHECK(verify_reflection(n).pass);
}

TEST_CASE("Corollary 2.3") {
    auto r = verify_cor_2_3(3, 2);
    CHECK(r.pass);
    CHECK(r.lhs == "-5/6");

    for (Nat k = 2; k <= 8; ++k) {
        auto rk = verify_cor_2_3(k, k);
        CHECK(rk.pass);
        CHECK(rk.lhs == (bernoulli_number(k) + Rational(Int(k))).to_string());
    }

    for (Nat n = 2; n <= 15; ++n)
        for (Nat k = 2; k <= n; ++k) CHECK(verify_cor_2_3(n, k).pass);

    CHECK_THROWS_AS(verify_cor_2_3(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_cor_2_3(2, 3), std::invalid_argument);
}

TEST_CASE("Theorem 2.4") {
    auto r = verify_thm_2_4(1, {2, 2});
    CHECK(r.pass);
    CHECK(r.lhs == "8/15");

    auto r1 = verify_thm_2_4(1, {2});
    CHECK(r1.pass);
    CHECK(r1.lhs == "-4/3");
    CHECK(r1.lhs == integral_bernstein_two_ways(1, 2).lhs);

    for (Nat n = 0; n <= 8; ++n) CHECK(verify_thm_2_4(0, {n}).pass);

    CHECK_THROWS_AS(verify_thm_2_4(3, {2}), std::invalid_argument);
}

TEST_CASE("Theorem 2.5") {
    auto r = verify_thm_2_5(1, {{2, 2}});
    CHECK(r.pass);
    CHECK(r.lhs == "8/15");

    // unit powers degenerate to Theorem 2.4
    auto a = verify_thm_2_5(1, {{2, 1}, {3, 1}});
    auto b = verify_thm_2_4(1, {2, 3});
    CHECK(a.pass);
    CHECK(b.pass);
    CHECK(a.lhs == b.lhs);

    CHECK_THROWS_AS(verify_thm_2_5(3, {{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_2_5(1, {{2, 0}}), std::invalid_argument);
}

TEST_CASE("Theorem 2.6") {
    auto r = verify_thm_2_6({{1, 2, 1}, {2, 3, 1}});
    CHECK(r.pass);
    CHECK(r.lhs == "2/5");

    // equal k's degenerate to Theorem 2.5
    auto a = verify_thm_2_6({{1, 2, 2}, {1, 4, 1}});
    auto b = verify_thm_2_5(1, {{2, 2}, {4, 1}});
    CHECK(a.pass);
    CHECK(b.pass);
    CHECK(a.lhs == b.lhs);

    CHECK_THROWS_AS(verify_thm_2_6({{3, 2, 1}}), std::invalid_argument);
}

TEST_CASE("randomized product specs against brute-force integration") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<Nat> nfac(1, 3);
    std::uniform_int_distribution<Nat> deg(0, 6);
    std::uniform_int_distribution<Nat> pow_d(1, 2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BernsteinFactor> spec;
        Nat total = 0;
        Nat s = nfac(rng);
        for (Nat i = 0; i < s; ++i) {
            Nat n = deg(rng);
            std::uniform_int_distribution<Nat> kd(0, n);
            Nat k = kd(rng);
            Nat m = pow_d(rng);
            if (total + n * m > 24) break;
            total += n * m;
            spec.push_back({k, n, m});
        }
        if (spec.empty()) continue;
        auto r = verify_thm_2_6(spec);
        CHECK(r.pass);
        // lhs is itself the brute-force product integral; re-derive it here
        Polynomial prod = Polynomial::constant(Rational(1));
        for (const auto& f : spec)
            prod = prod * bernstein_basis(f.k, f.degree).pow(f.power);
        CHECK(r.lhs == volkenborn(prod).to_string());
    }
}

TEST_CASE("cross-consistency: two-ways equals thm-2-4 left side") {
    for (Nat n = 0; n <= 12; ++n)
        for (Nat k = 0; k <= n; ++k)
            CHECK(integral_bernstein_two_ways(k, n).direct ==
                  verify_thm_2_4(k, {n}).lhs);
}
