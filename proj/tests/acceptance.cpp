// Acceptance suite: one pass/fail line per criterion, all checks exact.
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "bv/bernoulli.hpp"
#include "bv/bernstein.hpp"
#include "bv/cli.hpp"
#include "bv/identities.hpp"
#include "bv/parse.hpp"
#include "bv/volkenborn.hpp"

using namespace bv;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name
         << " (" << elapsed << "s / " << budget_seconds << "s)";
    if (!ok && !detail.empty()) line << " -- " << detail;
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
}

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str()};
}

}  // namespace

int main() {
    criterion(1, "Bernoulli table to n=60", 1.0, [](std::string& d) {
        BernoulliTable t(60);
        if (t.at(1) != Rational(-1, 2)) { d = "B_1 wrong"; return false; }
        for (Nat n = 3; n <= 60; n += 2)
            if (t.at(n) != Rational(0)) { d = "odd-index B nonzero"; return false; }
        for (Nat n = 2; n <= 60; n += 2)
            if (!von_staudt_clausen_ok(t, n)) {
                d = "von Staudt-Clausen fails at n=" + std::to_string(n);
                return false;
            }
        return true;
    });

    criterion(2, "generating function, k<=10 at order 25", 5.0, [](std::string& d) {
        for (Nat k = 0; k <= 10; ++k) {
            auto r = genfun_check(k, 25);
            if (!r.pass) { d = "genfun fails at k=" + std::to_string(k); return false; }
        }
        return true;
    });

    criterion(3, "Proposition 2.1 exhaustive, 0<=k<=n<=30 with direct integration",
              10.0, [](std::string& d) {
        std::size_t count = 0;
        for (Nat n = 0; n <= 30; ++n)
            for (Nat k = 0; k <= n; ++k) {
                auto r = verify_prop_2_1(n, k);
                if (!r.pass) {
                    d = "fails at n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                }
                ++count;
            }
        if (count != 496) { d = "expected 496 cases"; return false; }
        return true;
    });

    criterion(4, "Theorem 2.2 for 2<=n<=50, n=1 counterexample (3/2, 1/2)", 1.0,
              [](std::string& d) {
        for (Nat n = 2; n <= 50; ++n)
            if (!verify_thm_2_2(n).pass) {
                d = "fails at n=" + std::to_string(n);
                return false;
            }
        auto diag = thm_2_2_boundary_diagnostic();
        if (diag.pass || diag.lhs != "3/2" || diag.rhs != "1/2") {
            d = "boundary diagnostic wrong: " + diag.lhs + " vs " + diag.rhs;
            return false;
        }
        return true;
    });

    criterion(5, "Corollary 2.3 exhaustive, 2<=k<=n<=30", 10.0, [](std::string& d) {
        for (Nat n = 2; n <= 30; ++n)
            for (Nat k = 2; k <= n; ++k)
                if (!verify_cor_2_3(n, k).pass) {
                    d = "fails at n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                }
        return true;
    });

    criterion(6, "Theorems 2.4/2.5/2.6: worked cases, 200 random specs, degeneration chain",
              60.0, [](std::string& d) {
        auto w1 = verify_thm_2_4(1, {2, 2});
        if (!w1.pass || w1.lhs != "8/15") { d = "k=1 [2,2] != 8/15"; return false; }
        auto w2 = verify_thm_2_6({{1, 2, 1}, {2, 3, 1}});
        if (!w2.pass || w2.lhs != "2/5") { d = "[(1,2,1),(2,3,1)] != 2/5"; return false; }

        std::mt19937 rng(20260823);
        std::uniform_int_distribution<Nat> nfac(1, 3);
        std::uniform_int_distribution<Nat> deg(0, 8);
        std::uniform_int_distribution<Nat> pow_d(1, 3);
        int done = 0;
        while (done < 200) {
            std::vector<BernsteinFactor> spec;
            Nat total = 0;
            Nat s = nfac(rng);
            for (Nat i = 0; i < s; ++i) {
                Nat n = deg(rng);
                std::uniform_int_distribution<Nat> kd(0, n);
                Nat k = kd(rng);
                Nat m = pow_d(rng);
                if (total + n * m > 24) continue;
                total += n * m;
                spec.push_back({k, n, m});
            }
            if (spec.empty()) continue;
            auto r = verify_thm_2_6(spec);
            if (!r.pass) {
                d = "random spec fails: " + (r.witness ? *r.witness : r.lhs);
                return false;
            }
            ++done;
        }

        // degeneration chain 2.6 -> 2.5 -> 2.4 on a shared grid
        for (Nat k = 0; k <= 2; ++k)
            for (Nat n = k; n <= k + 3; ++n) {
                auto a = verify_thm_2_6({{k, n, 1}, {k, n + 1, 1}});
                auto b = verify_thm_2_5(k, {{n, 1}, {n + 1, 1}});
                auto c = verify_thm_2_4(k, {n, n + 1});
                if (!a.pass || !b.pass || !c.pass || a.lhs != b.lhs || b.lhs != c.lhs) {
                    d = "degeneration chain breaks at k=" + std::to_string(k) +
                        " n=" + std::to_string(n);
                    return false;
                }
                auto p = verify_thm_2_6({{k, n, 2}});
                auto q = verify_thm_2_5(k, {{n, 2}});
                if (!p.pass || !q.pass || p.lhs != q.lhs) {
                    d = "power degeneration breaks at k=" + std::to_string(k);
                    return false;
                }
            }
        return true;
    });

    criterion(7, "Volkenborn oracle: monomials n<=8, p in {2,3,5,7}, N<=6", 30.0,
              [](std::string& d) {
        for (Nat n = 0; n <= 8; ++n)
            for (Nat p : {2u, 3u, 5u, 7u})
                for (Nat N = 1; N <= 6; ++N) {
                    Polynomial f = Polynomial::monomial(n);
                    Rational s = riemann_sum(f, p, N);  // asserts dual path below 10^5
                    Valuation v = padic_valuation(s - bernoulli_number(n), p);
                    Valuation vp1 = padic_valuation(Rational(Int(n + 1)), p);
                    long bound = static_cast<long>(N) - *vp1.value - 1;
                    if (!(v >= bound)) {
                        d = "bound violated at n=" + std::to_string(n) +
                            " p=" + std::to_string(p) + " N=" + std::to_string(N);
                        return false;
                    }
                    Int M;
                    mpz_ui_pow_ui(M.get_mpz_t(), p, N);
                    if (M <= 100000 && riemann_sum_direct(f, p, N) != s) {
                        d = "dual path disagrees";
                        return false;
                    }
                }
        return true;
    });

    criterion(8, "shift identity: f in {x..x^5}, n in {1..5}", 1.0, [](std::string& d) {
        for (Nat deg = 1; deg <= 5; ++deg)
            for (Nat n = 1; n <= 5; ++n)
                if (!verify_shift(Polynomial::monomial(deg), n).pass) {
                    d = "fails at deg=" + std::to_string(deg) + " n=" + std::to_string(n);
                    return false;
                }
        auto worked = verify_shift(Polynomial::monomial(2), 2);
        if (worked.lhs != "13/6" || worked.rhs != "13/6") {
            d = "worked case not 13/6";
            return false;
        }
        return true;
    });

    criterion(9, "CLI contract: documented invocations, JSON schema, exit codes, round trip",
              30.0, [](std::string& d) {
        auto csv = run_cli({"bernoulli", "--max", "6", "--format", "csv"});
        if (csv.code != 0 ||
            csv.out != "n,B_n\n0,1\n1,-1/2\n2,1/6\n3,0\n4,-1/30\n5,0\n6,1/42\n") {
            d = "bernoulli csv output mismatch";
            return false;
        }
        auto sweep = run_cli({"verify", "--identity", "thm-2-2", "--n-min", "2",
                              "--n-max", "50"});
        if (sweep.code != 0 || sweep.out != "thm-2-2: 49 checked, 49 passed\n") {
            d = "thm-2-2 sweep output mismatch";
            return false;
        }
        auto vol = run_cli({"volkenborn", "--poly", "x^2", "--oracle", "--prime",
                            "2", "--depth", "3"});
        if (vol.code != 0 ||
            vol.out !=
                "exact: 1/6\nriemann: 35/2\nvaluation: 2\nbound: 2\nverdict: PASS\n") {
            d = "volkenborn oracle output mismatch";
            return false;
        }

        // JSON schema on a sweep
        auto js = run_cli({"verify", "--identity", "two-ways", "--n-min", "0",
                           "--n-max", "8", "--format", "json"});
        if (js.code != 0) { d = "json sweep exit code"; return false; }
        auto nl = js.out.find('\n');
        auto reports = nlohmann::json::parse(js.out.substr(0, nl));
        auto summary = nlohmann::json::parse(js.out.substr(nl + 1));
        std::regex rational_re("-?[0-9]+(/[0-9]+)?");
        for (const auto& r : reports) {
            if (!r.at("identity").is_string() || !r.at("params").is_object() ||
                !(r.at("direct").is_string() || r.at("direct").is_null()) ||
                !(r.at("witness").is_string() || r.at("witness").is_null())) {
                d = "report schema violation";
                return false;
            }
            std::string verdict = r.at("verdict");
            if (verdict != "PASS" && verdict != "FAIL") { d = "bad verdict"; return false; }
            for (const char* f : {"lhs", "rhs"})
                if (!std::regex_match(std::string(r.at(f)), rational_re)) {
                    d = "rational not serialized as string pattern";
                    return false;
                }
        }
        if (!summary.at("checked").is_number_integer() ||
            summary.at("checked") != static_cast<int>(reports.size()) ||
            summary.at("passed") != static_cast<int>(reports.size())) {
            d = "summary object wrong";
            return false;
        }

        // exit codes 0 / 1 / 2
        if (run_cli({"verify", "--identity", "reflection", "--n-max", "10"}).code != 0) {
            d = "exit 0 case wrong";
            return false;
        }
        if (run_cli({"verify", "--identity", "thm-2-2", "--boundary"}).code != 1) {
            d = "exit 1 case wrong";
            return false;
        }
        if (run_cli({"volkenborn", "--poly", "x^^2"}).code != 2 ||
            run_cli({"bogus"}).code != 2) {
            d = "exit 2 case wrong";
            return false;
        }

        // parse round trip corpus
        std::mt19937 rng(5150);
        std::uniform_int_distribution<int> deg(0, 12);
        std::uniform_int_distribution<long> num(-1000000, 1000000);
        std::uniform_int_distribution<long> den(1, 1000000);
        for (int i = 0; i < 1000; ++i) {
            std::vector<Rational> cs(deg(rng) + 1, Rational(0));
            for (auto& c : cs) c = Rational(num(rng), den(rng));
            Polynomial p(std::move(cs));
            if (parse_poly(p.to_string()).parsed != p) {
                d = "round trip fails on " + p.to_string();
                return false;
            }
        }
        return true;
    });

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
