#include "bv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "bv/bernoulli.hpp"
#include "bv/bernstein.hpp"
#include "bv/identities.hpp"
#include "bv/parse.hpp"
#include "bv/volkenborn.hpp"

using json = nlohmann::ordered_json;

namespace bv::cli {

namespace {

json report_to_json(const IdentityReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json j;
    j["identity"] = r.identity;
    j["params"] = params;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["direct"] = r.direct ? json(*r.direct) : json(nullptr);
    j["verdict"] = r.pass ? "PASS" : "FAIL";
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    return j;
}

std::string params_to_string(const IdentityReport& r) {
    std::string s;
    for (const auto& [k, v] : r.params) {
        if (!s.empty()) s += ";";
        s += k + "=" + v;
    }
    return s;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "--spec" values: "2,3" / "(2,1),(3,2)" / "(1,2,1),(2,3,1)".
std::vector<std::vector<Nat>> parse_spec_tuples(const std::string& raw, std::size_t width) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::vector<std::vector<Nat>> out;
    std::size_t i = 0;
    auto number = [&]() {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw UsageError("malformed --spec: expected number in '" + raw + "'");
        Nat v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + static_cast<Nat>(s[i++] - '0');
        return v;
    };
    if (width == 1) {
        for (;;) {
            out.push_back({number()});
            if (i == s.size()) return out;
            if (s[i++] != ',') throw UsageError("malformed --spec: '" + raw + "'");
        }
    }
    for (;;) {
        if (i >= s.size() || s[i++] != '(')
            throw UsageError("malformed --spec: expected '(' in '" + raw + "'");
        std::vector<Nat> tuple;
        for (std::size_t f = 0; f < width; ++f) {
            tuple.push_back(number());
            if (f + 1 < width) {
                if (i >= s.size() || s[i++] != ',')
                    throw UsageError("malformed --spec: expected ',' in '" + raw + "'");
            }
        }
        if (i >= s.size() || s[i++] != ')')
            throw UsageError("malformed --spec: expected ')' in '" + raw + "'");
        out.push_back(std::move(tuple));
        if (i == s.size()) return out;
        if (s[i++] != ',') throw UsageError("malformed --spec: '" + raw + "'");
    }
}

// Runs the checks in canonical order, optionally across threads, and emits
// reports in parameter order regardless of completion order.
std::vector<IdentityReport> run_sweep(
    const std::vector<std::function<IdentityReport()>>& cases, unsigned jobs) {
    std::vector<IdentityReport> reports(cases.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) reports[i] = cases[i]();
        return reports;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            reports[i] = cases[i]();
        }
    };
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return reports;
}

void emit_reports(const std::vector<IdentityReport>& reports,
                  const std::string& identity, const std::string& format,
                  std::ostream& out) {
    std::size_t passed = 0;
    for (const auto& r : reports)
        if (r.pass) ++passed;

    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        json summary;
        summary["checked"] = reports.size();
        summary["passed"] = passed;
        out << arr.dump() << "\n" << summary.dump() << "\n";
    } else if (format == "csv") {
        out << "identity,params,lhs,rhs,direct,verdict,witness\n";
        for (const auto& r : reports)
            out << r.identity << "," << params_to_string(r) << "," << r.lhs << ","
                << r.rhs << "," << (r.direct ? *r.direct : "") << ","
                << (r.pass ? "PASS" : "FAIL") << ","
                << (r.witness ? *r.witness : "") << "\n";
        out << "# checked=" << reports.size() << " passed=" << passed << "\n";
    } else {
        for (const auto& r : reports)
            if (!r.pass)
                out << "FAIL " << r.identity << " [" << params_to_string(r)
                    << "]: " << (r.witness ? *r.witness : "lhs != rhs") << "\n";
        out << identity << ": " << reports.size() << " checked, " << passed
            << " passed\n";
    }
}

int cmd_bernoulli(Nat max, Nat n_cap, const std::string& format, std::ostream& out) {
    if (max > n_cap)
        throw UsageError("--max exceeds cap of " + std::to_string(n_cap) +
                         " (raise with --n-cap)");
    BernoulliTable table(max);
    if (format == "csv") {
        out << "n,B_n\n";
        for (Nat n = 0; n <= max; ++n)
            out << n << "," << table.at(n).to_string() << "\n";
    } else if (format == "json") {
        json arr = json::array();
        for (Nat n = 0; n <= max; ++n) {
            json j;
            j["n"] = n;
            j["B_n"] = table.at(n).to_string();
            arr.push_back(j);
        }
        out << arr.dump() << "\n";
    } else {
        for (Nat n = 0; n <= max; ++n)
            out << "B_" << n << " = " << table.at(n).to_string() << "\n";
    }
    return 0;
}

int cmd_bernstein(Nat k, Nat n, const std::string& eval_at,
                  const std::string& format, std::ostream& out) {
    Polynomial b = bernstein_basis(k, n);
    std::optional<Rational> value;
    if (!eval_at.empty()) value = b.eval(Rational::from_string(eval_at));
    if (format == "json") {
        json j;
        j["k"] = k;
        j["n"] = n;
        j["polynomial"] = b.to_string();
        j["value"] = value ? json(value->to_string()) : json(nullptr);
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << "k,n,polynomial,value\n"
            << k << "," << n << "," << b.to_string() << ","
            << (value ? value->to_string() : "") << "\n";
    } else {
        if (value)
            out << value->to_string() << "\n";
        else
            out << b.to_string() << "\n";
    }
    return 0;
}

int cmd_volkenborn(const std::string& poly_src, bool oracle, Nat prime, Nat depth,
                   unsigned long brute_limit, const std::string& format,
                   std::ostream& out) {
    Polynomial f = parse_poly(poly_src).parsed;
    if (!oracle) {
        Rational v = volkenborn(f);
        if (format == "json") {
            json j;
            j["exact"] = v.to_string();
            out << j.dump() << "\n";
        } else if (format == "csv") {
            out << "exact\n" << v.to_string() << "\n";
        } else {
            out << "exact: " << v.to_string() << "\n";
        }
        return 0;
    }
    OracleComparison c = oracle_compare(f, prime, depth, brute_limit);
    const char* verdict = c.pass ? "PASS" : "FAIL";
    if (format == "json") {
        json j;
        j["exact"] = c.exact_value.to_string();
        j["riemann"] = c.riemann_value.to_string();
        j["valuation"] = c.discrepancy_valuation.to_string();
        j["bound"] = c.bound;
        j["verdict"] = verdict;
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << "exact,riemann,valuation,bound,verdict\n"
            << c.exact_value.to_string() << "," << c.riemann_value.to_string() << ","
            << c.discrepancy_valuation.to_string() << "," << c.bound << ","
            << verdict << "\n";
    } else {
        out << "exact: " << c.exact_value.to_string() << "\n"
            << "riemann: " << c.riemann_value.to_string() << "\n"
            << "valuation: " << c.discrepancy_valuation.to_string() << "\n"
            << "bound: " << c.bound << "\n"
            << "verdict: " << verdict << "\n";
    }
    return c.pass ? 0 : 1;
}

struct VerifyOptions {
    std::string identity;
    Nat n_min = 0, n_max = 0;
    Nat k_min = 0, k_max = 0;
    bool has_k_min = false, has_k_max = false;
    std::string spec;
    Nat k = 0;
    bool has_k = false;
    bool boundary = false;
    unsigned jobs = 1;
    Nat n_cap = 200;
    Nat degree_cap = 64;
    Nat order_cap = 64;
    std::string format = "text";
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    if (o.n_max > o.n_cap)
        throw UsageError("--n-max exceeds cap of " + std::to_string(o.n_cap) +
                         " (raise with --n-cap)");
    if (o.n_min > o.n_max) throw UsageError("--n-min must be <= --n-max");

    std::vector<std::function<IdentityReport()>> cases;
    const std::string& id = o.identity;

    if (id == "prop-2-1" || id == "two-ways") {
        Nat k_lo = o.has_k_min ? o.k_min : 0;
        Nat k_hi_flag = o.has_k_max ? o.k_max : o.n_max;
        for (Nat n = o.n_min; n <= o.n_max; ++n)
            for (Nat k = k_lo; k <= std::min(n, k_hi_flag); ++k)
                cases.push_back([id, n, k] {
                    return id == "prop-2-1" ? verify_prop_2_1(n, k)
                                            : integral_bernstein_two_ways(k, n);
                });
    } else if (id == "thm-2-2") {
        if (o.boundary) {
            cases.push_back([] { return thm_2_2_boundary_diagnostic(); });
        } else {
            if (o.n_min < 2)
                throw UsageError(
                    "thm-2-2 requires n > 1 (at n = 1 the identity fails: 3/2 vs 1/2; "
                    "use --boundary to see the counterexample)");
            for (Nat n = o.n_min; n <= o.n_max; ++n)
                cases.push_back([n] { return verify_thm_2_2(n); });
        }
    } else if (id == "bn2") {
        if (o.n_min < 2) throw UsageError("bn2 requires n >= 2");
        for (Nat n = o.n_min; n <= o.n_max; ++n)
            cases.push_back([n] { return verify_bn2(n); });
    } else if (id == "reflection") {
        for (Nat n = o.n_min; n <= o.n_max; ++n)
            cases.push_back([n] { return verify_reflection(n); });
    } else if (id == "cor-2-3") {
        Nat k_lo = o.has_k_min ? o.k_min : 2;
        if (k_lo < 2) throw UsageError("cor-2-3 requires k > 1");
        Nat k_hi_flag = o.has_k_max ? o.k_max : o.n_max;
        for (Nat n = o.n_min; n <= o.n_max; ++n)
            for (Nat k = k_lo; k <= std::min(n, k_hi_flag); ++k)
                cases.push_back([n, k] { return verify_cor_2_3(n, k); });
    } else if (id == "shift") {
        Nat d_lo = o.has_k_min ? o.k_min : 1;
        Nat d_hi = o.has_k_max ? o.k_max : 5;
        if (d_lo < 1) throw UsageError("shift sweeps monomial degrees >= 1");
        Nat n_lo = o.n_min >= 1 ? o.n_min : 1;
        for (Nat d = d_lo; d <= d_hi; ++d)
            for (Nat n = n_lo; n <= o.n_max; ++n)
                cases.push_back([d, n] {
                    return verify_shift(Polynomial::monomial(d), n);
                });
    } else if (id == "genfun") {
        Nat k_lo = o.has_k_min ? o.k_min : 0;
        Nat k_hi = o.has_k_max ? o.k_max : 10;
        Nat order = o.n_max > 0 ? o.n_max : 25;
        if (order > o.order_cap)
            throw UsageError("genfun order exceeds cap of " + std::to_string(o.order_cap));
        for (Nat k = k_lo; k <= k_hi; ++k)
            cases.push_back([k, order] { return genfun_check(k, order); });
    } else if (id == "thm-2-4" || id == "thm-2-5" || id == "thm-2-6") {
        if (o.spec.empty()) throw UsageError(id + " requires --spec");
        std::vector<BernsteinFactor> factors;
        if (id == "thm-2-4") {
            if (!o.has_k) throw UsageError("thm-2-4 requires --k");
            for (const auto& t : parse_spec_tuples(o.spec, 1))
                factors.push_back({o.k, t[0], 1});
        } else if (id == "thm-2-5") {
            if (!o.has_k) throw UsageError("thm-2-5 requires --k");
            for (const auto& t : parse_spec_tuples(o.spec, 2))
                factors.push_back({o.k, t[0], t[1]});
        } else {
            for (const auto& t : parse_spec_tuples(o.spec, 3))
                factors.push_back({t[0], t[1], t[2]});
        }
        Nat total = 0;
        for (const auto& f : factors) {
            if (f.degree < f.k)
                throw UsageError(id + " requires every degree >= its k");
            if (f.power < 1) throw UsageError(id + " requires every power >= 1");
            total += f.degree * f.power;
        }
        if (total > o.degree_cap)
            throw UsageError("total product degree exceeds cap of " +
                             std::to_string(o.degree_cap) +
                             " (raise with --degree-cap)");
        cases.push_back([factors] { return verify_thm_2_6(factors); });
    } else {
        throw UsageError("unknown identity '" + id + "'");
    }

    auto reports = run_sweep(cases, o.jobs);
    emit_reports(reports, id, o.format, out);
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Bernoulli/Bernstein/Volkenborn calculator and identity verifier"};
    app.require_subcommand(1);

    // bernoulli
    auto* bern = app.add_subcommand("bernoulli", "Print the Bernoulli number table");
    Nat bern_max = 10, bern_cap = 200;
    std::string bern_format = "text";
    bern->add_option("--max", bern_max, "Largest index to tabulate");
    bern->add_option("--n-cap", bern_cap, "Hard cap on --max");
    bern->add_option("--format", bern_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // bernstein
    auto* bst = app.add_subcommand("bernstein", "Print a Bernstein basis polynomial");
    Nat bst_k = 0, bst_n = 0;
    std::string bst_eval, bst_format = "text";
    bst->add_option("--k", bst_k, "Basis index")->required();
    bst->add_option("--n", bst_n, "Degree")->required();
    bst->add_option("--eval", bst_eval, "Evaluate at this rational");
    bst->add_option("--format", bst_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // volkenborn
    auto* vol = app.add_subcommand("volkenborn", "Integrate a polynomial over Z_p");
    std::string vol_poly, vol_format = "text";
    bool vol_oracle = false;
    Nat vol_prime = 2, vol_depth = 1;
    unsigned long vol_brute = kDefaultBruteForceLimit;
    vol->add_option("--poly", vol_poly, "Polynomial expression")->required();
    vol->add_flag("--oracle", vol_oracle, "Cross-check with a Riemann sum");
    vol->add_option("--prime", vol_prime, "Prime p for the oracle");
    vol->add_option("--depth", vol_depth, "Riemann sum depth N");
    vol->add_option("--brute-force-limit", vol_brute,
                    "Dual-path direct summation threshold");
    vol->add_option("--format", vol_format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // verify
    auto* ver = app.add_subcommand("verify", "Verify an identity over a parameter range");
    VerifyOptions vo;
    ver->add_option("--identity", vo.identity,
                    "prop-2-1|thm-2-2|cor-2-3|thm-2-4|thm-2-5|thm-2-6|shift|genfun|"
                    "reflection|bn2|two-ways")
        ->required();
    ver->add_option("--n-min", vo.n_min, "Low end of the n range");
    ver->add_option("--n-max", vo.n_max, "High end of the n range (genfun: order)");
    auto* kmin_opt = ver->add_option("--k-min", vo.k_min, "Low end of the k range");
    auto* kmax_opt = ver->add_option("--k-max", vo.k_max, "High end of the k range");
    ver->add_option("--spec", vo.spec,
                    "Product spec: degrees 'n1,n2' (thm-2-4), pairs '(n,m),...' "
                    "(thm-2-5), triples '(k,n,m),...' (thm-2-6)");
    auto* k_opt = ver->add_option("--k", vo.k, "Common basis index for thm-2-4/thm-2-5");
    ver->add_flag("--boundary", vo.boundary,
                  "thm-2-2 only: report the n=1 counterexample");
    ver->add_option("--jobs", vo.jobs, "Worker threads for the sweep");
    ver->add_option("--n-cap", vo.n_cap, "Hard cap on n");
    ver->add_option("--degree-cap", vo.degree_cap, "Hard cap on total product degree");
    ver->add_option("--order-cap", vo.order_cap, "Hard cap on genfun order");
    ver->add_option("--format", vo.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (bern->parsed()) return cmd_bernoulli(bern_max, bern_cap, bern_format, out);
        if (bst->parsed()) return cmd_bernstein(bst_k, bst_n, bst_eval, bst_format, out);
        if (vol->parsed())
            return cmd_volkenborn(vol_poly, vol_oracle, vol_prime, vol_depth,
                                  vol_brute, vol_format, out);
        vo.has_k_min = kmin_opt->count() > 0;
        vo.has_k_max = kmax_opt->count() > 0;
        vo.has_k = k_opt->count() > 0;
        return cmd_verify(vo, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bv::cli
