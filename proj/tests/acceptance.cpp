// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "degen/cli.hpp"
#include "degen/egf.hpp"
#include "degen/families.hpp"
#include "degen/identities.hpp"
#include "oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace degen;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

MultiPoly at_lambda0(const MultiPoly& p) { return p.substitute(Var::Lambda, MultiPoly()); }

std::string sweep_output(int& code) {
    std::ostringstream out, err;
    code = cli::run({"verify", "--identity", "all", "--n-max", "10", "--r-max", "3", "--m", "1,3,5", "--k-max", "10",
                     "--alpha", "sym"},
                    out, err);
    return out.str();
}

Outcome full_sweep() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    int code = -1;
    const std::string text = sweep_output(code);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (code != 0) o.fail("exit code " + std::to_string(code));
    const auto reports = nlohmann::json::parse(text);
    if (reports.size() != all_identities().size()) o.fail("expected one report per catalog entry");
    for (const auto& r : reports) {
        if (r["status"] != "pass") o.fail(r["identity"].get<std::string>() + " failed");
        if (r["points"].get<long>() == 0) o.fail(r["identity"].get<std::string>() + " checked no points");
    }
    if (secs > 60.0) o.fail("took " + std::to_string(secs) + " s");
    if (o.ok) {
        std::ostringstream d;
        d.precision(2);
        d << std::fixed << reports.size() << " entries in " << secs << " s";
        o.detail = d.str();
    }
    return o;
}

Outcome dual_routes() {
    Outcome o;
    long compared = 0;
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned k = 0; k <= n; ++k, ++compared)
            if (stirling2_deg(n, k, StirlingMode::ExplicitSum) != stirling2_deg(n, k, StirlingMode::BellRoute))
                o.fail("stirling n=" + std::to_string(n) + " k=" + std::to_string(k));
    for (unsigned k = 0; k <= 10; ++k)
        for (unsigned n = 0; n <= 10; ++n, ++compared)
            if (alt_power_sum(k, n, AltSumMode::Direct) != alt_power_sum(k, n, AltSumMode::Closed))
                o.fail("closed k=" + std::to_string(k) + " n=" + std::to_string(n));
    for (unsigned k = 1; k <= 10; ++k)
        for (unsigned n = 0; n <= 6; ++n, ++compared)
            if (alt_power_sum(k, n, AltSumMode::Direct) != alt_power_sum(k, n, AltSumMode::Parity))
                o.fail("parity k=" + std::to_string(k) + " n=" + std::to_string(n));
    if (o.ok) o.detail = std::to_string(compared) + " pairs";
    return o;
}

Outcome classical_limit() {
    Outcome o;
    const auto euler = oracle::classical_euler_numbers(10);
    const auto genocchi = oracle::classical_genocchi_numbers(10);
    for (unsigned n = 0; n <= 10; ++n) {
        if (at_lambda0(euler_poly(n, false)) != MultiPoly(euler[n])) o.fail("euler n=" + std::to_string(n));
        const MultiPoly g = at_lambda0(aeg_poly(n, 1).substitute(Var::X, MultiPoly()));
        if (g != MultiPoly(genocchi[n])) o.fail("genocchi n=" + std::to_string(n));
        for (unsigned k = 0; k <= n; ++k)
            if (at_lambda0(stirling2_deg(n, k)) != MultiPoly(oracle::classical_stirling2(n, k)))
                o.fail("stirling n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    return o;
}

Outcome power_consistency() {
    Outcome o;
    constexpr unsigned order = 12;
    // two bases: the Euler denominator and a generic series with 1 up front
    std::vector<EgfSeries> bases{half_shifted_degenerate_exp(order)};
    EgfSeries generic(order);
    {
        std::vector<MultiPoly> c(order + 1);
        c[0] = MultiPoly(1);
        for (unsigned n = 1; n <= order; ++n)
            c[n] = MultiPoly::x() * Rational(static_cast<long>(n), 3) + MultiPoly::lambda() * Rational(1 - static_cast<long>(n) % 3);
        generic = EgfSeries(c);
    }
    bases.push_back(generic);
    for (std::size_t b = 0; b < bases.size(); ++b) {
        const EgfSeries symbolic = egf_pow_alpha(bases[b], MultiPoly::alpha());
        EgfSeries repeated = EgfSeries::unit(order);
        for (long a = 1; a <= 4; ++a) {
            repeated = egf_mul(repeated, bases[b]);
            if (symbolic.substitute(Var::Alpha, MultiPoly(a)) != repeated)
                o.fail("base " + std::to_string(b) + " alpha=" + std::to_string(a));
        }
    }
    return o;
}

Outcome gf_vs_closed_form() {
    Outcome o;
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned r = 0; r <= 4; ++r) {
            const MultiPoly closed = n < r ? MultiPoly()
                                           : MultiPoly(falling_factorial(Rational(static_cast<long>(n)), r)) *
                                                 euler_order_poly(n - r);
            if (aeg_order_poly(n, r) != closed) o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
    return o;
}

Outcome mutation() {
    Outcome o;
    const ParamGrid grid;
    IdentityOptions mutated;
    mutated.half = Rational(1, 3);
    for (IdentityId id : {IdentityId::T1, IdentityId::T3, IdentityId::T6, IdentityId::T9, IdentityId::T10}) {
        const std::string name(identity_name(id));
        if (run_check(id, grid).status != CheckStatus::Pass) o.fail(name + " fails unmutated");
        const auto report = run_check(id, grid, mutated);
        if (report.status != CheckStatus::Fail || !report.first_counterexample)
            o.fail(name + " survives the mutation");
    }
    if (o.ok) o.detail = "T1 T3 T6 T9 T10 detect the perturbed constant";
    return o;
}

Outcome determinism() {
    Outcome o;
    int c1 = -1, c2 = -1;
    const std::string a = sweep_output(c1);
    const std::string b = sweep_output(c2);
    if (a.empty()) o.fail("empty report");
    if (a != b) o.fail("reports differ");
    if (c1 != c2) o.fail("exit codes differ");
    if (o.ok) o.detail = std::to_string(a.size()) + " bytes identical";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"full identity sweep", full_sweep},
        {"dual-route agreement", dual_routes},
        {"classical limit", classical_limit},
        {"symbolic power consistency", power_consistency},
        {"generating function vs closed form", gf_vs_closed_form},
        {"mutation sensitivity", mutation},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.ok) ++failures;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
        if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}
