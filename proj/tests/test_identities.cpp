#include "degen/families.hpp"
#include "degen/identities.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace degen;

namespace {

ParamGrid small_grid() {
    ParamGrid g;
    g.n_max = 5;
    g.r_max = 2;
    g.k_max = 5;
    g.m_values = {1, 3};
    return g;
}

const CheckReport& find(const std::vector<CheckReport>& reports, IdentityId id) {
    for (const auto& r : reports)
        if (r.identity == id) return r;
    throw std::logic_error("missing report");
}

}  // namespace

TEST_CASE("catalog names") {
    CHECK(all_identities().size() == 20);
    for (IdentityId id : all_identities()) CHECK(parse_identity(identity_name(id)) == id);
    CHECK_THROWS_AS(parse_identity("T11"), std::invalid_argument);
    CHECK(requires_odd_m(IdentityId::T2));
    CHECK_FALSE(requires_odd_m(IdentityId::T3));
}

TEST_CASE("T4 over n <= 8, r <= 3 with symbolic alpha") {
    ParamGrid g;
    g.n_max = 8;
    g.r_max = 3;
    const auto report = run_check(IdentityId::T4, g);
    CHECK(report.status == CheckStatus::Pass);
    CHECK(report.points == 9 * 4);
    CHECK_FALSE(report.first_counterexample.has_value());
}

TEST_CASE("E5 at r = 0 is the degenerate Euler shift identity") {
    ParamGrid g;
    g.n_max = 6;
    g.r_max = 0;
    CHECK(run_check(IdentityId::E5, g).status == CheckStatus::Pass);
    const MultiPoly x = MultiPoly::x();
    for (unsigned n = 0; n <= 6; ++n) {
        MultiPoly rhs;
        for (unsigned l = 0; l <= n; ++l)
            rhs += falling_factorial(MultiPoly(1), n - l, MultiPoly::lambda()) * euler_poly(l) * binomial(n, l);
        CHECK(euler_poly(n).substitute(Var::X, x + MultiPoly(1)) == rhs);
    }
}

TEST_CASE("T9 agrees with the direct alternating sums") {
    ParamGrid g;
    g.k_max = 8;
    g.n_max = 6;
    const auto report = run_check(IdentityId::T9, g);
    CHECK(report.status == CheckStatus::Pass);
    CHECK(report.points == 8 * 7);
}

TEST_CASE("run_all on a small grid passes everything") {
    const auto reports = run_all(small_grid());
    CHECK(reports.size() == all_identities().size());
    for (const auto& r : reports) {
        INFO(identity_name(r.identity));
        CHECK(r.status == CheckStatus::Pass);
        CHECK(r.points > 0);
    }
}

TEST_CASE("empty m list makes the distribution entries vacuous") {
    ParamGrid g = small_grid();
    g.m_values.clear();
    const auto reports = run_all(g);
    for (IdentityId id : {IdentityId::T2, IdentityId::T8, IdentityId::T10, IdentityId::E30, IdentityId::E48}) {
        INFO(identity_name(id));
        CHECK(find(reports, id).points == 0);
        CHECK(find(reports, id).status == CheckStatus::Pass);
    }
    CHECK(find(reports, IdentityId::T3).points > 0);
    CHECK(find(reports, IdentityId::E13).points > 0);
}

TEST_CASE("n_max = 0 grid") {
    ParamGrid g;
    g.n_max = 0;
    g.k_max = 0;
    for (const auto& r : run_all(g)) CHECK(r.status == CheckStatus::Pass);
    CHECK(run_check(IdentityId::T6, g).points == 0);
}

TEST_CASE("even m is rejected before checking") {
    ParamGrid g = small_grid();
    g.m_values = {1, 2};
    CHECK_THROWS_AS(run_check(IdentityId::T2, g), GridError);
    CHECK_THROWS_AS(run_check(IdentityId::E48, g), GridError);
    CHECK_THROWS_AS(run_all(g), GridError);
    g.m_values = {0};
    CHECK_THROWS_AS(validate_grid(g), GridError);
    try {
        g.m_values = {2};
        run_check(IdentityId::T2, g);
    } catch (const GridError& e) {
        CHECK(std::string(e.what()).find("odd") != std::string::npos);
    }
}

TEST_CASE("specialized alpha multiplies the points") {
    ParamGrid g = small_grid();
    g.alpha_mode = AlphaMode::specialize({Rational(1), Rational(-2), Rational(1, 2), Rational(0)});
    const auto sym = run_check(IdentityId::T8, small_grid());
    const auto specialized = run_check(IdentityId::T8, g);
    CHECK(specialized.status == CheckStatus::Pass);
    CHECK(specialized.points == 4 * sym.points);
    for (IdentityId id : all_identities())
        if (uses_alpha(id)) CHECK(run_check(id, g).status == CheckStatus::Pass);
}

TEST_CASE("T2 at m = 1 is a single-term sum") {
    ParamGrid g = small_grid();
    g.m_values = {1};
    const auto r = run_check(IdentityId::T2, g);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.points == 6 * 3);
}

TEST_CASE("T8 at alpha = 1 reproduces E30") {
    CHECK(euler_order_poly(0, false).substitute(Var::Alpha, MultiPoly()) == MultiPoly(1));
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(euler_order_poly(n, false).substitute(Var::Alpha, MultiPoly()).is_zero());
    for (unsigned m : {1u, 3u, 5u})
        for (unsigned n = 0; n <= 6; ++n)
            for (unsigned r = 0; r <= 2; ++r)
                CHECK(multiplication_formula_order(n, r, m).substitute(Var::Alpha, MultiPoly(1)) ==
                      multiplication_formula(n, r, m));
}

TEST_CASE("single-constant mutation breaks the designated entries at n <= 4") {
    ParamGrid g;
    g.n_max = 4;
    g.k_max = 4;
    g.r_max = 2;
    g.m_values = {1, 3};
    IdentityOptions mutated;
    mutated.half = Rational(1, 3);
    for (IdentityId id : {IdentityId::T1, IdentityId::T3, IdentityId::T6, IdentityId::T9, IdentityId::T10,
                          IdentityId::T7, IdentityId::E13, IdentityId::E26, IdentityId::E34, IdentityId::E40}) {
        INFO(identity_name(id));
        CHECK(run_check(id, g).status == CheckStatus::Pass);
        const auto r = run_check(id, g, mutated);
        CHECK(r.status == CheckStatus::Fail);
        REQUIRE(r.first_counterexample.has_value());
        CHECK(r.first_counterexample->lhs != r.first_counterexample->rhs);
    }
}

TEST_CASE("typeset forms of T7 and T10 are not identities") {
    IdentityOptions printed;
    printed.as_printed = true;
    ParamGrid g = small_grid();

    const auto t7 = run_check(IdentityId::T7, g, printed);
    CHECK(t7.status == CheckStatus::Fail);
    REQUIRE(t7.first_counterexample.has_value());
    const auto& p7 = t7.first_counterexample->params;
    CHECK(p7[0] == std::pair<std::string, std::string>{"n", "2"});
    CHECK(p7[1] == std::pair<std::string, std::string>{"r", "0"});

    const auto t10 = run_check(IdentityId::T10, g, printed);
    CHECK(t10.status == CheckStatus::Fail);
    REQUIRE(t10.first_counterexample.has_value());
    const auto& p10 = t10.first_counterexample->params;
    CHECK(p10[0].second == "2");
    CHECK(p10[2] == std::pair<std::string, std::string>{"m", "3"});

    // at m = 1 both forms coincide
    for (unsigned n = 0; n <= 5; ++n) CHECK(aeg_via_alt_sums(n, 0, 1, printed) == aeg_poly(n, 0));
    // corrected forms hold
    for (unsigned n = 1; n <= 5; ++n)
        CHECK(falling_via_aeg_order(n, 1) == falling_factorial(MultiPoly::x(), n, MultiPoly::lambda()));
}

TEST_CASE("report JSON") {
    ParamGrid g = small_grid();
    const auto pass = run_check(IdentityId::E40, g);
    const auto j = nlohmann::json::parse(report_json(pass));
    CHECK(j["identity"] == "E40");
    CHECK(j["points"] == 6);
    CHECK(j["status"] == "pass");
    CHECK_FALSE(j.contains("counterexample"));
    CHECK_FALSE(j.contains("ms"));
    CHECK(nlohmann::json::parse(report_json(pass, true)).contains("ms"));
    CHECK(report_json(pass).find("{\n  \"identity\": \"E40\",\n  \"points\": 6,\n  \"status\": \"pass\"") == 0);

    IdentityOptions printed;
    printed.as_printed = true;
    const auto fail = nlohmann::json::parse(report_json(run_check(IdentityId::T7, g, printed)));
    CHECK(fail["status"] == "fail");
    CHECK(fail["counterexample"]["params"]["n"] == "2");
    CHECK(fail["counterexample"]["lhs"] == "x^2 - l*x");

    CHECK(reports_json(run_all(g)) == reports_json(run_all(g)));
}
