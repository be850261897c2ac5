#include "degen/families.hpp"

#include <json.hpp>

#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace degen {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 9> kFamilyNames{{
    {FamilyKind::GenFallingFactorial, "falling"},
    {FamilyKind::DegenerateEuler, "euler"},
    {FamilyKind::DegenerateEulerOrder, "euler-order"},
    {FamilyKind::DegenerateGenocchiOrder, "genocchi-order"},
    {FamilyKind::EulerGenocchi, "euler-genocchi"},
    {FamilyKind::EulerGenocchiOrder, "euler-genocchi-order"},
    {FamilyKind::DegenerateStirling2, "stirling2-deg"},
    {FamilyKind::IncompleteBell, "incomplete-bell"},
    {FamilyKind::AltPowerSum, "alt-power-sum"},
}};

std::set<std::string> allowed_params(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::GenFallingFactorial:
        case FamilyKind::DegenerateEuler: return {"x", "lambda"};
        case FamilyKind::IncompleteBell: return {"x", "lambda", "row"};
        case FamilyKind::DegenerateEulerOrder: return {"x", "lambda", "alpha"};
        case FamilyKind::DegenerateGenocchiOrder: return {"x", "lambda", "alpha"};
        case FamilyKind::EulerGenocchi: return {"x", "lambda", "r"};
        case FamilyKind::EulerGenocchiOrder: return {"x", "lambda", "alpha", "r"};
        case FamilyKind::DegenerateStirling2: return {"lambda", "row"};
        case FamilyKind::AltPowerSum: return {"lambda", "k"};
    }
    return {};
}

/// Value of an integer parameter; nullopt when absent. Rejects "sym", fractions and negatives.
std::optional<unsigned> count_param(const ParamMap& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) return std::nullopt;
    if (!it->second) throw std::invalid_argument("parameter '" + name + "' must be a number, not sym");
    const Rational& v = *it->second;
    if (!v.is_integer() || v.sign() < 0)
        throw std::invalid_argument("parameter '" + name + "' must be a nonnegative integer, got " + v.to_string());
    return static_cast<unsigned>(v.to_int64());
}

MultiPoly specialize(MultiPoly p, const ParamMap& params) {
    const std::pair<const char*, Var> vars[] = {{"x", Var::X}, {"lambda", Var::Lambda}, {"alpha", Var::Alpha}};
    for (const auto& [name, var] : vars) {
        auto it = params.find(name);
        if (it != params.end() && it->second) p = p.substitute(var, MultiPoly(*it->second));
    }
    return p;
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
    for (const auto& [k, name] : kFamilyNames)
        if (k == kind) return name;
    return "unknown";
}

FamilyKind parse_family(std::string_view name) {
    for (const auto& [k, n] : kFamilyNames)
        if (n == name) return k;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::vector<std::string_view> family_names() {
    std::vector<std::string_view> out;
    for (const auto& entry : kFamilyNames) out.push_back(entry.second);
    return out;
}

PolynomialTable build_table(FamilyId family, const ParamMap& params, unsigned n_max) {
    const auto allowed = allowed_params(family.kind);
    for (const auto& [name, value] : params)
        if (!allowed.contains(name))
            throw std::invalid_argument("parameter '" + name + "' is not accepted by family " +
                                        std::string(family_name(family.kind)));

    if (auto r = count_param(params, "r")) family.r = *r;
    const std::optional<unsigned> row = count_param(params, "row");

    PolynomialTable table{family, params, {}};
    auto emit = [&](unsigned n, std::optional<unsigned> k, MultiPoly p) {
        table.rows.push_back({n, k, specialize(std::move(p), params)});
    };
    auto triangle = [&](const std::function<MultiPoly(unsigned, unsigned)>& entry) {
        const unsigned lo = row ? *row : 0;
        const unsigned hi = row ? *row : n_max;
        for (unsigned n = lo; n <= hi; ++n)
            for (unsigned k = 0; k <= n; ++k) emit(n, k, entry(n, k));
    };

    switch (family.kind) {
        case FamilyKind::GenFallingFactorial:
            for (unsigned n = 0; n <= n_max; ++n)
                emit(n, std::nullopt, falling_factorial(MultiPoly::x(), n, MultiPoly::lambda()));
            break;
        case FamilyKind::DegenerateEuler:
            for (unsigned n = 0; n <= n_max; ++n) emit(n, std::nullopt, euler_poly(n));
            break;
        case FamilyKind::DegenerateEulerOrder:
            for (unsigned n = 0; n <= n_max; ++n) emit(n, std::nullopt, euler_order_poly(n));
            break;
        case FamilyKind::DegenerateGenocchiOrder: {
            long rho = 1;
            if (params.contains("alpha")) {
                const auto& a = params.at("alpha");
                if (!a || !a->is_integer() || a->sign() < 0)
                    throw std::invalid_argument("parameter 'alpha' must be a nonnegative integer for genocchi-order");
                rho = a->to_int64();
            }
            ParamMap rest = params;
            rest.erase("alpha");
            for (unsigned n = 0; n <= n_max; ++n)
                table.rows.push_back({n, std::nullopt, specialize(genocchi_order_poly(n, rho), rest)});
            break;
        }
        case FamilyKind::EulerGenocchi:
            for (unsigned n = 0; n <= n_max; ++n) emit(n, std::nullopt, aeg_poly(n, family.r));
            break;
        case FamilyKind::EulerGenocchiOrder:
            for (unsigned n = 0; n <= n_max; ++n) emit(n, std::nullopt, aeg_order_poly(n, family.r));
            break;
        case FamilyKind::DegenerateStirling2:
            triangle([](unsigned n, unsigned k) { return stirling2_deg(n, k); });
            break;
        case FamilyKind::IncompleteBell:
            triangle([](unsigned n, unsigned k) {
                std::vector<MultiPoly> xs;
                for (unsigned i = 1; i + k <= n + 1; ++i)
                    xs.push_back(falling_factorial(MultiPoly::x(), i, MultiPoly::lambda()));
                return bell_partial(n, k, xs);
            });
            break;
        case FamilyKind::AltPowerSum: {
            const auto k = count_param(params, "k");
            if (!k) throw std::invalid_argument("parameter 'k' is required for family alt-power-sum");
            for (unsigned n = 0; n <= n_max; ++n) emit(n, std::nullopt, alt_power_sum(*k, n));
            break;
        }
    }
    return table;
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    if (name == "latex") return TableFormat::Latex;
    if (name == "text") return TableFormat::Text;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string to_csv(const PolynomialTable& table) {
    std::ostringstream os;
    const bool two = table.two_indexed();
    os << (two ? "n,k,polynomial\n" : "n,polynomial\n");
    for (const auto& row : table.rows) {
        os << row.n << ',';
        if (two) os << *row.k << ',';
        os << row.poly << '\n';
    }
    return os.str();
}

std::string to_json(const PolynomialTable& table) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json entry;
        entry["n"] = row.n;
        if (row.k) entry["k"] = *row.k;
        entry["poly"] = row.poly.to_string();
        arr.push_back(std::move(entry));
    }
    return arr.dump(2) + "\n";
}

std::string latex_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        const Rational mag = negative ? -c : c;
        std::string coeff;
        if (mag.is_integer())
            coeff = mag.to_string();
        else
            coeff = "\\frac{" + mpz_class(mag.raw().get_num()).get_str() + "}{" +
                    mpz_class(mag.raw().get_den()).get_str() + "}";

        std::vector<std::string> factors;
        const std::pair<const char*, unsigned> vars[] = {{"\\alpha", e.alpha}, {"\\lambda", e.lambda}, {"x", e.x}};
        for (const auto& [name, k] : vars) {
            if (k == 0) continue;
            factors.push_back(k == 1 ? std::string(name) : std::string(name) + "^{" + std::to_string(k) + "}");
        }
        if (factors.empty() || !mag.is_one()) factors.insert(factors.begin(), coeff);
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " " : "") << factors[i];
    }
    return os.str();
}

std::string to_latex(const PolynomialTable& table) {
    std::ostringstream os;
    const bool two = table.two_indexed();
    os << "\\begin{tabular}{" << (two ? "rr|l" : "r|l") << "}\n\\hline\n";
    os << (two ? "$n$ & $k$ & polynomial \\\\\n" : "$n$ & polynomial \\\\\n") << "\\hline\n";
    for (const auto& row : table.rows) {
        os << row.n << " & ";
        if (two) os << *row.k << " & ";
        os << '$' << latex_poly(row.poly) << "$ \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
    return os.str();
}

std::string to_text(const PolynomialTable& table) {
    std::ostringstream os;
    for (const auto& row : table.rows) {
        os << row.n;
        if (row.k) os << ',' << *row.k;
        os << ": " << row.poly << '\n';
    }
    return os.str();
}

std::string render(const PolynomialTable& table, TableFormat format) {
    switch (format) {
        case TableFormat::Csv: return to_csv(table);
        case TableFormat::Json: return to_json(table);
        case TableFormat::Latex: return to_latex(table);
        case TableFormat::Text: return to_text(table);
    }
    return {};
}

}  // namespace degen
