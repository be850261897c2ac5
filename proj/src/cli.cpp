#include "degen/cli.hpp"

#include "degen/egf.hpp"
#include "degen/families.hpp"
#include "degen/identities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace degen::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "p/q" or "sym"
std::optional<Rational> parse_param_value(const std::string& name, const std::string& text) {
    if (text == "sym") return std::nullopt;
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("parameter '" + name + "': expected p/q or sym, got '" + text + "'");
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

std::vector<unsigned> parse_m_list(const std::string& text) {
    std::vector<unsigned> ms;
    for (const auto& item : split_list(text)) {
        Rational v;
        try {
            v = Rational::parse(item);
        } catch (const std::invalid_argument&) {
            throw UsageError("--m: '" + item + "' is not an integer");
        }
        if (!v.is_integer() || v.sign() < 0) throw UsageError("--m: '" + item + "' is not a nonnegative integer");
        ms.push_back(static_cast<unsigned>(v.to_int64()));
    }
    return ms;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    const std::string resolved = resolve_output_path(path);
    if (resolved.empty()) {
        out << content;
        return;
    }
    std::ofstream file(resolved, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + resolved + "' for writing");
    file << content;
    if (!file.flush()) throw IoError("failed writing '" + resolved + "'");
}

/// Named family parameters as given on the command line.
struct ParamFlags {
    std::string x, lambda, alpha, r, k, row;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--x", x, "x value (p/q or sym)");
        cmd->add_option("--lambda", lambda, "lambda value (p/q or sym)");
        cmd->add_option("--alpha", alpha, "alpha value (p/q or sym)");
        cmd->add_option("--r", r, "order r");
        cmd->add_option("--k", k, "power k (alt-power-sum)");
        cmd->add_option("--row", row, "single row n (stirling2-deg, incomplete-bell)");
    }

    ParamMap to_map() const {
        ParamMap params;
        const std::pair<const char*, const std::string*> all[] = {{"x", &x}, {"lambda", &lambda}, {"alpha", &alpha},
                                                                  {"r", &r}, {"k", &k},           {"row", &row}};
        for (const auto& [name, value] : all)
            if (!value->empty()) params[name] = parse_param_value(name, *value);
        return params;
    }
};

struct GridFlags {
    unsigned n_max = 0, r_max = 0, k_max = 0;
    std::string m;
    std::string alpha = "sym";
    CLI::Option* n_opt = nullptr;
    CLI::Option* r_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* m_opt = nullptr;
};

CliConfig effective_config(const std::string& config_path) {
    CliConfig cfg;
    if (!config_path.empty()) {
        try {
            cfg = load_config(config_path, cfg);
        } catch (const std::exception& e) {
            throw IoError(e.what());
        }
    }
    return cfg;
}

int cmd_table(const CliConfig& cfg, const std::string& family_text, const ParamFlags& flags, std::ostream& out) {
    FamilyKind kind;
    try {
        kind = parse_family(family_text);
    } catch (const std::invalid_argument& e) {
        std::string names;
        for (auto n : family_names()) names += (names.empty() ? "" : ", ") + std::string(n);
        throw UsageError(std::string(e.what()) + " (known: " + names + ")");
    }
    TableFormat format;
    try {
        format = parse_table_format(cfg.format.empty() ? "csv" : cfg.format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    PolynomialTable table;
    try {
        table = build_table(FamilyId{kind, 0}, flags.to_map(), cfg.n_max);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    write_output(cfg.output, render(table, format), out);
    return kOk;
}

int cmd_verify(const CliConfig& cfg, const std::string& identity, const GridFlags& flags, bool timing, bool as_printed,
               const std::string& half, std::ostream& out, std::ostream& err) {
    if (cfg.truncation_order < cfg.n_max + cfg.r_max)
        throw UsageError("truncation_order " + std::to_string(cfg.truncation_order) + " is below n_max + r_max = " +
                         std::to_string(cfg.n_max + cfg.r_max));
    ParamGrid grid;
    grid.n_max = cfg.n_max;
    grid.r_max = cfg.r_max;
    grid.k_max = cfg.k_max;
    grid.m_values = cfg.m_values;
    if (flags.alpha != "sym") {
        std::vector<Rational> values;
        for (const auto& item : split_list(flags.alpha)) {
            auto v = parse_param_value("alpha", item);
            if (!v) throw UsageError("--alpha: use either sym or a list of rationals");
            values.push_back(*v);
        }
        if (values.empty()) throw UsageError("--alpha: empty list");
        grid.alpha_mode = AlphaMode::specialize(std::move(values));
    }
    try {
        validate_grid(grid);
    } catch (const GridError& e) {
        throw UsageError(e.what());
    }

    std::vector<IdentityId> ids;
    if (identity == "all") {
        ids = all_identities();
    } else {
        try {
            ids.push_back(parse_identity(identity));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    IdentityOptions options;
    options.as_printed = as_printed;
    if (!half.empty()) {
        auto v = parse_param_value("half", half);
        if (!v) throw UsageError("--half needs a rational");
        options.half = *v;
    }

    std::vector<CheckReport> reports;
    for (IdentityId id : ids) reports.push_back(run_check(id, grid, options));

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.status == CheckStatus::Pass;

    const std::string format = cfg.format.empty() ? "json" : cfg.format;
    std::string content;
    if (format == "json") {
        content = reports_json(reports, timing);
    } else if (format == "text") {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << identity_name(r.identity) << ' ' << (r.status == CheckStatus::Pass ? "pass" : "FAIL") << ' '
               << r.points << " points";
            if (timing) os << ' ' << r.elapsed.count() << " ms";
            os << '\n';
            if (r.first_counterexample) {
                os << "  at";
                for (const auto& [k, v] : r.first_counterexample->params) os << ' ' << k << '=' << v;
                os << "\n  lhs: " << r.first_counterexample->lhs << "\n  rhs: " << r.first_counterexample->rhs << '\n';
            }
        }
        content = os.str();
    } else {
        throw UsageError("verify: unknown format '" + format + "' (json or text)");
    }
    write_output(cfg.output, content, out);
    if (!all_pass) err << "identity check failed\n";
    return all_pass ? kOk : kIdentityFailure;
}

int cmd_expand(const CliConfig& cfg, const std::string& gf, unsigned order, const ParamFlags& flags,
               std::ostream& out) {
    if (order > cfg.truncation_order)
        throw UsageError("order " + std::to_string(order) + " exceeds the configured maximum " +
                         std::to_string(cfg.truncation_order));
    ParamMap params = flags.to_map();
    auto take_count = [&](const char* name, unsigned fallback) -> unsigned {
        auto it = params.find(name);
        if (it == params.end()) return fallback;
        if (!it->second || !it->second->is_integer() || it->second->sign() < 0)
            throw UsageError(std::string("parameter '") + name + "' must be a nonnegative integer");
        const auto v = static_cast<unsigned>(it->second->to_int64());
        params.erase(it);
        return v;
    };

    std::function<MultiPoly(unsigned)> coeff;
    if (gf == "degenerate-exp") {
        coeff = [](unsigned n) { return falling_factorial(MultiPoly::x(), n, MultiPoly::lambda()); };
    } else if (gf == "euler") {
        coeff = [](unsigned n) { return euler_poly(n); };
    } else if (gf == "euler-order") {
        coeff = [](unsigned n) { return euler_order_poly(n); };
    } else if (gf == "genocchi-order") {
        const unsigned rho = take_count("alpha", 1);
        coeff = [rho](unsigned n) { return genocchi_order_poly(n, rho); };
    } else if (gf == "aeg") {
        const unsigned r = take_count("r", 0);
        coeff = [r](unsigned n) { return aeg_poly(n, r); };
    } else if (gf == "aeg-order") {
        const unsigned r = take_count("r", 0);
        coeff = [r](unsigned n) { return aeg_order_poly(n, r); };
    } else {
        throw UsageError("unknown generating function '" + gf +
                         "' (degenerate-exp, euler, euler-order, genocchi-order, aeg, aeg-order)");
    }
    for (const auto& [name, value] : params)
        if (name != "x" && name != "lambda" && name != "alpha")
            throw UsageError("parameter '" + name + "' is not accepted by --gf " + gf);

    EgfSeries series(order);
    for (unsigned n = 0; n <= order; ++n) {
        MultiPoly c = coeff(n);
        const std::pair<const char*, Var> vars[] = {{"x", Var::X}, {"lambda", Var::Lambda}, {"alpha", Var::Alpha}};
        for (const auto& [name, var] : vars) {
            auto it = params.find(name);
            if (it != params.end() && it->second) c = c.substitute(var, MultiPoly(*it->second));
        }
        series[n] = std::move(c);
    }
    write_output(cfg.output, series.to_string(), out);
    return kOk;
}

}  // namespace

CliConfig load_config(const std::string& path, CliConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config '" + path + "': " + e.what());
    }
    try {
        if (j.contains("truncation_order")) base.truncation_order = j.at("truncation_order").get<unsigned>();
        if (j.contains("n_max")) base.n_max = j.at("n_max").get<unsigned>();
        if (j.contains("r_max")) base.r_max = j.at("r_max").get<unsigned>();
        if (j.contains("k_max")) base.k_max = j.at("k_max").get<unsigned>();
        if (j.contains("m_values")) base.m_values = j.at("m_values").get<std::vector<unsigned>>();
        if (j.contains("format")) base.format = j.at("format").get<std::string>();
        if (j.contains("output")) base.output = j.at("output").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config '" + path + "': " + e.what());
    }
    return base;
}

std::string resolve_output_path(const std::string& path) {
    if (path.empty()) return path;
    const char* dir = std::getenv("DEGEN_OUTPUT_DIR");
    const std::filesystem::path p(path);
    if (dir == nullptr || *dir == '\0' || p.is_absolute()) return path;
    return (std::filesystem::path(dir) / p).string();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degenerate Euler-Genocchi polynomial tables and exact identity checks", "degen"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format, output;
    app.add_option("--config", config_path, "JSON config file (flags override it)");

    auto* table = app.add_subcommand("table", "Print a polynomial table");
    std::string family;
    ParamFlags table_params;
    unsigned table_n_max = 0;
    table->add_option("--family", family, "family name")->required();
    auto* table_n = table->add_option("--n-max", table_n_max, "last row index");
    table->add_option("--format", format, "csv, json, latex or text");
    table->add_option("--out", output, "output path (default stdout)");
    table->add_option("--config", config_path, "JSON config file");
    table_params.add_to(table);

    auto* verify = app.add_subcommand("verify", "Check identities exactly over a parameter grid");
    std::string identity = "all";
    GridFlags grid;
    bool timing = false, as_printed = false;
    std::string half;
    verify->add_option("--identity", identity, "catalog name (T1..T10, E5, ...) or all");
    grid.n_opt = verify->add_option("--n-max", grid.n_max, "largest n");
    grid.r_opt = verify->add_option("--r-max", grid.r_max, "largest r");
    grid.k_opt = verify->add_option("--k-max", grid.k_max, "largest k");
    grid.m_opt = verify->add_option("--m", grid.m, "comma-separated odd m values (empty for none)");
    verify->add_option("--alpha", grid.alpha, "sym, or comma-separated rationals to specialize alpha");
    verify->add_option("--format", format, "json or text");
    verify->add_option("--out", output, "report path (default stdout)");
    verify->add_option("--config", config_path, "JSON config file");
    verify->add_flag("--timing", timing, "include elapsed milliseconds in the report");
    verify->add_flag("--as-printed", as_printed, "use the typeset forms of T7 and T10");
    verify->add_option("--half", half, "replace the constant 1/2 on right-hand sides (mutation check)");

    auto* expand = app.add_subcommand("expand", "Print generating-function coefficients");
    std::string gf;
    unsigned order = 6;
    ParamFlags expand_params;
    expand->add_option("--gf", gf, "degenerate-exp, euler, euler-order, genocchi-order, aeg, aeg-order")->required();
    expand->add_option("--order", order, "last coefficient index");
    expand->add_option("--out", output, "output path (default stdout)");
    expand->add_option("--config", config_path, "JSON config file");
    expand_params.add_to(expand);

    std::vector<std::string> argv_store{"degen"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        CliConfig cfg = effective_config(config_path);
        if (!format.empty()) cfg.format = format;
        if (!output.empty()) cfg.output = output;

        if (table->parsed()) {
            if (table_n->count() > 0) cfg.n_max = table_n_max;
            return cmd_table(cfg, family, table_params, out);
        }
        if (verify->parsed()) {
            if (grid.n_opt->count() > 0) cfg.n_max = grid.n_max;
            if (grid.r_opt->count() > 0) cfg.r_max = grid.r_max;
            if (grid.k_opt->count() > 0) cfg.k_max = grid.k_max;
            if (grid.m_opt->count() > 0) cfg.m_values = parse_m_list(grid.m);
            return cmd_verify(cfg, identity, grid, timing, as_printed, half, out, err);
        }
        return cmd_expand(cfg, gf, order, expand_params, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace degen::cli
