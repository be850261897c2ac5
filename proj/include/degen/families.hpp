#pragma once

#include "degen/egf.hpp"
#include "degen/poly.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace degen {

// Degenerate special-polynomial families over Q[x, lambda, alpha].
// Unless stated otherwise x, lambda and alpha stay symbolic.

/// (e_lambda(t) + 1) / 2 as a truncated series; its constant term is 1.
EgfSeries half_shifted_degenerate_exp(unsigned order);

/// Degenerate Euler numbers E_{n,lambda}, through series inversion of (e_lambda(t) + 1)/2.
/// Cached behind a mutex and recomputed at a larger order on demand; the returned
/// series may be longer than requested.
std::shared_ptr<const EgfSeries> degenerate_euler_numbers(unsigned order);

/// Order-alpha degenerate Euler numbers E^{(alpha)}_{n,lambda}, symbolic alpha,
/// through the symbolic power ((e_lambda(t) + 1)/2)^{-alpha}.
std::shared_ptr<const EgfSeries> degenerate_euler_order_numbers(unsigned order);

/// E_{n,lambda}(x) (with_x) or E_{n,lambda} (!with_x), inversion route.
MultiPoly euler_poly(unsigned n, bool with_x = true);

/// E^{(alpha)}_{n,lambda}(x), symbolic alpha.
MultiPoly euler_order_poly(unsigned n, bool with_x = true);

/// G^{(rho)}_{n,lambda}(x) for a nonnegative integer order rho: t^rho (2/(e_lambda(t)+1))^rho e_lambda^x(t).
/// Throws std::invalid_argument for negative rho.
MultiPoly genocchi_order_poly(unsigned n, long rho);

/// A^{(r)}_{n,lambda}(x): 2 t^r / (e_lambda(t) + 1) e_lambda^x(t).
MultiPoly aeg_poly(unsigned n, unsigned r);

/// A^{(r,alpha)}_{n,lambda}(x): t^r (2 / (e_lambda(t) + 1))^alpha e_lambda^x(t), symbolic alpha.
MultiPoly aeg_order_poly(unsigned n, unsigned r);

enum class StirlingMode { ExplicitSum, BellRoute };

/// S_{2,lambda}(n, k). Throws std::invalid_argument when k > n.
MultiPoly stirling2_deg(unsigned n, unsigned k, StirlingMode mode = StirlingMode::ExplicitSum);

enum class AltSumMode { Direct, Closed, Parity };

/// T_{k,lambda}(n) = sum_{i=0}^{n} (-1)^i (i)_{k,lambda}.
/// Parity mode needs k >= 1 and throws std::invalid_argument otherwise.
MultiPoly alt_power_sum(unsigned k, unsigned n, AltSumMode mode = AltSumMode::Direct);

/// E_{n,lambda} = sum_{k=1}^{n} (-1)^k k! (1/2)^k S_{2,lambda}(n, k).
MultiPoly euler_numbers_stirling_route(unsigned n);

// ---------------------------------------------------------------------------
// Tables

enum class FamilyKind {
    GenFallingFactorial,
    DegenerateEuler,
    DegenerateEulerOrder,
    DegenerateGenocchiOrder,
    EulerGenocchi,
    EulerGenocchiOrder,
    DegenerateStirling2,
    IncompleteBell,
    AltPowerSum,
};

struct FamilyId {
    FamilyKind kind = FamilyKind::GenFallingFactorial;
    unsigned r = 0;  // EulerGenocchi / EulerGenocchiOrder only

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// CLI name of a family, e.g. "euler-genocchi".
std::string_view family_name(FamilyKind kind);
/// Throws std::invalid_argument for an unknown name.
FamilyKind parse_family(std::string_view name);
std::vector<std::string_view> family_names();

/// Named parameter values; nullopt stands for a symbolic parameter ("sym").
using ParamMap = std::map<std::string, std::optional<Rational>>;

struct TableRow {
    unsigned n = 0;
    std::optional<unsigned> k;  // second index for triangular families
    MultiPoly poly;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct PolynomialTable {
    FamilyId family;
    ParamMap params;
    std::vector<TableRow> rows;

    bool two_indexed() const { return !rows.empty() && rows.front().k.has_value(); }
};

/// Fills rows 0..n_max for the family. Accepted parameters:
///   x, lambda: any family with that variable (specialize when given a value)
///   alpha:     euler-order, euler-genocchi-order; genocchi-order (nonnegative integer, default 1)
///   r:         euler-genocchi(-order), nonnegative integer (overrides family.r)
///   k:         alt-power-sum, required nonnegative integer
///   row:       stirling2-deg / incomplete-bell, a single row n (k = 0..row)
/// Throws std::invalid_argument naming the offending parameter.
PolynomialTable build_table(FamilyId family, const ParamMap& params, unsigned n_max);

enum class TableFormat { Csv, Json, Latex, Text };
/// Throws std::invalid_argument for an unknown format name.
TableFormat parse_table_format(std::string_view name);

std::string to_csv(const PolynomialTable& table);
std::string to_json(const PolynomialTable& table);
std::string to_latex(const PolynomialTable& table);
std::string to_text(const PolynomialTable& table);
std::string render(const PolynomialTable& table, TableFormat format);

/// LaTeX math rendering of a polynomial, e.g. "x^{2} - \frac{1}{2} \lambda x".
std::string latex_poly(const MultiPoly& p);

}  // namespace degen
