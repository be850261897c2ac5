#pragma once

#include "degen/poly.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace degen {

/// Catalog of checkable identities, keyed by their catalog IDs (T1-T10 and the E entries).
enum class IdentityId { T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, E5, E10, E13, E26, E30, E34, E40, E43, E44, E48 };

std::string_view identity_name(IdentityId id);
/// Accepts the catalog names ("T1", "E34", ...). Throws std::invalid_argument otherwise.
IdentityId parse_identity(std::string_view name);
const std::vector<IdentityId>& all_identities();
/// True for the distribution-type identities that need odd m (T2, T8, T10, E30, E48).
bool requires_odd_m(IdentityId id);
/// True when the identity carries a symbolic alpha that the grid's alpha mode applies to.
bool uses_alpha(IdentityId id);

/// How alpha is treated during a sweep: kept symbolic, or specialized to each listed value.
struct AlphaMode {
    std::vector<Rational> values;  // empty means symbolic

    static AlphaMode symbolic() { return {}; }
    static AlphaMode specialize(std::vector<Rational> v) { return {std::move(v)}; }
    bool is_symbolic() const { return values.empty(); }
};

struct ParamGrid {
    unsigned n_max = 10;
    unsigned r_max = 3;
    std::vector<unsigned> m_values{1, 3, 5};
    AlphaMode alpha_mode = AlphaMode::symbolic();
    unsigned k_max = 10;
};

/// Thrown before any work when a grid violates an identity's preconditions.
class GridError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws GridError when any m is even or zero.
void validate_grid(const ParamGrid& grid);

/// Knobs applied to the right-hand sides.
struct IdentityOptions {
    /// The rational constant 1/2 wherever it appears on a right-hand side. Changing it
    /// is the single-constant mutation used to show a check is not vacuous.
    Rational half{1, 2};
    /// Use the typeset forms of T7 (binomial C(n+r-k, k) in place of C(n, k)) and
    /// T10 (S_{2,lambda} in place of S_{2,lambda/m}). Neither holds as an identity.
    bool as_printed = false;
};

enum class CheckStatus { Pass, Fail };

struct Counterexample {
    std::vector<std::pair<std::string, std::string>> params;  // in iteration order
    MultiPoly lhs;
    MultiPoly rhs;
};

struct CheckReport {
    IdentityId identity = IdentityId::T1;
    std::size_t points = 0;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Counterexample> first_counterexample;
    std::chrono::milliseconds elapsed{0};
};

/// Checks one identity as an exact polynomial equality at every grid point.
/// Points are visited in lexicographic order of their parameter tuples, so the
/// reported counterexample is the smallest failing tuple.
/// Throws GridError when the grid violates the identity's preconditions.
CheckReport run_check(IdentityId id, const ParamGrid& grid, const IdentityOptions& options = {});

/// Runs the whole catalog; never stops at a failing entry. Validates the grid first.
std::vector<CheckReport> run_all(const ParamGrid& grid, const IdentityOptions& options = {});

/// {"identity", "points", "status", "counterexample"?, "ms"?}; "ms" only when include_timing.
std::string report_json(const CheckReport& report, bool include_timing = false);
/// JSON array of reports.
std::string reports_json(const std::vector<CheckReport>& reports, bool include_timing = false);

// Right-hand sides shared by the sweep and by tests.

/// Entry T7: (x)_{n,lambda} rebuilt from A^{(r,alpha)}_{n+r,lambda}(x) and S_{2,lambda}; n >= 1.
MultiPoly falling_via_aeg_order(unsigned n, unsigned r, const IdentityOptions& options = {});
/// Entry T10: A^{(r)}_{n,lambda}(x) expanded over T_{l,lambda}(m-1) and S_{2,lambda/m}; m odd.
MultiPoly aeg_via_alt_sums(unsigned n, unsigned r, unsigned m, const IdentityOptions& options = {});
/// Entry T8 right-hand side:
///   sum_l C(n,l) A^{(r)}_{l,m lambda}(x) m^{r-l} E^{(alpha-1)}_{n-l,lambda}, symbolic alpha.
MultiPoly multiplication_formula_order(unsigned n, unsigned r, unsigned m);
/// Entry E30 right-hand side: A^{(r)}_{n,m lambda}(x) m^{r-n}.
MultiPoly multiplication_formula(unsigned n, unsigned r, unsigned m);

}  // namespace degen
