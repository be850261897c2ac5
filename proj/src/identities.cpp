#include "degen/identities.hpp"

#include "degen/egf.hpp"
#include "degen/families.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

namespace degen {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 20> kNames{{
    {IdentityId::T1, "T1"},   {IdentityId::T2, "T2"},   {IdentityId::T3, "T3"},   {IdentityId::T4, "T4"},
    {IdentityId::T5, "T5"},   {IdentityId::T6, "T6"},   {IdentityId::T7, "T7"},   {IdentityId::T8, "T8"},
    {IdentityId::T9, "T9"},   {IdentityId::T10, "T10"}, {IdentityId::E5, "E5"},   {IdentityId::E10, "E10"},
    {IdentityId::E13, "E13"}, {IdentityId::E26, "E26"}, {IdentityId::E30, "E30"}, {IdentityId::E34, "E34"},
    {IdentityId::E40, "E40"}, {IdentityId::E43, "E43"}, {IdentityId::E44, "E44"}, {IdentityId::E48, "E48"},
}};

const MultiPoly kX = MultiPoly::x();
const MultiPoly kLambda = MultiPoly::lambda();
const MultiPoly kAlpha = MultiPoly::alpha();

Rational sign_of(unsigned n) { return Rational(n % 2 == 0 ? 1 : -1); }
MultiPoly num(long v) { return MultiPoly(Rational(v)); }
Rational falling_count(unsigned n, unsigned r) { return falling_factorial(Rational(static_cast<long>(n)), r); }

/// q^e for integer e; q must be nonzero when e < 0.
Rational ipow(const Rational& q, int e) {
    return e >= 0 ? pow(q, static_cast<unsigned>(e)) : pow(Rational(1) / q, static_cast<unsigned>(-e));
}

/// (base)_{n,step} with a negative n read as an empty contribution.
MultiPoly deg_falling(const MultiPoly& base, int n, const MultiPoly& step = kLambda) {
    return n < 0 ? MultiPoly() : falling_factorial(base, static_cast<unsigned>(n), step);
}

/// (1)_{1,lambda}, ..., (1)_{width,lambda}
std::vector<MultiPoly> unit_falling_args(unsigned width) {
    std::vector<MultiPoly> xs;
    for (unsigned i = 1; i <= width; ++i) xs.push_back(falling_factorial(MultiPoly(1), i, kLambda));
    return xs;
}

/// m values for the negative-integer-order entries (T3, E13): {1, 2, 3} plus the grid's m.
std::vector<unsigned> negative_order_values(const ParamGrid& grid) {
    std::set<unsigned> ms{1, 2, 3};
    ms.insert(grid.m_values.begin(), grid.m_values.end());
    return {ms.begin(), ms.end()};
}

std::vector<unsigned> sorted_odd_m(const ParamGrid& grid) {
    std::set<unsigned> ms(grid.m_values.begin(), grid.m_values.end());
    return {ms.begin(), ms.end()};
}

using Params = std::vector<std::pair<std::string, std::string>>;

/// Accumulates points and keeps the first failure.
class Sink {
public:
    explicit Sink(const ParamGrid& grid) : grid_(grid) {}

    void operator()(const Params& params, const MultiPoly& lhs, const MultiPoly& rhs) {
        ++points_;
        if (!failure_ && lhs != rhs) failure_ = Counterexample{params, lhs, rhs};
    }

    /// Checks once per alpha value (or once with symbolic alpha), appending "alpha" to the tuple.
    void with_alpha(const Params& params, const MultiPoly& lhs, const MultiPoly& rhs) {
        if (grid_.alpha_mode.is_symbolic()) {
            Params p = params;
            p.emplace_back("alpha", "sym");
            (*this)(p, lhs, rhs);
            return;
        }
        for (const Rational& a : grid_.alpha_mode.values) {
            Params p = params;
            p.emplace_back("alpha", a.to_string());
            (*this)(p, lhs.substitute(Var::Alpha, MultiPoly(a)), rhs.substitute(Var::Alpha, MultiPoly(a)));
        }
    }

    std::size_t points() const { return points_; }
    const std::optional<Counterexample>& failure() const { return failure_; }

private:
    const ParamGrid& grid_;
    std::size_t points_ = 0;
    std::optional<Counterexample> failure_;
};

Params tuple(std::initializer_list<std::pair<const char*, long>> values) {
    Params p;
    for (const auto& [name, v] : values) p.emplace_back(name, std::to_string(v));
    return p;
}

/// Memoized family values for one check run.
class Families {
public:
    const MultiPoly& aeg(unsigned n, unsigned r) { return memo(aeg_, {n, r}, [&] { return aeg_poly(n, r); }); }
    const MultiPoly& aeg_order(unsigned n, unsigned r) {
        return memo(aeg_order_, {n, r}, [&] { return aeg_order_poly(n, r); });
    }
    const MultiPoly& stirling(unsigned n, unsigned k) {
        return memo(stirling_, {n, k}, [&] { return stirling2_deg(n, k); });
    }
    const MultiPoly& alt_sum(unsigned k, unsigned n) {
        return memo(alt_, {k, n}, [&] { return alt_power_sum(k, n, AltSumMode::Direct); });
    }

private:
    using Key = std::pair<unsigned, unsigned>;
    template <typename F>
    static const MultiPoly& memo(std::map<Key, MultiPoly>& cache, Key key, F&& build) {
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, build()).first;
        return it->second;
    }

    std::map<Key, MultiPoly> aeg_, aeg_order_, stirling_, alt_;
};

/// sum_{k=1}^{n} (-alpha)_k h^k S_{2,lambda}(n, k)
MultiPoly euler_order_number_stirling(Families& fam, unsigned n, const Rational& half) {
    MultiPoly acc;
    for (unsigned k = 1; k <= n; ++k)
        acc += falling_factorial(-kAlpha, k, MultiPoly(1)) * fam.stirling(n, k) * pow(half, k);
    return acc;
}

// --- individual entries -----------------------------------------------------

void check_t1(Sink& sink, const ParamGrid& g, const IdentityOptions& o, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r) {
            MultiPoly inner = fam.aeg(n + r, r);
            for (unsigned l = 0; l <= n; ++l)
                inner += falling_factorial(MultiPoly(1), n - l, kLambda) * fam.aeg(l + r, r) *
                         binomial(n + r, l + r);
            const MultiPoly rhs = inner * (o.half / falling_count(n + r, r));
            sink(tuple({{"n", n}, {"r", r}}), falling_factorial(kX, n, kLambda), rhs);
        }
}

void check_t2(Sink& sink, const ParamGrid& g, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r)
            for (unsigned m : sorted_odd_m(g)) {
                const Rational inv_m = Rational(1) / Rational(static_cast<long>(m));
                const MultiPoly scaled = fam.aeg(n, r).substitute(Var::Lambda, kLambda * inv_m);
                MultiPoly rhs;
                for (unsigned l = 0; l < m; ++l)
                    rhs += scaled.substitute(Var::X, (kX + num(l)) * inv_m) * sign_of(l);
                rhs *= ipow(Rational(static_cast<long>(m)), static_cast<int>(n) - static_cast<int>(r));
                sink(tuple({{"n", n}, {"r", r}, {"m", m}}), fam.aeg(n, r), rhs);
            }
}

void check_t3(Sink& sink, const ParamGrid& g, const IdentityOptions& o, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r)
            for (unsigned m : negative_order_values(g)) {
                const MultiPoly lhs = fam.aeg_order(n, r).substitute(Var::Alpha, num(-static_cast<long>(m)));
                MultiPoly sum;
                for (unsigned k = 0; k <= m; ++k)
                    sum += deg_falling(kX + num(k), static_cast<int>(n) - static_cast<int>(r)) * binomial(m, k);
                const MultiPoly rhs = sum * (falling_count(n, r) * pow(o.half, m));
                sink(tuple({{"n", n}, {"r", r}, {"m", m}}), lhs, rhs);
            }
}

void check_t4(Sink& sink, const ParamGrid& g, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r) {
            const MultiPoly rhs = n >= r ? euler_order_poly(n - r, true) * falling_count(n, r) : MultiPoly();
            sink.with_alpha(tuple({{"n", n}, {"r", r}}), fam.aeg_order(n, r), rhs);
        }
}

void check_t5(Sink& sink, const ParamGrid& g, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= std::min(g.r_max, n); ++r) {
            const unsigned d = n - r;
            MultiPoly rhs = falling_factorial(kX, d, kLambda);
            for (unsigned k = 0; k < d; ++k)
                rhs += euler_order_poly(d - k, false) * falling_factorial(kX, k, kLambda) * binomial(d, k);
            rhs *= falling_count(n, r);
            sink.with_alpha(tuple({{"n", n}, {"r", r}}), fam.aeg_order(n, r), rhs);
        }
}

void check_t6(Sink& sink, const ParamGrid& g, const IdentityOptions& o, Families& fam) {
    for (unsigned n = 1; n <= g.n_max; ++n) {
        const MultiPoly series_coeff = euler_order_poly(n, false);
        const auto args = unit_falling_args(n);
        MultiPoly bell_form;
        for (unsigned k = 1; k <= n; ++k)
            bell_form += falling_factorial(-kAlpha, k, MultiPoly(1)) * bell_partial(n, k, args) * pow(o.half, k);
        Params bell = tuple({{"n", n}});
        Params stirling = bell;
        bell.emplace_back("form", "bell");
        stirling.emplace_back("form", "stirling");
        sink.with_alpha(bell, series_coeff, bell_form);
        sink.with_alpha(stirling, series_coeff, euler_order_number_stirling(fam, n, o.half));
    }
}

void check_t7(Sink& sink, const ParamGrid& g, const IdentityOptions& o) {
    for (unsigned n = 1; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r)
            sink.with_alpha(tuple({{"n", n}, {"r", r}}), falling_factorial(kX, n, kLambda),
                            falling_via_aeg_order(n, r, o));
}

void check_t8(Sink& sink, const ParamGrid& g, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r)
            for (unsigned m : sorted_odd_m(g)) {
                const Rational inv_m = Rational(1) / Rational(static_cast<long>(m));
                MultiPoly lhs;
                for (unsigned k = 0; k < m; ++k)
                    lhs += fam.aeg_order(n, r).substitute(Var::X, (kX + num(k)) * inv_m) * sign_of(k);
                sink.with_alpha(tuple({{"n", n}, {"r", r}, {"m", m}}), lhs, multiplication_formula_order(n, r, m));
            }
}

void check_t9(Sink& sink, const ParamGrid& g, const IdentityOptions& o, Families& fam) {
    auto half_euler = [&](unsigned j) {  // sum_i (-1)^i i! h^{i+1} S(j, i)
        MultiPoly acc;
        for (unsigned i = 1; i <= j; ++i)
            acc += fam.stirling(j, i) * (sign_of(i) * factorial(i) * pow(o.half, i + 1));
        return acc;
    };
    for (unsigned k = 1; k <= g.k_max; ++k)
        for (unsigned n = 0; n <= g.n_max; ++n) {
            const MultiPoly base = num(n + 1);
            const Rational sn = sign_of(n);
            MultiPoly rhs = falling_factorial(base, k, kLambda) * (sn * o.half);
            rhs += half_euler(k) * (Rational(1) + sn);
            MultiPoly tail;
            for (unsigned j = 1; j < k; ++j)
                tail += falling_factorial(base, k - j, kLambda) * half_euler(j) * binomial(k, j);
            rhs += tail * sn;
            sink(tuple({{"k", k}, {"n", n}}), fam.alt_sum(k, n), rhs);
        }
}

void check_t10(Sink& sink, const ParamGrid& g, const IdentityOptions& o, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r)
            for (unsigned m : sorted_odd_m(g))
                sink(tuple({{"n", n}, {"r", r}, {"m", m}}), fam.aeg(n, r), aeg_via_alt_sums(n, r, m, o));
}

void check_e5(Sink& sink, const ParamGrid& g, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r) {
            MultiPoly rhs;
            for (unsigned l = 0; l <= n; ++l)
                rhs += falling_factorial(MultiPoly(1), n - l, kLambda) * fam.aeg(l, r) * binomial(n, l);
            sink(tuple({{"n", n}, {"r", r}}), fam.aeg(n, r).substitute(Var::X, kX + num(1)), rhs);
        }
}

void check_e10(Sink& sink, const ParamGrid& g, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r) {
            MultiPoly first, second;
            for (unsigned k = 0; k <= n; ++k) {
                const MultiPoly num_k = fam.aeg_order(k, r).substitute(Var::X, MultiPoly());
                const MultiPoly num_nk = fam.aeg_order(n - k, r).substitute(Var::X, MultiPoly());
                first += num_k * falling_factorial(kX, n - k, kLambda) * binomial(n, k);
                second += num_nk * falling_factorial(kX, k, kLambda) * binomial(n, k);
            }
            Params ascending = tuple({{"n", n}, {"r", r}});
            Params descending = ascending;
            ascending.emplace_back("form", "ascending");
            descending.emplace_back("form", "descending");
            sink.with_alpha(ascending, fam.aeg_order(n, r), first);
            sink.with_alpha(descending, fam.aeg_order(n, r), second);
        }
}

void check_e13(Sink& sink, const ParamGrid& g, const IdentityOptions& o, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r)
            for (unsigned m : negative_order_values(g)) {
                const MultiPoly lhs = fam.aeg_order(n, r).substitute(Var::Alpha, num(-static_cast<long>(m)));
                MultiPoly sum;
                for (unsigned k = 0; k <= n; ++k) {
                    if (n - k < r) continue;  // (n-k)_r vanishes
                    for (unsigned j = 0; j <= m; ++j)
                        sum += falling_factorial(num(j), n - k - r, kLambda) * falling_factorial(kX, k, kLambda) *
                               (binomial(n, k) * binomial(m, j) * falling_count(n - k, r));
                }
                sink(tuple({{"n", n}, {"r", r}, {"m", m}}), lhs, sum * pow(o.half, m));
            }
}

void check_e26(Sink& sink, const ParamGrid& g, const IdentityOptions& o, Families& fam) {
    for (unsigned n = 1; n <= g.n_max; ++n)
        for (unsigned r = 0; r < std::min(n, g.r_max + 1); ++r) {
            const MultiPoly lhs = fam.aeg_order(n, r).substitute(Var::X, MultiPoly());
            const MultiPoly rhs = euler_order_number_stirling(fam, n - r, o.half) * falling_count(n, r);
            sink.with_alpha(tuple({{"n", n}, {"r", r}}), lhs, rhs);
        }
}

void check_e30(Sink& sink, const ParamGrid& g, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n)
        for (unsigned r = 0; r <= g.r_max; ++r)
            for (unsigned m : sorted_odd_m(g)) {
                const Rational inv_m = Rational(1) / Rational(static_cast<long>(m));
                MultiPoly lhs;
                for (unsigned k = 0; k < m; ++k)
                    lhs += fam.aeg(n, r).substitute(Var::X, (kX + num(k)) * inv_m) * sign_of(k);
                sink(tuple({{"n", n}, {"r", r}, {"m", m}}), lhs, multiplication_formula(n, r, m));
            }
}

void check_e34(Sink& sink, const ParamGrid& g, const IdentityOptions& o, Families& fam) {
    for (unsigned k = 0; k <= g.k_max; ++k) {
        const MultiPoly number = euler_poly(k, false);
        const MultiPoly poly = euler_poly(k, true);
        for (unsigned n = 0; n <= g.n_max; ++n) {
            const MultiPoly rhs = (number + poly.substitute(Var::X, num(n + 1)) * sign_of(n)) * o.half;
            sink(tuple({{"k", k}, {"n", n}}), fam.alt_sum(k, n), rhs);
        }
    }
}

void check_e40(Sink& sink, const ParamGrid& g, const IdentityOptions& o, Families& fam) {
    for (unsigned n = 0; n <= g.n_max; ++n) {
        MultiPoly rhs(1);
        if (n > 0) {
            rhs = MultiPoly();
            for (unsigned k = 1; k <= n; ++k)
                rhs += fam.stirling(n, k) * (sign_of(k) * factorial(k) * pow(o.half, k));
        }
        sink(tuple({{"n", n}}), euler_poly(n, false), rhs);
    }
}

void check_parity(Sink& sink, const ParamGrid& g, Families& fam, bool odd) {
    for (unsigned k = 1; k <= g.k_max; ++k)
        for (unsigned n = 0; n <= g.n_max; ++n) {
            const unsigned arg = 2 * n + (odd ? 1 : 0);
            sink(tuple({{"k", k}, {"n", n}}), fam.alt_sum(k, arg), alt_power_sum(k, arg, AltSumMode::Parity));
        }
}

void check_e48(Sink& sink, const ParamGrid& g, Families& fam) {
    for (unsigned k = 0; k <= g.k_max; ++k)
        for (unsigned m : sorted_odd_m(g)) {
            const Rational mr(static_cast<long>(m));
            const Rational inv_m = Rational(1) / mr;
            const MultiPoly m_lambda = kLambda * mr;
            MultiPoly lhs;
            for (unsigned i = 0; i < m; ++i)
                lhs += falling_factorial((kX + num(i)) * inv_m, k, kLambda) * sign_of(i);
            MultiPoly rhs;
            for (unsigned l = 0; l <= k; ++l)
                rhs += falling_factorial(kX, k - l, m_lambda) *
                       fam.alt_sum(l, m - 1).substitute(Var::Lambda, m_lambda) * binomial(k, l);
            sink(tuple({{"k", k}, {"m", m}}), lhs, rhs * pow(inv_m, k));
        }
}

}  // namespace

std::string_view identity_name(IdentityId id) {
    for (const auto& [i, name] : kNames)
        if (i == id) return name;
    return "?";
}

IdentityId parse_identity(std::string_view name) {
    for (const auto& [i, n] : kNames)
        if (n == name) return i;
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& entry : kNames) v.push_back(entry.first);
        return v;
    }();
    return ids;
}

bool requires_odd_m(IdentityId id) {
    switch (id) {
        case IdentityId::T2:
        case IdentityId::T8:
        case IdentityId::T10:
        case IdentityId::E30:
        case IdentityId::E48: return true;
        default: return false;
    }
}

bool uses_alpha(IdentityId id) {
    switch (id) {
        case IdentityId::T4:
        case IdentityId::T5:
        case IdentityId::T6:
        case IdentityId::T7:
        case IdentityId::T8:
        case IdentityId::E10:
        case IdentityId::E26: return true;
        default: return false;
    }
}

void validate_grid(const ParamGrid& grid) {
    for (unsigned m : grid.m_values)
        if (m == 0 || m % 2 == 0)
            throw GridError("m=" + std::to_string(m) +
                            " violates the odd-m precondition (m = 1 mod 2) of the distribution identities");
}

MultiPoly falling_via_aeg_order(unsigned n, unsigned r, const IdentityOptions& options) {
    Families fam;
    MultiPoly sum;
    for (unsigned k = 0; k < n; ++k) {
        const Rational choose = options.as_printed ? binomial(n + r - k, k) : binomial(n, k);
        MultiPoly inner;
        for (unsigned j = 1; j <= n - k; ++j)
            inner += falling_factorial(-kAlpha, j, MultiPoly(1)) * fam.stirling(n - k, j) * pow(options.half, j);
        sum += inner * falling_factorial(kX, k, kLambda) * choose;
    }
    return fam.aeg_order(n + r, r) * (Rational(1) / falling_count(n + r, r)) - sum;
}

MultiPoly aeg_via_alt_sums(unsigned n, unsigned r, unsigned m, const IdentityOptions& options) {
    if (n < r) return {};
    Families fam;
    const unsigned d = n - r;
    const Rational mr(static_cast<long>(m));
    const MultiPoly stirling_lambda = options.as_printed ? kLambda : kLambda * (Rational(1) / mr);

    MultiPoly first;
    for (unsigned l = 0; l <= d; ++l)
        first += falling_factorial(kX, d - l, kLambda) * fam.alt_sum(l, m - 1) * binomial(d, l);

    MultiPoly second;
    for (unsigned k = 0; k < d; ++k)
        for (unsigned j = 1; j <= d - k; ++j) {
            const MultiPoly s = fam.stirling(d - k, j).substitute(Var::Lambda, stirling_lambda);
            const Rational c = factorial(j) * pow(-options.half, j) * binomial(d, k) * pow(mr, d - k);
            for (unsigned l = 0; l <= k; ++l)
                second += s * fam.alt_sum(l, m - 1) * falling_factorial(kX, k - l, kLambda) * (c * binomial(k, l));
        }
    return (first + second) * falling_count(n, r);
}

MultiPoly multiplication_formula_order(unsigned n, unsigned r, unsigned m) {
    const Rational mr(static_cast<long>(m));
    const MultiPoly m_lambda = kLambda * mr;
    MultiPoly rhs;
    for (unsigned l = 0; l <= n; ++l) {
        const MultiPoly shifted_order = euler_order_poly(n - l, false).substitute(Var::Alpha, kAlpha - MultiPoly(1));
        rhs += aeg_poly(l, r).substitute(Var::Lambda, m_lambda) * shifted_order *
               (binomial(n, l) * ipow(mr, static_cast<int>(r) - static_cast<int>(l)));
    }
    return rhs;
}

MultiPoly multiplication_formula(unsigned n, unsigned r, unsigned m) {
    const Rational mr(static_cast<long>(m));
    return aeg_poly(n, r).substitute(Var::Lambda, kLambda * mr) *
           ipow(mr, static_cast<int>(r) - static_cast<int>(n));
}

CheckReport run_check(IdentityId id, const ParamGrid& grid, const IdentityOptions& options) {
    if (requires_odd_m(id)) validate_grid(grid);
    const auto start = std::chrono::steady_clock::now();
    Sink sink(grid);
    Families fam;
    switch (id) {
        case IdentityId::T1: check_t1(sink, grid, options, fam); break;
        case IdentityId::T2: check_t2(sink, grid, fam); break;
        case IdentityId::T3: check_t3(sink, grid, options, fam); break;
        case IdentityId::T4: check_t4(sink, grid, fam); break;
        case IdentityId::T5: check_t5(sink, grid, fam); break;
        case IdentityId::T6: check_t6(sink, grid, options, fam); break;
        case IdentityId::T7: check_t7(sink, grid, options); break;
        case IdentityId::T8: check_t8(sink, grid, fam); break;
        case IdentityId::T9: check_t9(sink, grid, options, fam); break;
        case IdentityId::T10: check_t10(sink, grid, options, fam); break;
        case IdentityId::E5: check_e5(sink, grid, fam); break;
        case IdentityId::E10: check_e10(sink, grid, fam); break;
        case IdentityId::E13: check_e13(sink, grid, options, fam); break;
        case IdentityId::E26: check_e26(sink, grid, options, fam); break;
        case IdentityId::E30: check_e30(sink, grid, fam); break;
        case IdentityId::E34: check_e34(sink, grid, options, fam); break;
        case IdentityId::E40: check_e40(sink, grid, options, fam); break;
        case IdentityId::E43: check_parity(sink, grid, fam, false); break;
        case IdentityId::E44: check_parity(sink, grid, fam, true); break;
        case IdentityId::E48: check_e48(sink, grid, fam); break;
    }
    CheckReport report;
    report.identity = id;
    report.points = sink.points();
    report.first_counterexample = sink.failure();
    report.status = report.first_counterexample ? CheckStatus::Fail : CheckStatus::Pass;
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

std::vector<CheckReport> run_all(const ParamGrid& grid, const IdentityOptions& options) {
    validate_grid(grid);
    std::vector<CheckReport> reports;
    for (IdentityId id : all_identities()) reports.push_back(run_check(id, grid, options));
    return reports;
}

namespace {

nlohmann::ordered_json report_object(const CheckReport& report, bool include_timing) {
    nlohmann::ordered_json j;
    j["identity"] = identity_name(report.identity);
    j["points"] = report.points;
    j["status"] = report.status == CheckStatus::Pass ? "pass" : "fail";
    if (report.first_counterexample) {
        nlohmann::ordered_json cx;
        nlohmann::ordered_json params;
        for (const auto& [name, value] : report.first_counterexample->params) params[name] = value;
        cx["params"] = params;
        cx["lhs"] = report.first_counterexample->lhs.to_string();
        cx["rhs"] = report.first_counterexample->rhs.to_string();
        j["counterexample"] = cx;
    }
    if (include_timing) j["ms"] = report.elapsed.count();
    return j;
}

}  // namespace

std::string report_json(const CheckReport& report, bool include_timing) {
    return report_object(report, include_timing).dump(2) + "\n";
}

std::string reports_json(const std::vector<CheckReport>& reports, bool include_timing) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_object(r, include_timing));
    return arr.dump(2) + "\n";
}

}  // namespace degen
