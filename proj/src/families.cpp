#include "degen/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace degen {

namespace {

constexpr unsigned kMinCachedOrder = 16;

Rational signed_unit(unsigned n) { return Rational(n % 2 == 0 ? 1 : -1); }

Rational pow2(int e) {
    return e >= 0 ? pow(Rational(2), static_cast<unsigned>(e)) : pow(Rational(1, 2), static_cast<unsigned>(-e));
}

MultiPoly int_poly(long v) { return MultiPoly(Rational(v)); }

/// Lazily grown, mutex-guarded cache of one number series.
class SeriesCache {
public:
    explicit SeriesCache(std::function<EgfSeries(unsigned)> build) : build_(std::move(build)) {}

    std::shared_ptr<const EgfSeries> get(unsigned order) {
        std::lock_guard lock(mutex_);
        if (!series_ || series_->order() < order)
            series_ = std::make_shared<const EgfSeries>(build_(std::max({order, kMinCachedOrder,
                                                                         series_ ? 2 * series_->order() : 0u})));
        return series_;
    }

private:
    std::function<EgfSeries(unsigned)> build_;
    std::mutex mutex_;
    std::shared_ptr<const EgfSeries> series_;
};

SeriesCache& euler_cache() {
    static SeriesCache cache([](unsigned order) { return egf_inverse(half_shifted_degenerate_exp(order)); });
    return cache;
}

SeriesCache& euler_order_cache() {
    static SeriesCache cache(
        [](unsigned order) { return egf_pow_alpha(half_shifted_degenerate_exp(order), -MultiPoly::alpha()); });
    return cache;
}

/// Coefficient n of numbers(t) * e_lambda^x(t).
MultiPoly attach_x(const EgfSeries& numbers, unsigned n) {
    return egf_mul_at(numbers.truncated(n), degenerate_exp(MultiPoly::x(), n), n);
}

}  // namespace

EgfSeries half_shifted_degenerate_exp(unsigned order) {
    EgfSeries h = degenerate_exp(MultiPoly(1), order) * Rational(1, 2);
    h[0] = MultiPoly(1);
    return h;
}

std::shared_ptr<const EgfSeries> degenerate_euler_numbers(unsigned order) { return euler_cache().get(order); }

std::shared_ptr<const EgfSeries> degenerate_euler_order_numbers(unsigned order) {
    return euler_order_cache().get(order);
}

MultiPoly euler_poly(unsigned n, bool with_x) {
    auto numbers = degenerate_euler_numbers(n);
    return with_x ? attach_x(*numbers, n) : (*numbers)[n];
}

MultiPoly euler_order_poly(unsigned n, bool with_x) {
    auto numbers = degenerate_euler_order_numbers(n);
    return with_x ? attach_x(*numbers, n) : (*numbers)[n];
}

MultiPoly genocchi_order_poly(unsigned n, long rho) {
    if (rho < 0) throw std::invalid_argument("genocchi_order_poly: order must be a nonnegative integer");
    if (static_cast<unsigned long>(rho) > n) return {};
    const auto order_rho = egf_pow_alpha(half_shifted_degenerate_exp(n), int_poly(-rho));
    const auto with_x = egf_mul(order_rho, degenerate_exp(MultiPoly::x(), n));
    return egf_shift(with_x, static_cast<unsigned>(rho))[n];
}

MultiPoly aeg_poly(unsigned n, unsigned r) {
    if (r > n) return {};
    const auto base = egf_shift(degenerate_euler_numbers(n)->truncated(n), r);
    return egf_mul_at(base, degenerate_exp(MultiPoly::x(), n), n);
}

MultiPoly aeg_order_poly(unsigned n, unsigned r) {
    if (r > n) return {};
    const auto base = egf_shift(degenerate_euler_order_numbers(n)->truncated(n), r);
    return egf_mul_at(base, degenerate_exp(MultiPoly::x(), n), n);
}

MultiPoly stirling2_deg(unsigned n, unsigned k, StirlingMode mode) {
    if (k > n)
        throw std::invalid_argument("stirling2_deg: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    const MultiPoly lambda = MultiPoly::lambda();
    if (mode == StirlingMode::BellRoute) {
        std::vector<MultiPoly> xs;
        for (unsigned i = 1; i + k <= n + 1; ++i) xs.push_back(falling_factorial(MultiPoly(1), i, lambda));
        return bell_partial(n, k, xs);
    }
    MultiPoly acc;
    for (unsigned j = 0; j <= k; ++j)
        acc += falling_factorial(int_poly(j), n, lambda) * (binomial(k, j) * signed_unit(k - j));
    return acc * (Rational(1) / factorial(k));
}

namespace {

/// sum_{i=1}^{j} (-1)^i i! (1/2)^{i+1} S_{2,lambda}(j, i), i.e. E_{j,lambda} / 2 for j >= 1.
MultiPoly half_euler_number_stirling(unsigned j) {
    MultiPoly acc;
    for (unsigned i = 1; i <= j; ++i)
        acc += stirling2_deg(j, i) * (signed_unit(i) * factorial(i) * pow(Rational(1, 2), i + 1));
    return acc;
}

// T_{k,lambda}(2q)
MultiPoly alt_power_sum_even(unsigned k, unsigned q) {
    const MultiPoly lambda = MultiPoly::lambda();
    const MultiPoly base = int_poly(2 * q + 1);
    MultiPoly acc = falling_factorial(base, k, lambda) * Rational(1, 2);
    acc += half_euler_number_stirling(k) * Rational(2);
    for (unsigned j = 1; j < k; ++j)
        acc += falling_factorial(base, k - j, lambda) * half_euler_number_stirling(j) * binomial(k, j);
    return acc;
}

// T_{k,lambda}(2q + 1)
MultiPoly alt_power_sum_odd(unsigned k, unsigned q) {
    const MultiPoly half_lambda = MultiPoly::lambda() * Rational(1, 2);
    const MultiPoly base = int_poly(q + 1);
    MultiPoly acc = -(falling_factorial(base, k, half_lambda) * pow2(static_cast<int>(k) - 1));
    for (unsigned j = 1; j < k; ++j) {
        MultiPoly inner;
        for (unsigned i = 1; i <= j; ++i)
            inner += stirling2_deg(j, i) *
                     (signed_unit(i) * factorial(i) * pow2(static_cast<int>(k) - static_cast<int>(j + i) - 1));
        acc -= falling_factorial(base, k - j, half_lambda) * inner * binomial(k, j);
    }
    return acc;
}

}  // namespace

MultiPoly alt_power_sum(unsigned k, unsigned n, AltSumMode mode) {
    const MultiPoly lambda = MultiPoly::lambda();
    switch (mode) {
        case AltSumMode::Direct: {
            MultiPoly acc;
            for (unsigned i = 0; i <= n; ++i) acc += falling_factorial(int_poly(i), k, lambda) * signed_unit(i);
            return acc;
        }
        case AltSumMode::Closed: {
            const MultiPoly shifted = euler_poly(k, true).substitute(Var::X, int_poly(n + 1));
            return (euler_poly(k, false) + shifted * signed_unit(n)) * Rational(1, 2);
        }
        case AltSumMode::Parity:
            if (k == 0) throw std::invalid_argument("alt_power_sum: Parity mode requires k >= 1");
            return n % 2 == 0 ? alt_power_sum_even(k, n / 2) : alt_power_sum_odd(k, n / 2);
    }
    throw std::invalid_argument("alt_power_sum: unknown mode");
}

MultiPoly euler_numbers_stirling_route(unsigned n) {
    if (n == 0) return MultiPoly(1);
    MultiPoly acc;
    for (unsigned k = 1; k <= n; ++k)
        acc += stirling2_deg(n, k) * (signed_unit(k) * factorial(k) * pow(Rational(1, 2), k));
    return acc;
}

}  // namespace degen
