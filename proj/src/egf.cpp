#include "degen/egf.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace degen {

EgfSeries::EgfSeries(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("EgfSeries needs at least one coefficient");
}

EgfSeries EgfSeries::unit(unsigned order) {
    EgfSeries s(order);
    s[0] = MultiPoly(1);
    return s;
}

EgfSeries EgfSeries::truncated(unsigned order) const {
    if (order > this->order()) throw std::invalid_argument("cannot truncate a series to a higher order");
    return EgfSeries(std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

EgfSeries EgfSeries::substitute(Var v, const MultiPoly& expr) const {
    EgfSeries r(*this);
    for (auto& c : r.coeffs_) c = c.substitute(v, expr);
    return r;
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("series order mismatch in addition");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

EgfSeries& EgfSeries::operator*=(const Rational& c) {
    for (auto& p : coeffs_) p *= c;
    return *this;
}

std::string EgfSeries::to_string() const {
    std::ostringstream os;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) os << n << ": " << coeffs_[n] << '\n';
    return os.str();
}

EgfSeries degenerate_exp(const MultiPoly& x_expr, unsigned order, const MultiPoly& step) {
    EgfSeries s(order);
    MultiPoly c(1);
    for (unsigned n = 0; n <= order; ++n) {
        s[n] = c;
        c *= x_expr - step * Rational(static_cast<long>(n));
    }
    return s;
}

EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("egf_mul: order mismatch (" + std::to_string(f.order()) + " vs " +
                                    std::to_string(g.order()) + ")");
    EgfSeries r(f.order());
    for (unsigned n = 0; n <= f.order(); ++n) r[n] = egf_mul_at(f, g, n);
    return r;
}

MultiPoly egf_mul_at(const EgfSeries& f, const EgfSeries& g, unsigned n) {
    if (n > f.order() || n > g.order()) throw std::invalid_argument("egf_mul_at: index beyond truncation order");
    MultiPoly acc;
    for (unsigned k = 0; k <= n; ++k) {
        if (f[k].is_zero() || g[n - k].is_zero()) continue;
        acc += f[k] * g[n - k] * binomial(n, k);
    }
    return acc;
}

EgfSeries egf_inverse(const EgfSeries& f) {
    const auto c0 = f[0].constant_value();
    if (!c0) throw std::invalid_argument("egf_inverse: leading coefficient " + f[0].to_string() + " is not a constant");
    if (c0->is_zero()) throw std::invalid_argument("egf_inverse: leading coefficient is zero");
    const Rational inv0 = Rational(1) / *c0;
    EgfSeries g(f.order());
    g[0] = MultiPoly(inv0);
    for (unsigned n = 1; n <= f.order(); ++n) {
        MultiPoly acc;
        for (unsigned k = 1; k <= n; ++k) acc += f[k] * g[n - k] * binomial(n, k);
        g[n] = acc * (-inv0);
    }
    return g;
}

EgfSeries egf_pow_alpha(const EgfSeries& f, const MultiPoly& a) {
    if (f[0] != MultiPoly(1))
        throw std::invalid_argument("egf_pow_alpha: constant term must be 1, got " + f[0].to_string());
    const unsigned order = f.order();
    const std::span<const MultiPoly> tail = f.coeffs().subspan(1);

    std::vector<MultiPoly> falling(order + 1);  // (a)_k
    falling[0] = MultiPoly(1);
    for (unsigned k = 1; k <= order; ++k) falling[k] = falling[k - 1] * (a - MultiPoly(static_cast<long>(k - 1)));

    EgfSeries r = EgfSeries::unit(order);
    for (unsigned n = 1; n <= order; ++n) {
        MultiPoly acc;
        for (unsigned k = 1; k <= n; ++k) {
            if (falling[k].is_zero()) break;
            acc += falling[k] * bell_partial(n, k, tail);
        }
        r[n] = std::move(acc);
    }
    return r;
}

EgfSeries egf_shift(const EgfSeries& f, unsigned r) {
    if (r > f.order())
        throw std::invalid_argument("egf_shift: shift " + std::to_string(r) + " exceeds order " +
                                    std::to_string(f.order()));
    EgfSeries s(f.order());
    for (unsigned n = r; n <= f.order(); ++n) s[n] = f[n - r] * falling_factorial(Rational(static_cast<long>(n)), r);
    return s;
}

MultiPoly bell_partial(unsigned n, unsigned k, std::span<const MultiPoly> xs) {
    if (k > n)
        throw std::invalid_argument("bell_partial: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    if (k == 0) return MultiPoly(n == 0 ? 1 : 0);
    const unsigned width = n - k + 1;
    if (xs.size() < width)
        throw std::invalid_argument("bell_partial: need " + std::to_string(width) + " arguments, got " +
                                    std::to_string(xs.size()));

    // scaled[i] = x_{i+1} / (i+1)!, powers cached lazily
    std::vector<std::vector<MultiPoly>> scaled_pow(width);
    for (unsigned i = 0; i < width; ++i) scaled_pow[i].push_back(MultiPoly(1));
    auto power = [&](unsigned i, unsigned e) -> const MultiPoly& {
        auto& cache = scaled_pow[i];
        while (cache.size() <= e) cache.push_back(cache.back() * (xs[i] * (Rational(1) / factorial(i + 1))));
        return cache[e];
    };

    MultiPoly total;
    const Rational n_fact = factorial(n);
    std::vector<unsigned> mult(width, 0);
    // Assign multiplicities from the largest part size down to 1.
    std::function<void(unsigned, unsigned, unsigned)> walk = [&](unsigned size, unsigned parts_left, unsigned sum_left) {
        if (size == 1) {
            if (parts_left != sum_left) return;
            mult[0] = parts_left;
            Rational coeff = n_fact;
            MultiPoly term(1);
            for (unsigned i = 0; i < width; ++i) {
                if (mult[i] == 0) continue;
                coeff /= factorial(mult[i]);
                term *= power(i, mult[i]);
            }
            total += term * coeff;
            return;
        }
        // each part has size >= 1, so sum_left - size*l >= parts_left - l
        for (unsigned l = 0; l <= parts_left && size * l <= sum_left; ++l) {
            if (sum_left - size * l < parts_left - l) break;
            mult[size - 1] = l;
            walk(size - 1, parts_left - l, sum_left - size * l);
        }
        mult[size - 1] = 0;
    };
    walk(width, k, n);
    return total;
}

}  // namespace degen
