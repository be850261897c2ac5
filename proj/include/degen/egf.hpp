#pragma once

#include "degen/poly.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace degen {

/// Truncated exponential generating function f(t) = sum_{n<=N} c_n t^n / n!.
/// Always holds exactly order() + 1 coefficients.
class EgfSeries {
public:
    /// Zero series of the given order.
    explicit EgfSeries(unsigned order) : coeffs_(order + 1) {}
    /// Throws std::invalid_argument when `coeffs` is empty.
    explicit EgfSeries(std::vector<MultiPoly> coeffs);

    static EgfSeries unit(unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const MultiPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
    MultiPoly& operator[](std::size_t n) { return coeffs_.at(n); }
    std::span<const MultiPoly> coeffs() const { return coeffs_; }

    /// Keeps c_0..c_order; order must not exceed the current order.
    EgfSeries truncated(unsigned order) const;
    /// Applies `Var -> expr` to every coefficient.
    EgfSeries substitute(Var v, const MultiPoly& expr) const;

    EgfSeries& operator+=(const EgfSeries& o);
    EgfSeries& operator*=(const Rational& c);
    friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
    friend EgfSeries operator*(EgfSeries a, const Rational& c) { return a *= c; }

    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

    /// One line per coefficient: "n: <poly>".
    std::string to_string() const;

private:
    std::vector<MultiPoly> coeffs_;
};

/// e_step^{x_expr}(t) = (1 + step t)^{x_expr/step}; coefficients are (x_expr)_{n,step}.
EgfSeries degenerate_exp(const MultiPoly& x_expr, unsigned order, const MultiPoly& step = MultiPoly::lambda());

/// Binomial convolution. Throws std::invalid_argument on order mismatch.
EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g);

/// Coefficient n of egf_mul(f, g) without forming the rest of the product.
MultiPoly egf_mul_at(const EgfSeries& f, const EgfSeries& g, unsigned n);

/// Multiplicative inverse; c_0 must be a nonzero rational constant.
EgfSeries egf_inverse(const EgfSeries& f);

/// f(t)^a for symbolic or rational `a`, through the incomplete Bell expansion
///   [t^n/n!] f^a = sum_{k=1}^{n} (a)_k B_{n,k}(c_1, ..., c_{n-k+1}).
/// Requires c_0 == 1 exactly.
EgfSeries egf_pow_alpha(const EgfSeries& f, const MultiPoly& a);

/// t^r f(t): c'_n = (n)_r c_{n-r}. Order is preserved, so r must not exceed it.
EgfSeries egf_shift(const EgfSeries& f, unsigned r);

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}) via the multinomial sum
/// over l_1 + ... = k, l_1 + 2 l_2 + ... = n. `xs[i]` holds x_{i+1}.
MultiPoly bell_partial(unsigned n, unsigned k, std::span<const MultiPoly> xs);

}  // namespace degen
