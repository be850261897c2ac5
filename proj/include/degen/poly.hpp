#pragma once

#include "degen/rational.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace degen {

/// The fixed indeterminates. Rendered as x, l and a.
enum class Var { X, Lambda, Alpha };

struct Exponents {
    unsigned x = 0;
    unsigned lambda = 0;
    unsigned alpha = 0;

    unsigned total() const { return x + lambda + alpha; }
    unsigned of(Var v) const;
    unsigned& of(Var v);

    friend Exponents operator+(Exponents a, const Exponents& b) {
        return {a.x + b.x, a.lambda + b.lambda, a.alpha + b.alpha};
    }
    friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded lexicographic order on (x, lambda, alpha), highest term first.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        if (a.x != b.x) return a.x > b.x;
        if (a.lambda != b.lambda) return a.lambda > b.lambda;
        return a.alpha > b.alpha;
    }
};

/// Sparse polynomial in Q[x, lambda, alpha]. Zero coefficients are never stored,
/// so structural equality of the term maps is polynomial equality.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexDesc>;

    MultiPoly() = default;
    MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    MultiPoly(int constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    MultiPoly(long constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    static MultiPoly variable(Var v);
    static MultiPoly x() { return variable(Var::X); }
    static MultiPoly lambda() { return variable(Var::Lambda); }
    static MultiPoly alpha() { return variable(Var::Alpha); }
    static MultiPoly monomial(const Rational& coeff, Exponents e);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The value when the polynomial is constant, otherwise nullopt.
    std::optional<Rational> constant_value() const;
    Rational coefficient(const Exponents& e) const;

    unsigned degree(Var v) const;
    unsigned total_degree() const;
    bool depends_on(Var v) const { return degree(v) > 0; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Replaces every occurrence of `v` by `expr`.
    MultiPoly substitute(Var v, const MultiPoly& expr) const;

    /// Canonical text, e.g. "x^2 - 1/2*l*x". Zero renders as "0".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

private:
    void add_term(const Exponents& e, const Rational& c);

    TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exp);

enum class ArithOp { Add, Sub, Mul };
MultiPoly poly_arith(ArithOp op, const MultiPoly& p, const MultiPoly& q);

/// base (base - step) ... (base - (n-1) step); 1 when n == 0.
MultiPoly falling_factorial(const MultiPoly& base, unsigned n, const MultiPoly& step);
Rational falling_factorial(const Rational& base, unsigned n, const Rational& step = Rational(1));

/// C(n, k); zero for k < 0 or k > n.
Rational binomial(long n, long k);
Rational factorial(unsigned n);

}  // namespace degen
