#include "degen/poly.hpp"
#include "degen/rational.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace degen;

namespace {
const MultiPoly x = MultiPoly::x();
const MultiPoly l = MultiPoly::lambda();
const MultiPoly a = MultiPoly::alpha();
}  // namespace

TEST_CASE("rational keeps lowest terms") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("sym"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2).to_int64(), std::domain_error);
}

TEST_CASE("rational arithmetic is exact far beyond machine range") {
    Rational big = pow(Rational(3), 200);
    CHECK((big + Rational(1)) - big == Rational(1));
    CHECK(big / big == Rational(1));
}

TEST_CASE("poly_arith examples") {
    CHECK(poly_arith(ArithOp::Add, x, -x).is_zero());
    CHECK(poly_arith(ArithOp::Add, x, -x).terms().empty());
    CHECK(poly_arith(ArithOp::Mul, x, x - l).to_string() == "x^2 - l*x");

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const MultiPoly p = oracle::random_poly(rng);
        CHECK(poly_arith(ArithOp::Mul, p, MultiPoly(1)) == p);
        CHECK(poly_arith(ArithOp::Sub, p, p).terms().empty());
    }
}

TEST_CASE("ring axioms on random small polynomials") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 60; ++i) {
        const MultiPoly p = oracle::random_poly(rng), q = oracle::random_poly(rng), r = oracle::random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == MultiPoly());
    }
}

TEST_CASE("canonical rendering is graded lex with names a, l, x") {
    CHECK(MultiPoly().to_string() == "0");
    CHECK(MultiPoly(Rational(-3, 4)).to_string() == "-3/4");
    CHECK((x * x - l * x * Rational(1, 2)).to_string() == "x^2 - 1/2*l*x");
    CHECK((a * a * l - x + MultiPoly(2)).to_string() == "a^2*l - x + 2");
    CHECK((l + x + a).to_string() == "x + l + a");
    CHECK((-x).to_string() == "-x");
}

TEST_CASE("poly_substitute examples") {
    CHECK((x * x - l * x).substitute(Var::X, x + MultiPoly(1)).to_string() == "x^2 - l*x + 2*x - l + 1");
    // x(x - lambda/3), expanded by hand
    const MultiPoly ff2 = falling_factorial(x, 2, l);
    CHECK(ff2.substitute(Var::Lambda, l * Rational(1, 3)) == x * x - l * x * Rational(1, 3));
    CHECK((a * (a - MultiPoly(1))).substitute(Var::Alpha, MultiPoly(-2)) == MultiPoly(6));
}

TEST_CASE("substitution degree bookkeeping") {
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        const MultiPoly p = oracle::random_poly(rng, 5, 3);
        const MultiPoly e = oracle::random_poly(rng, 3, 1);
        const MultiPoly s = p.substitute(Var::X, e);
        CHECK(s.total_degree() <= p.degree(Var::X) * e.total_degree() + p.total_degree());
        // identity substitution
        CHECK(p.substitute(Var::X, x) == p);
    }
}

TEST_CASE("falling_factorial") {
    CHECK(falling_factorial(x, 0, l) == MultiPoly(1));
    CHECK(falling_factorial(x, 3, l) == x * (x - l) * (x - l * Rational(2)));
    CHECK(falling_factorial(a, 2, MultiPoly(1)) == a * a - a);
    for (unsigned n = 0; n <= 12; ++n) {
        const MultiPoly ff = falling_factorial(x, n, l);
        CHECK(ff.total_degree() == n);
        CHECK(ff.substitute(Var::Lambda, MultiPoly()) == pow(x, n));
        CHECK(falling_factorial(x, n, MultiPoly(1)).substitute(Var::X, MultiPoly(static_cast<long>(n))) ==
              MultiPoly(factorial(n)));
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(4, 5) == Rational(0));
    CHECK(binomial(4, -1) == Rational(0));
    for (long n = 0; n <= 20; ++n) CHECK(binomial(n, 0) == Rational(1));
}
