#include "degen/poly.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace degen {

unsigned Exponents::of(Var v) const {
    switch (v) {
        case Var::X: return x;
        case Var::Lambda: return lambda;
        case Var::Alpha: return alpha;
    }
    return 0;
}

unsigned& Exponents::of(Var v) {
    switch (v) {
        case Var::X: return x;
        case Var::Lambda: return lambda;
        case Var::Alpha: break;
    }
    return alpha;
}

MultiPoly::MultiPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(Var v) {
    Exponents e;
    e.of(v) = 1;
    return monomial(Rational(1), e);
}

MultiPoly MultiPoly::monomial(const Rational& coeff, Exponents e) {
    MultiPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(e, coeff);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

std::optional<Rational> MultiPoly::constant_value() const {
    if (!is_constant()) return std::nullopt;
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.of(v));
    return d;
}

unsigned MultiPoly::total_degree() const {
    // graded order puts the highest total degree first
    return terms_.empty() ? 0 : terms_.begin()->first.total();
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& expr) const {
    std::vector<MultiPoly> powers{MultiPoly(1)};
    const unsigned deg = degree(v);
    for (unsigned i = 1; i <= deg; ++i) powers.push_back(powers.back() * expr);

    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        const unsigned k = rest.of(v);
        rest.of(v) = 0;
        r += MultiPoly::monomial(c, rest) * powers[k];
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::vector<std::string> factors;
        const std::pair<const char*, unsigned> vars[] = {{"a", e.alpha}, {"l", e.lambda}, {"x", e.x}};
        for (const auto& [name, k] : vars) {
            if (k == 0) continue;
            factors.push_back(k == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(k));
        }
        const Rational mag = negative ? -c : c;
        if (factors.empty() || !mag.is_one()) factors.insert(factors.begin(), mag.to_string());
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exp) {
    MultiPoly result(1);
    MultiPoly sq = base;
    while (exp) {
        if (exp & 1u) result *= sq;
        exp >>= 1u;
        if (exp) sq = sq * sq;
    }
    return result;
}

MultiPoly poly_arith(ArithOp op, const MultiPoly& p, const MultiPoly& q) {
    switch (op) {
        case ArithOp::Add: return p + q;
        case ArithOp::Sub: return p - q;
        case ArithOp::Mul: return p * q;
    }
    return {};
}

MultiPoly falling_factorial(const MultiPoly& base, unsigned n, const MultiPoly& step) {
    MultiPoly r(1);
    for (unsigned j = 0; j < n; ++j) r *= base - step * Rational(static_cast<long>(j));
    return r;
}

Rational falling_factorial(const Rational& base, unsigned n, const Rational& step) {
    Rational r(1);
    for (unsigned j = 0; j < n; ++j) r *= base - step * Rational(static_cast<long>(j));
    return r;
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(r));
}

Rational factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(mpq_class(r));
}

}  // namespace degen
