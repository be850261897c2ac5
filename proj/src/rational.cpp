#include "degen/rational.hpp"

#include <limits>
#include <stdexcept>

namespace degen {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    std::string num_s(num);
    if (num_s.front() == '+') num_s.erase(0, 1);
    mpz_class n(num_s, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    return Rational(std::move(q));
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw std::domain_error("Rational " + to_string() + " is not an integer");
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw std::domain_error("Rational " + to_string() + " out of range");
    return static_cast<std::int64_t>(n.get_si());
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational pow(const Rational& base, unsigned exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
    return Rational(mpq_class(num, den));
}

}  // namespace degen
