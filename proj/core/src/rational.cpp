#include "hecke/rational.hpp"

#include <cctype>
#include <ostream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class to_mpz(std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError("rational with zero denominator '" + std::string(text) + "'");
    mpq_class v(to_mpz(num), d);
    v.canonicalize();
    return Rational(v);
}

std::string Rational::fraction() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw NotInvertible("inverse of zero rational");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int e) const {
    Rational base = e < 0 ? inverse() : *this;
    unsigned k = e < 0 ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
    Rational out(1);
    while (k != 0) {
        if (k & 1U) out *= base;
        base *= base;
        k >>= 1U;
    }
    return out;
}

std::optional<Rational> Rational::sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class& num = v_.get_num();
    const mpz_class& den = v_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw NotInvertible("division by zero rational");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace hecke
