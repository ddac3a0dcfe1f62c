#include "hecke/laurent_poly.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

using Dense = std::vector<Rational>;  // ascending coefficients, degree 0 first

void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense dense_of(const LaurentPoly& a) {
    Dense out;
    if (a.is_zero()) return out;
    out.resize(static_cast<std::size_t>(a.max_deg() - a.min_deg() + 1));
    a.for_each_term([&](int d, const Rational& c) { out[static_cast<std::size_t>(d - a.min_deg())] = c; });
    return out;
}

// Remainder of a modulo b (b nonzero), with the quotient optionally collected.
Dense poly_divmod(Dense a, const Dense& b, Dense* quotient) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const Rational lead_inv = b.back().inverse();
    if (quotient != nullptr) quotient->assign(a.size() >= b.size() ? a.size() - db : 0, Rational());
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Rational f = a.back() * lead_inv;
        if (quotient != nullptr) (*quotient)[shift] = f;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int degree) {
    LaurentPoly p(c);
    if (!p.is_zero()) p.lo_ = degree;
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<Rational> coeffs) {
    LaurentPoly p;
    p.lo_ = low;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        lo_ += static_cast<int>(lead);
    }
}

Rational LaurentPoly::coeff(int degree) const {
    if (c_.empty() || degree < lo_ || degree > max_deg()) return {};
    return c_[static_cast<std::size_t>(degree - lo_)];
}

std::size_t LaurentPoly::term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.lo_ += k;
    return p;
}

LaurentPoly LaurentPoly::substituted(const Rational& c, int k) const {
    if (k == 0) throw DimensionMismatch("substitution u -> c*u^0 collapses the variable");
    if (is_zero()) return {};
    const int a = k * lo_;
    const int b = k * max_deg();
    const int low = std::min(a, b);
    std::vector<Rational> out(static_cast<std::size_t>(std::max(a, b) - low + 1));
    for_each_term([&](int d, const Rational& v) { out[static_cast<std::size_t>(k * d - low)] = v * c.pow(d); });
    return from_coeffs(low, std::move(out));
}

Rational LaurentPoly::evaluate(const Rational& x) const {
    if (is_zero()) return {};
    // Horner on the dense block, then the monomial offset.
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc * x.pow(lo_);
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const int plo = a.lo_ + b.lo_;
    const int phi = a.max_deg() + b.max_deg();
    if (c_.empty()) {
        lo_ = plo;
        c_.assign(static_cast<std::size_t>(phi - plo + 1), Rational());
    } else {
        if (plo < lo_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - plo), Rational());
            lo_ = plo;
        }
        if (phi > max_deg()) c_.resize(static_cast<std::size_t>(phi - lo_ + 1));
    }
    thread_local mpq_class tmp;
    const std::size_t off = static_cast<std::size_t>(plo - lo_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const mpq_srcptr ai = a.c_[i].raw().get_mpq_t();
        if (mpq_sgn(ai) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            const mpq_srcptr bj = b.c_[j].raw().get_mpq_t();
            if (mpq_sgn(bj) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), ai, bj);
            mpq_ptr dst = c_[off + i + j].raw().get_mpq_t();
            mpq_add(dst, dst, tmp.get_mpq_t());
        }
    }
    normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int low = std::min(lo_, o.lo_);
    const int high = std::max(max_deg(), o.max_deg());
    if (low < lo_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - low), Rational());
        lo_ = low;
    }
    c_.resize(static_cast<std::size_t>(high - lo_ + 1));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.lo_ - lo_) + i] += o.c_[i];
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        lo_ = 0;
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    out.add_product(a, b);
    return out;
}

std::string LaurentPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for_each_term([&](int d, const Rational& c) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (d == 0) {
            os << mag;
            return;
        }
        if (mag != Rational(1)) os << mag << '*';
        os << var;
        if (d != 1) os << '^' << d;
    });
    return os.str();
}

LaurentPoly invert_unit(const LaurentPoly& a) {
    if (!a.is_monomial()) throw NotAUnit("not a unit of the Laurent ring: " + a.to_string());
    return LaurentPoly::monomial(a.coeff(a.min_deg()).inverse(), -a.min_deg());
}

Rational derivative_at_one(const LaurentPoly& a) {
    Rational out;
    a.for_each_term([&](int d, const Rational& c) { out += Rational(-2L * d) * c; });
    return out;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    Dense x = dense_of(a);
    Dense y = dense_of(b);
    if (x.empty() && y.empty()) return {};
    while (!y.empty()) {
        Dense r = poly_divmod(x, y, nullptr);
        x = std::move(y);
        y = std::move(r);
    }
    const Rational lead = x.back().inverse();
    for (auto& c : x) c *= lead;
    return LaurentPoly::from_coeffs(0, std::move(x));
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw NotInvertible("division by the zero polynomial");
    if (a.is_zero()) return {};
    Dense q;
    Dense r = poly_divmod(dense_of(a), dense_of(b), &q);
    if (!r.empty()) throw InternalMismatch("inexact polynomial division");
    return LaurentPoly::from_coeffs(a.min_deg() - b.min_deg(), std::move(q));
}

PolyRatio PolyRatio::reduced(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw NotInvertible("rational function with zero denominator");
    if (num.is_zero()) return {LaurentPoly(), LaurentPoly(1)};
    const LaurentPoly g = poly_gcd(num, den);
    num = exact_divide(num, g);
    den = exact_divide(den, g);
    const int m = den.min_deg();
    num = num.shifted(-m);
    den = den.shifted(-m);
    const Rational lead = den.leading_coeff().inverse();
    num *= lead;
    den *= lead;
    return {std::move(num), std::move(den)};
}

std::string PolyRatio::to_string(char var) const {
    if (is_laurent()) return num.to_string(var);
    return "(" + num.to_string(var) + ")/(" + den.to_string(var) + ")";
}

std::optional<PolyRatio> proportional(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) {
        if (a.is_zero()) return PolyRatio{LaurentPoly(1), LaurentPoly(1)};
        return std::nullopt;
    }
    PolyRatio r = PolyRatio::reduced(a, b);
    if (!r.is_laurent() || r.num.term_count() > 1) return std::nullopt;
    return r;
}

}  // namespace hecke
