#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Univariate Laurent polynomial with exact rational coefficients.
//
// Stored densely between the lowest and highest nonzero degree; both end
// coefficients are nonzero and the zero polynomial has no storage. Interior
// zeros are allowed in storage but never reported by for_each_term.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Rational& c, int degree);
    // Coefficients c[0], c[1], ... attached to degrees low, low+1, ...
    static LaurentPoly from_coeffs(int low, std::vector<Rational> coeffs);

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_constant() const { return c_.empty() || (lo_ == 0 && c_.size() == 1); }
    [[nodiscard]] bool is_monomial() const { return c_.size() == 1; }
    // Both bounds are 0 for the zero polynomial.
    [[nodiscard]] int min_deg() const { return lo_; }
    [[nodiscard]] int max_deg() const { return c_.empty() ? 0 : lo_ + static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] Rational coeff(int degree) const;
    [[nodiscard]] Rational leading_coeff() const { return c_.empty() ? Rational() : c_.back(); }
    [[nodiscard]] std::size_t term_count() const;

    template <class F>
    void for_each_term(F&& f) const {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i].is_zero()) f(lo_ + static_cast<int>(i), c_[i]);
        }
    }

    // Multiplication by u^k.
    [[nodiscard]] LaurentPoly shifted(int k) const;
    // Substitution u -> c * u^k (k may be negative, never zero).
    [[nodiscard]] LaurentPoly substituted(const Rational& c, int k) const;
    [[nodiscard]] Rational evaluate(const Rational& x) const;

    // this += a * b without a temporary.
    void add_product(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
    friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }

    // Human readable, ascending degree, e.g. "9/4 - 4/9*u^2".
    [[nodiscard]] std::string to_string(char var = 'u') const;

private:
    void normalize();

    int lo_ = 0;
    std::vector<Rational> c_;
};

// c * u^k -> c^{-1} * u^{-k}; throws NotAUnit otherwise.
LaurentPoly invert_unit(const LaurentPoly& a);

// d/dλ at λ = 0 under u = e^{-2λ}: sum of -2k * coeff_k.
Rational derivative_at_one(const LaurentPoly& a);

// Greatest common divisor up to units of the Laurent ring: monic, lowest
// degree 0. gcd(0, 0) is 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient a / b; throws InternalMismatch if b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// A rational function num/den kept in lowest terms, den monic with lowest
// degree 0.
struct PolyRatio {
    LaurentPoly num;
    LaurentPoly den;

    static PolyRatio reduced(LaurentPoly num, LaurentPoly den);

    [[nodiscard]] bool is_laurent() const { return den == LaurentPoly(1); }
    [[nodiscard]] bool is_constant() const { return is_laurent() && num.is_constant(); }
    // Constant value; only meaningful when is_constant().
    [[nodiscard]] Rational constant() const { return num.coeff(0); }
    [[nodiscard]] std::string to_string(char var = 'u') const;

    friend bool operator==(const PolyRatio&, const PolyRatio&) = default;
};

// Ratio a/b when it is a unit c*u^k of the Laurent ring (0 when a = 0, and 1
// for (0, 0)); nullopt otherwise.
std::optional<PolyRatio> proportional(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace hecke
