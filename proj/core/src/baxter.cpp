#include "hecke/baxter.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

const LaurentPoly kU = LaurentPoly::monomial(Rational(1), 1);

std::string join_ratio(const std::optional<PolyRatio>& r) { return r ? r->to_string() : "none"; }

}  // namespace

PolyMatrix r_hat_local(const HeckeRep& rep) { return rep.g_local() - rep.g_inv_local() * kU; }

PolyMatrix boundary_k_local(const PolyMatrix& gb, const PolyMatrix& gb_inv, const Rational& c) {
    return gb + PolyMatrix::identity(gb.layout(), c) * kU - gb_inv * LaurentPoly::monomial(Rational(1), 2);
}

PolyMatrix k_minus_local(const HeckeRep& rep) {
    return boundary_k_local(rep.g0_local(), rep.g0_inv_local(), rep.params().c_minus);
}

PolyMatrix k_bar_plus_local(const HeckeRep& rep) {
    return boundary_k_local(rep.gN_local(), rep.gN_inv_local(), rep.params().c_plus);
}

PolyMatrix r_hat(const HeckeRep& rep, int i) { return rep.gen(i) - rep.gen_inv(i) * kU; }

PolyMatrix k_minus_hat(const HeckeRep& rep) { return embed(k_minus_local(rep), {0}, rep.site_layout()); }

PolyMatrix k_bar_plus_hat(const HeckeRep& rep) {
    return embed(k_bar_plus_local(rep), {rep.sites() - 1}, rep.site_layout());
}

PolyMatrix at_power(const PolyMatrix& local, const Rational& c, int m) {
    return m == 0 ? local.evaluated(c) : local.substituted(c, m);
}

std::string to_string(End e) { return e == End::Left ? "left" : "right"; }

CheckReport check_ybe(const HeckeRep& rep, std::span<const Rational> second) {
    CheckReport r;
    r.name = "ybe";
    r.params = rep.echo();
    ScopedTimer timer(r);
    const int N = rep.local_dim();
    const Layout three{N, N, N};
    const PolyMatrix rh = r_hat_local(rep);
    for (const Rational& u2 : second) {
        auto r12 = [&](const PolyMatrix& m) { return embed(m, {0, 1}, three); };
        auto r23 = [&](const PolyMatrix& m) { return embed(m, {1, 2}, three); };
        const PolyMatrix diff = rh.substituted(u2.inverse(), 1);
        const PolyMatrix fixed = rh.evaluated(u2);
        const PolyMatrix lhs = r12(diff) * r23(rh) * r12(fixed);
        const PolyMatrix rhs = r23(fixed) * r12(rh) * r23(diff);
        if (!r.expect_equal(lhs, rhs, "RelationFailure", "ybe at u2=" + u2.fraction())) return r;
    }
    r.details["specializations"] = std::to_string(second.size());
    return r;
}

CheckReport check_re_for(const HeckeRep& rep, const PolyMatrix& k_local, End end, std::span<const Rational> second) {
    CheckReport r;
    r.name = "re_" + to_string(end);
    r.params = rep.echo();
    ScopedTimer timer(r);
    const int N = rep.local_dim();
    const Layout two{N, N};
    const PolyMatrix rh = r_hat_local(rep);
    const int site = end == End::Left ? 0 : 1;
    for (const Rational& u2 : second) {
        const PolyMatrix r_minus = embed(rh.substituted(u2.inverse(), 1), {0, 1}, two);
        const PolyMatrix r_plus = embed(rh.substituted(u2, 1), {0, 1}, two);
        const PolyMatrix k1 = embed(k_local, {site}, two);
        const PolyMatrix k2 = embed(k_local.evaluated(u2), {site}, two);
        const PolyMatrix lhs = r_minus * k1 * r_plus * k2;
        const PolyMatrix rhs = k2 * r_plus * k1 * r_minus;
        if (!r.expect_equal(lhs, rhs, "RelationFailure", "reflection at u2=" + u2.fraction())) return r;
    }
    r.details["specializations"] = std::to_string(second.size());
    return r;
}

CheckReport check_re(const HeckeRep& rep, End end, std::span<const Rational> second) {
    return check_re_for(rep, end == End::Left ? k_minus_local(rep) : k_bar_plus_local(rep), end, second);
}

CheckReport check_unitarity(const HeckeRep& rep) {
    CheckReport r;
    r.name = "unitarity";
    r.params = rep.echo();
    ScopedTimer timer(r);
    // X(u) X(1/u) with the monomial denominator of X(1/u) cleared.
    auto check = [&](const std::string& what, const PolyMatrix& x, int degree) {
        const PolyMatrix inv_arg = x.substituted(Rational(1), -1).shifted(degree);
        const auto ratio = mat_proportional(x * inv_arg, PolyMatrix::identity(x.layout()));
        r.details["ratio_" + what] = join_ratio(ratio);
        if (!ratio) r.fail(witness("RelationFailure", what + " times its inverse-argument image is not scalar"));
    };
    check("r_hat", r_hat_local(rep), 1);
    check("k_minus", k_minus_local(rep), 2);
    check("k_bar_plus", k_bar_plus_local(rep), 2);
    return r;
}

std::optional<PolyRatio> crossing_ratio(const HeckeRep& rep, const Rational& chi) {
    const int N = rep.local_dim();
    const Layout two{N, N};
    const PolyMatrix p = permutation(two, 0, 1);
    const PolyMatrix rh = embed(r_hat_local(rep), {0, 1}, two);
    const PolyMatrix r_u = p * rh;
    // u * R(chi / u) keeps the entries polynomial.
    const PolyMatrix r_crossed = p * rh.substituted(chi, -1).shifted(1);
    const PolyMatrix m1 = embed(rep.M_local(), {0}, two);
    const PolyMatrix m1_inv = embed(rep.M_inv_local(), {0}, two);
    const PolyMatrix lhs = r_u.partial_transpose(0) * m1 * r_crossed.partial_transpose(1) * m1_inv;
    const auto ratio = mat_proportional(lhs, PolyMatrix::identity(two));
    if (!ratio || ratio->num.is_zero()) return std::nullopt;
    return ratio;
}

Crossing calibrate_crossing(const HeckeRep& rep) {
    const int N = rep.local_dim();
    const Rational& q = rep.params().q;
    std::vector<Crossing> hits;
    for (int k = -2 * N; k <= 2 * N; ++k) {
        for (int sign : {1, -1}) {
            const Rational chi = q.pow(k) * Rational(sign);
            if (auto ratio = crossing_ratio(rep, chi)) {
                Crossing c;
                c.chi = chi;
                c.sign = sign;
                c.exponent = k;
                c.ratio = *ratio;
                hits.push_back(std::move(c));
            }
        }
    }
    if (hits.empty()) throw CalibrationFailure("no crossing unit +-q^k with |k| <= 2N satisfies the crossing identity");
    if (hits.size() > 1) throw CalibrationFailure("crossing unit is not unique among +-q^k, |k| <= 2N");
    Crossing c = std::move(hits.front());
    auto half = c.chi.sqrt();
    if (!half) throw CalibrationFailure("crossing unit " + c.chi.fraction() + " has no rational square root");
    c.chi_half = *half;
    return c;
}

BaxterKit BaxterKit::calibrate(HeckeRep rep) {
    Crossing c = calibrate_crossing(rep);
    return BaxterKit{std::move(rep), std::move(c)};
}

}  // namespace hecke
