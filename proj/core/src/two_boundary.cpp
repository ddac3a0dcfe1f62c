#include <map>
#include <tuple>

#include "hecke/errors.hpp"
#include "hecke/linear_solve.hpp"
#include "hecke/transfer.hpp"

namespace hecke {

namespace {

const std::vector<Rational>& re_points() {
    static const std::vector<Rational> pts{Rational(2, 3), Rational(5, 7), Rational(-3, 11)};
    return pts;
}

LaurentPoly u_squared_minus(const Rational& c) {
    return LaurentPoly::monomial(Rational(1), 2) - LaurentPoly(c);
}

}  // namespace

std::optional<DualSolution> solve_dual(const HeckeRep& rep, DualSide side, int* nullity_out) {
    const int N = rep.local_dim();
    const Layout two{N, N};
    const PolyMatrix g10 = embed(rep.g_local(), {1, 0}, two);
    const PolyMatrix g10_inv = embed(rep.g_inv_local(), {1, 0}, two);
    const LaurentPoly u2 = LaurentPoly::monomial(Rational(1), 2);
    const PolyMatrix m0 = embed(rep.M_local(), {0}, two);
    const PolyMatrix x = side == DualSide::Minus ? g10 - g10_inv * u2 : g10 * u2 - g10_inv;
    const PolyMatrix target = side == DualSide::Minus ? k_bar_plus_local(rep) : k_minus_local(rep);

    constexpr int kDeg = 2;
    const int n_a = N * N * (kDeg + 1);
    const int ncols = n_a + kDeg + 1;
    std::map<std::tuple<int, int, int>, SparseRow> eqs;
    auto add = [&](const PolyMatrix& m, int col, int shift, const Rational& sign) {
        for (int r = 0; r < m.dim(); ++r) {
            for (const auto& e : m.row(r)) {
                e.value.for_each_term([&](int d, const Rational& c) {
                    Rational& slot = eqs[{r, e.col, d + shift}][col];
                    slot += sign * c;
                });
            }
        }
    };
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            const PolyMatrix unit = embed(PolyMatrix::unit({N}, a, b), {0}, two);
            const PolyMatrix y = partial_trace_first(side == DualSide::Minus ? m0 * unit * x : unit * m0 * x);
            for (int k = 0; k <= kDeg; ++k) add(y, (a * N + b) * (kDeg + 1) + k, k, Rational(1));
        }
    }
    for (int k = 0; k <= kDeg; ++k) add(target, n_a + k, k, Rational(-1));

    std::vector<SparseRow> rows;
    rows.reserve(eqs.size());
    for (auto& [key, row] : eqs) rows.push_back(std::move(row));
    const auto basis = nullspace(rows, ncols);
    if (nullity_out) *nullity_out = static_cast<int>(basis.size());
    if (basis.size() != 1) return std::nullopt;
    const auto& sol = basis.front();

    std::vector<Rational> fc(sol.begin() + n_a, sol.end());
    LaurentPoly f = LaurentPoly::from_coeffs(0, fc);
    if (f.is_zero()) return std::nullopt;
    const Rational scale = f.leading_coeff().inverse();
    DualSolution out;
    out.f = f * scale;
    out.a = PolyMatrix({N});
    out.nullity = 1;
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            std::vector<Rational> coeffs;
            for (int k = 0; k <= kDeg; ++k) coeffs.push_back(sol[static_cast<std::size_t>((a * N + b) * (kDeg + 1) + k)] * scale);
            out.a.set(a, b, LaurentPoly::from_coeffs(0, std::move(coeffs)));
        }
    }
    return out;
}

DualKit DualKit::prepare(const BaxterKit& kit) {
    auto minus = solve_dual(kit.rep, DualSide::Minus);
    auto plus = solve_dual(kit.rep, DualSide::Plus);
    if (!minus || !plus) throw ConditionFailure("dual boundary matrix is not determined by the side conditions");
    return DualKit{kit.rep, kit.crossing, std::move(*minus), std::move(*plus)};
}

CheckReport check_condition2(const HeckeRep& rep, const Rational& chi) {
    CheckReport r;
    r.name = "condition2";
    r.params = rep.echo();
    r.params["chi"] = chi.fraction();
    ScopedTimer timer(r);
    const auto half = chi.sqrt();
    if (!half) {
        r.fail(witness("ConditionFailure", "crossing unit " + chi.fraction() + " has no rational square root"));
        return r;
    }
    int nullity = 0;
    const auto minus = solve_dual(rep, DualSide::Minus, &nullity);
    r.details["nullity_minus"] = std::to_string(nullity);
    const auto plus = solve_dual(rep, DualSide::Plus, &nullity);
    r.details["nullity_plus"] = std::to_string(nullity);
    if (!minus || !plus) {
        r.fail(witness("ConditionFailure", "side condition does not fix a unique boundary matrix"));
        return r;
    }
    r.details["f_minus"] = minus->f.to_string();
    r.details["f_plus"] = plus->f.to_string();
    if (minus->f != u_squared_minus(chi)) {
        r.fail(witness("ConditionFailure", "K+ condition factor does not vanish at u^2 = chi"));
    }
    if (plus->f != u_squared_minus(chi.inverse())) {
        r.fail(witness("ConditionFailure", "K- condition factor does not vanish at u^2 = 1/chi"));
    }
    // K(w) = A^t(chi'/w) w^2 and A(u/chi') must both be left reflection solutions.
    const PolyMatrix k_from_plus = minus->a.substituted(*half, -1).shifted(2).transposed();
    const PolyMatrix k_from_minus = plus->a.substituted(half->inverse(), 1);
    for (const auto& [label, k] : {std::pair{"re_k_plus", k_from_plus}, std::pair{"re_k_minus", k_from_minus}}) {
        const CheckReport re = check_re_for(rep, k, End::Left, re_points());
        r.details[label] = to_string(re.status);
        if (re.failed()) {
            FailureWitness w = *re.first_failure;
            w.kind = "ConditionFailure";
            w.detail = std::string(label) + ": " + w.detail;
            r.fail(std::move(w));
        }
    }
    return r;
}

std::string to_string(TwoBoundaryKind k) { return k == TwoBoundaryKind::Minus ? "t_minus" : "t_plus"; }
std::string to_string(EvalPoint p) { return p == EvalPoint::Main ? "main" : "opposite"; }

namespace {

PolyMatrix r_hat_at(const HeckeRep& rep, int i, int m) { return at_power(r_hat(rep, i), Rational(1), m); }

PolyMatrix boundary_site(const HeckeRep& rep, const PolyMatrix& local, int site, int m) {
    return embed(at_power(local, Rational(1), m), {site}, rep.site_layout());
}

PolyMatrix factorized_minus(const DualKit& kit) {
    const HeckeRep& rep = kit.rep;
    const int n = rep.sites();
    PolyMatrix t = boundary_site(rep, k_bar_plus_local(rep), n - 1, n);
    for (int i = n - 1; i >= 1; --i) t = t * r_hat_at(rep, i, n + i);
    t = t * boundary_site(rep, k_minus_local(rep), 0, n);
    for (int i = 1; i <= n - 1; ++i) t = t * r_hat_at(rep, i, n - i);
    return t;
}

PolyMatrix factorized_plus(const DualKit& kit) {
    const HeckeRep& rep = kit.rep;
    const int n = rep.sites();
    PolyMatrix t = rep.identity();
    for (int i = 1; i <= n - 1; ++i) {
        t = t * (rep.gen_inv(i) - rep.gen(i) * LaurentPoly::monomial(Rational(1), i + 2));
    }
    t = t * boundary_site(rep, k_bar_plus_local(rep), n - 1, 1);
    for (int i = n - 1; i >= 1; --i) t = t * r_hat_at(rep, i, i);
    t = t * boundary_site(rep, k_minus_local(rep), 0, 1);
    return t;
}

}  // namespace

TwoBoundaryTransfer build_t_two_boundary(const DualKit& kit, TwoBoundaryKind kind, EvalPoint point) {
    const HeckeRep& rep = kit.rep;
    const int n = rep.sites();
    TwoBoundaryTransfer out;
    AuxProduct p(rep);
    p.twist();
    if (kind == TwoBoundaryKind::Minus) {
        const int s = point == EvalPoint::Main ? n : -n;
        const Spectral u{Rational(1), s};
        p.aux(at(kit.minus.a, u));
        for (int k = n; k >= 1; --k) p.r_left(k, u.times(k));
        p.aux(at(k_minus_local(rep), u));
        for (int k = 1; k <= n; ++k) p.r_right(k, u.times(-k));
        out.direct = p.trace();
        if (point == EvalPoint::Main) out.factorized = factorized_minus(kit);
    } else {
        const int lt = point == EvalPoint::Main ? -1 : 1;
        const Spectral w{Rational(1), lt};
        p.r_right(1, w.times(1));
        for (int k = 2; k <= n; ++k) p.r_right(k, w.times(-k));
        p.aux(at(k_bar_plus_local(rep), Spectral{Rational(1), -lt}));
        for (int k = n; k >= 2; --k) p.r_left(k, w.times(k));
        p.r_right(1, w.times(-1));
        p.aux(at(kit.plus.a, Spectral{Rational(1), -lt}));
        out.direct = p.trace();
        if (point == EvalPoint::Main) out.factorized = factorized_plus(kit);
    }
    if (out.factorized) {
        const auto ratio = mat_proportional(out.direct, *out.factorized);
        if (!ratio || ratio->num.is_zero()) {
            throw InternalMismatch(to_string(kind) + ": direct and factorized constructions differ");
        }
        out.ratio = *ratio;
    }
    return out;
}

std::vector<CheckReport> verify_murphy_C(const DualKit& kit) {
    const HeckeRep& rep = kit.rep;
    const int n = rep.sites();
    std::vector<CheckReport> out;
    for (const auto kind : {TwoBoundaryKind::Minus, TwoBoundaryKind::Plus}) {
        for (const auto point : {EvalPoint::Main, EvalPoint::Opposite}) {
            CheckReport r;
            r.name = "prop2_" + to_string(kind) + "_" + to_string(point);
            r.params = rep.echo();
            r.params["sites"] = std::to_string(n);
            ScopedTimer timer(r);
            TwoBoundaryTransfer t;
            try {
                t = build_t_two_boundary(kit, kind, point);
            } catch (const InternalMismatch& e) {
                r.fail(witness("InternalMismatch", e.what()));
                out.push_back(std::move(r));
                continue;
            }
            if (t.ratio) r.ratio = t.ratio->to_string('v');
            const ExpansionEdge edge = extract_edges(t.direct);
            r.degrees = std::make_pair(edge.low_deg, edge.high_deg);
            const int idx = kind == TwoBoundaryKind::Minus ? n - 1 : 0;
            const bool inverse = point == EvalPoint::Opposite;
            const PolyMatrix j = inverse ? murphy_inverse(rep, Family::C, idx) : murphy(rep, Family::C, idx);
            expect_proportional(r, edge.low_coeff, j,
                                "low_edge_J" + std::to_string(idx) + (inverse ? "_inverse" : ""));
            out.push_back(std::move(r));
        }
    }
    return out;
}

CheckReport check_degeneration(const HeckeRep& rep) {
    CheckReport r;
    r.name = "prop2_degeneration";
    r.params = rep.echo();
    r.params["sites"] = std::to_string(rep.sites());
    ScopedTimer timer(r);
    const HeckeRep d = rep.with_right_boundary(PolyMatrix::identity({rep.local_dim()}, rep.params().QN));
    int nullity = 0;
    const auto minus = solve_dual(d, DualSide::Minus, &nullity);
    r.details["nullity_minus"] = std::to_string(nullity);
    if (!minus) {
        r.fail(witness("ConditionFailure", "degenerate K+ side condition does not fix a unique boundary matrix"));
        return r;
    }
    // Only the t- construction is needed; the plus dual is not used.
    const DualKit kit{d, Crossing{}, *minus, *minus};
    const TwoBoundaryTransfer t = build_t_two_boundary(kit, TwoBoundaryKind::Minus, EvalPoint::Main);
    const ExpansionEdge edge = extract_edges(t.direct);
    r.degrees = std::make_pair(edge.low_deg, edge.high_deg);
    expect_proportional(r, edge.low_coeff, murphy(d, Family::B, d.sites() - 1), "low_edge_JB");
    return r;
}

PolyMatrix generic_transfer(const DualKit& kit, int n, bool minus_pair, const Spectral& u) {
    const HeckeRep& rep = kit.rep;
    const int L = rep.sites();
    if (n < 0 || n > L) throw IndexOutOfRange("generic transfer dressing index out of range");
    const Rational& half = kit.crossing.chi_half;
    const Spectral ut = u.crossed(half);
    const PolyMatrix k_plus =
        minus_pair ? at(kit.minus.a, u) : at(k_bar_plus_local(rep), u.scaled(half.inverse()));
    const PolyMatrix k_minus = minus_pair ? at(k_minus_local(rep), u) : at(kit.plus.a, u.scaled(half.inverse()));
    AuxProduct p(rep);
    p.twist();
    for (int k = n + 1; k <= L; ++k) p.r_left(k, ut.times(-k));
    p.aux(k_plus);
    for (int k = L; k >= n + 1; --k) p.r_right(k, ut.times(k));
    for (int k = n; k >= 1; --k) p.r_left(k, u.times(k));
    p.aux(k_minus);
    for (int k = 1; k <= n; ++k) p.r_right(k, u.times(-k));
    return p.trace();
}

CheckReport explore_generic(const DualKit& kit, int n) {
    const HeckeRep& rep = kit.rep;
    const int L = rep.sites();
    CheckReport r;
    r.name = "explore_generic_n" + std::to_string(n);
    r.params = rep.echo();
    r.params["sites"] = std::to_string(L);
    r.params["n"] = std::to_string(n);
    r.status = Status::Info;
    ScopedTimer timer(r);

    std::vector<std::pair<std::string, PolyMatrix>> targets;
    for (int k = 0; k < L; ++k) {
        targets.emplace_back("J" + std::to_string(k), murphy(rep, Family::C, k));
        targets.emplace_back("J" + std::to_string(k) + "^-1", murphy_inverse(rep, Family::C, k));
    }
    auto matches = [&](const PolyMatrix& c) {
        std::string hit;
        for (const auto& [name, j] : targets) {
            if (mat_proportional(c, j)) hit += (hit.empty() ? "" : ",") + name;
        }
        return hit.empty() ? std::string("-") : hit;
    };
    const Rational& half = kit.crossing.chi_half;
    const std::vector<std::pair<std::string, Spectral>> points{
        {"lambda=+" + std::to_string(n) + "d", Spectral{Rational(1), n}},
        {"lambda=-" + std::to_string(n) + "d", Spectral{Rational(1), -n}},
        {"dual=-" + std::to_string(n + 1) + "d", Spectral{half, n + 1}},
        {"dual=+" + std::to_string(n + 1) + "d", Spectral{half, -(n + 1)}},
    };
    for (const bool minus_pair : {true, false}) {
        for (const auto& [label, u] : points) {
            const std::string key = std::string(minus_pair ? "minus" : "plus") + " " + label;
            const PolyMatrix t = generic_transfer(kit, n, minus_pair, u);
            if (t.is_zero()) {
                r.details[key] = "zero";
                continue;
            }
            const ExpansionEdge e = extract_edges(t);
            r.details[key] = "[" + std::to_string(e.low_deg) + "," + std::to_string(e.high_deg) +
                             "] low:" + matches(e.low_coeff) + " high:" + matches(e.high_coeff);
        }
    }
    return r;
}

}  // namespace hecke
