#include "hecke/errors.hpp"
#include "hecke/hecke_rep.hpp"

namespace hecke {

namespace {

constexpr const char* kRelationFailure = "RelationFailure";

std::string g_name(int i) { return "g_" + std::to_string(i); }

PolyMatrix quadratic_residue(const PolyMatrix& g, const Rational& alpha, const Rational& beta) {
    const PolyMatrix id = PolyMatrix::identity(g.layout());
    return (g - id * LaurentPoly(alpha)) * (g + id * LaurentPoly(beta.inverse()));
}

// Shared by check_relations and aux_string_image: braid relations of the bulk
// generators gs[0] = g_1, gs[1] = g_2, ... and of a left boundary element.
bool check_bulk_braids(CheckReport& r, const std::vector<const PolyMatrix*>& gs) {
    const int m = static_cast<int>(gs.size());
    for (int i = 0; i + 1 < m; ++i) {
        const auto& a = *gs[static_cast<std::size_t>(i)];
        const auto& b = *gs[static_cast<std::size_t>(i) + 1];
        if (!r.expect_equal(a * b * a, b * a * b, kRelationFailure, "braid " + g_name(i + 1) + " " + g_name(i + 2))) {
            return false;
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 2; j < m; ++j) {
            const auto& a = *gs[static_cast<std::size_t>(i)];
            const auto& b = *gs[static_cast<std::size_t>(j)];
            if (!r.expect_equal(a * b, b * a, kRelationFailure, "far_commute " + g_name(i + 1) + " " + g_name(j + 1))) {
                return false;
            }
        }
    }
    return true;
}

bool check_left_boundary(CheckReport& r, const PolyMatrix& g0, const std::vector<const PolyMatrix*>& gs) {
    if (gs.empty()) return true;
    const auto& g1 = *gs.front();
    if (!r.expect_equal(g1 * g0 * g1 * g0, g0 * g1 * g0 * g1, kRelationFailure, "boundary_braid_left g_0 g_1")) {
        return false;
    }
    for (std::size_t i = 1; i < gs.size(); ++i) {
        if (!r.expect_equal(g0 * *gs[i], *gs[i] * g0, kRelationFailure,
                            "boundary_far_commute_left g_0 " + g_name(static_cast<int>(i) + 1))) {
            return false;
        }
    }
    return true;
}

}  // namespace

CheckReport check_relations(const HeckeRep& rep, Family family) {
    CheckReport r;
    r.name = "relations_" + to_string(family);
    r.params = rep.echo();
    ScopedTimer timer(r);
    const int n = rep.sites();
    const PolyMatrix zero(rep.site_layout());
    const auto& p = rep.params();

    std::vector<const PolyMatrix*> gs;
    for (int i = 1; i < n; ++i) gs.push_back(&rep.gen(i));

    for (int i = 1; i < n; ++i) {
        if (!r.expect_equal(quadratic_residue(rep.gen(i), p.q, p.q), zero, kRelationFailure, "quadratic " + g_name(i))) {
            return r;
        }
    }
    if (!check_bulk_braids(r, gs)) return r;
    if (family == Family::A) return r;

    if (!r.expect_equal(quadratic_residue(rep.g0(), p.Q0, p.Q0), zero, kRelationFailure, "boundary_quadratic_left")) {
        return r;
    }
    if (!check_left_boundary(r, rep.g0(), gs)) return r;
    if (family == Family::B) return r;

    const PolyMatrix& gN = rep.gN();
    if (!r.expect_equal(quadratic_residue(gN, p.QN, p.QN), zero, kRelationFailure, "boundary_quadratic_right")) {
        return r;
    }
    if (n >= 2) {
        const PolyMatrix& gl = rep.gen(n - 1);
        if (!r.expect_equal(gl * gN * gl * gN, gN * gl * gN * gl, kRelationFailure,
                            "boundary_braid_right " + g_name(n - 1) + " g_N")) {
            return r;
        }
        if (!r.expect_equal(gN * rep.g0(), rep.g0() * gN, kRelationFailure, "boundary_far_commute_right g_N g_0")) {
            return r;
        }
        for (int i = 1; i <= n - 2; ++i) {
            if (!r.expect_equal(gN * rep.gen(i), rep.gen(i) * gN, kRelationFailure,
                                "boundary_far_commute_right g_N " + g_name(i))) {
                return r;
            }
        }
    }
    return r;
}

std::optional<TLConstants> check_tl_quotient(const HeckeRep& rep, CheckReport& r) {
    r.name = "tl_quotient";
    r.params = rep.echo();
    ScopedTimer timer(r);
    const int n = rep.sites();
    if (n < 2) throw DimensionMismatch("Temperley-Lieb check needs at least two sites");
    const auto& p = rep.params();
    const PolyMatrix id = rep.identity();
    std::vector<PolyMatrix> e;
    for (int i = 1; i < n; ++i) e.push_back(rep.gen(i) - id * LaurentPoly(p.q));
    const PolyMatrix e0 = rep.g0() - id * LaurentPoly(p.Q0);
    const PolyMatrix eN = rep.gN() - id * LaurentPoly(p.QN);

    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j : {i - 1, i + 1}) {
            if (j >= e.size()) continue;
            const std::string rel = "tl e_" + std::to_string(i + 1) + " e_" + std::to_string(j + 1) + " e_" +
                                    std::to_string(i + 1);
            if (!r.expect_equal(e[i] * e[j] * e[i], e[i], kRelationFailure, rel)) return std::nullopt;
        }
    }
    auto boundary_constant = [&](const PolyMatrix& eb, const PolyMatrix& ei,
                                 const std::string& rel) -> std::optional<Rational> {
        const auto ratio = mat_proportional(ei * eb * ei, ei);
        if (!ratio || !ratio->is_constant()) {
            r.fail(witness(kRelationFailure, rel + " not proportional to the bulk generator"));
            return std::nullopt;
        }
        return ratio->constant();
    };
    const auto km = boundary_constant(e0, e.front(), "tl e_1 e_0 e_1");
    if (!km) return std::nullopt;
    const auto kp = boundary_constant(eN, e.back(), "tl e_{N-1} e_N e_{N-1}");
    if (!kp) return std::nullopt;
    r.details["kappa_minus"] = km->fraction();
    r.details["kappa_plus"] = kp->fraction();
    return TLConstants{*km, *kp};
}

AuxStringImage aux_string_image(const HeckeRep& rep, int l) {
    const int n = rep.sites();
    if (l < 0 || l > n - 1) {
        throw IndexOutOfRange("auxiliary string shift " + std::to_string(l) + " outside 0.." + std::to_string(n - 1));
    }
    AuxStringImage out;
    PolyMatrix s0 = rep.g0();
    for (int i = 1; i <= l; ++i) s0 = rep.gen(i) * s0 * rep.gen(i);
    out.g0 = std::move(s0);
    for (int i = 1; i + l <= n - 1; ++i) out.gs.push_back(rep.gen(i + l));

    CheckReport& r = out.report;
    r.name = "aux_string_" + std::to_string(l);
    r.params = rep.echo();
    ScopedTimer timer(r);
    std::vector<const PolyMatrix*> gs;
    for (const auto& g : out.gs) gs.push_back(&g);
    if (check_bulk_braids(r, gs)) check_left_boundary(r, out.g0, gs);
    const bool quad = quadratic_residue(out.g0, rep.params().Q0, rep.params().Q0).is_zero();
    r.details["image_g0_quadratic"] = quad ? "holds" : "fails";
    return out;
}

}  // namespace hecke
