#include <map>

#include "hecke/errors.hpp"
#include "hecke/linear_solve.hpp"
#include "hecke/transfer.hpp"

namespace hecke {

PolyMatrix commuting_transfer(const HeckeRep& rep, const Rational& u0, const std::optional<PolyMatrix>& k_local) {
    const int n = rep.sites();
    const Spectral u{Rational(1), 1};
    AuxProduct p(rep);
    p.twist().r_left(n, u.scaled(u0));
    for (int k = n - 1; k >= 1; --k) p.r_left(k, u);
    p.aux(k_local ? *k_local : k_minus_local(rep));
    for (int k = 1; k <= n - 1; ++k) p.r_right(k, u);
    p.r_right(n, u.scaled(u0.inverse()));
    return p.trace();
}

Hamiltonian hamiltonian(const HeckeRep& rep, std::span<const Rational> points) {
    Hamiltonian out;
    CheckReport& r = out.report;
    r.name = "hamiltonian";
    r.params = rep.echo();
    r.params["sites"] = std::to_string(rep.sites());
    ScopedTimer timer(r);
    const int n = rep.sites();

    const PolyMatrix t = one_boundary_product(rep);
    out.h = PolyMatrix(rep.site_layout());
    for (int row = 0; row < t.dim(); ++row) {
        for (const auto& e : t.row(row)) out.h.set(row, e.col, LaurentPoly(derivative_at_one(e.value)));
    }

    std::vector<std::pair<std::string, PolyMatrix>> basis{{"I", rep.identity()}, {"g0", rep.g0()}};
    for (int i = 1; i <= n - 1; ++i) basis.emplace_back("g" + std::to_string(i), rep.gen(i));
    std::map<std::pair<int, int>, SparseRow> eqs;
    std::map<std::pair<int, int>, Rational> rhs_map;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const PolyMatrix& b = basis[j].second;
        for (int row = 0; row < b.dim(); ++row) {
            for (const auto& e : b.row(row)) eqs[{row, e.col}][static_cast<int>(j)] = e.value.coeff(0);
        }
    }
    for (int row = 0; row < out.h.dim(); ++row) {
        for (const auto& e : out.h.row(row)) {
            eqs[{row, e.col}];
            rhs_map[{row, e.col}] = e.value.coeff(0);
        }
    }
    std::vector<SparseRow> rows;
    std::vector<Rational> rhs;
    for (auto& [key, row] : eqs) {
        rows.push_back(row);
        const auto it = rhs_map.find(key);
        rhs.push_back(it == rhs_map.end() ? Rational(0) : it->second);
    }
    const auto sol = solve_linear(rows, rhs, static_cast<int>(basis.size()));
    if (!sol) {
        r.fail(witness("SpanFailure", "derivative of the transfer matrix leaves the span of I, g_0, g_i"));
        return out;
    }
    out.coefficients = *sol;
    PolyMatrix rebuilt(rep.site_layout());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        r.details["coeff_" + basis[j].first] = (*sol)[j].fraction();
        rebuilt += basis[j].second * LaurentPoly((*sol)[j]);
    }
    if (!r.expect_equal(rebuilt, out.h, "SpanFailure", "span reconstruction")) return out;

    const PolyMatrix family = commuting_transfer(rep, Rational(1));
    for (const Rational& x : points) {
        const PolyMatrix tx = family.evaluated(x);
        if (!r.expect_equal(out.h * tx, tx * out.h, "RelationFailure", "[H, t(" + x.fraction() + ")]")) break;
    }
    r.details["commutation_points"] = std::to_string(points.size());
    return out;
}

CheckReport check_commuting_family(const HeckeRep& rep, const Rational& u0,
                                   std::span<const std::pair<Rational, Rational>> pairs,
                                   const std::optional<PolyMatrix>& k_local) {
    CheckReport r;
    r.name = "commuting_family";
    r.params = rep.echo();
    r.params["sites"] = std::to_string(rep.sites());
    r.params["u0"] = u0.fraction();
    ScopedTimer timer(r);
    const PolyMatrix t = commuting_transfer(rep, u0, k_local);
    for (const auto& [a, b] : pairs) {
        const PolyMatrix ta = t.evaluated(a);
        const PolyMatrix tb = t.evaluated(b);
        if (!r.expect_equal(ta * tb, tb * ta, "RelationFailure", "[t(" + a.fraction() + "), t(" + b.fraction() + ")]")) {
            break;
        }
    }
    r.details["pairs"] = std::to_string(pairs.size());
    return r;
}

}  // namespace hecke
