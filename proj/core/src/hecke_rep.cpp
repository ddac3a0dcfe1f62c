#include "hecke/hecke_rep.hpp"

#include <array>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

PolyMatrix unit_local(int N, int a, int b) { return PolyMatrix::unit(Layout{N}, a, b); }

PolyMatrix scalar_local(int N, const Rational& s) { return PolyMatrix::identity(Layout{N}, s); }

// (g - alpha)(g + 1/beta) == 0
bool quadratic_holds(const PolyMatrix& g, const Rational& alpha, const Rational& beta) {
    const PolyMatrix id = PolyMatrix::identity(g.layout());
    return ((g - id * LaurentPoly(alpha)) * (g + id * LaurentPoly(beta.inverse()))).is_zero();
}

bool braid_holds(const PolyMatrix& a, const PolyMatrix& b) { return a * b * a == b * a * b; }

bool boundary_braid_holds(const PolyMatrix& a, const PolyMatrix& b) { return a * b * a * b == b * a * b * a; }

bool convention_valid(int N, const PolyMatrix& g, const HeckeParams& p) {
    if (!quadratic_holds(g, p.q, p.q)) return false;
    const Layout three{N, N, N};
    if (!braid_holds(embed(g, {0, 1}, three), embed(g, {1, 2}, three))) return false;
    const Layout two{N, N};
    const PolyMatrix g12 = embed(g, {0, 1}, two);
    if (!boundary_braid_holds(g12, embed(left_boundary_generator(N, p), {0}, two))) return false;
    return boundary_braid_holds(g12, embed(right_boundary_generator(N, p), {1}, two));
}

std::optional<PolyMatrix> try_inverse(const PolyMatrix& g, const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    try {
        return generator_inverse(g, a, b);
    } catch (const NotInvertible&) {
        return std::nullopt;
    }
}

const PolyMatrix& require(const std::optional<PolyMatrix>& m, const char* what) {
    if (!m) throw NotInvertible(std::string(what) + " does not satisfy its quadratic relation");
    return *m;
}

}  // namespace

HeckeParams HeckeParams::make(Rational q, Rational Q0, Rational QN, Rational x0p, Rational xNp, Rational c_minus,
                              Rational c_plus) {
    HeckeParams p;
    p.q = std::move(q);
    p.Q0 = std::move(Q0);
    p.QN = std::move(QN);
    p.x0m = x0p.inverse();
    p.x0p = std::move(x0p);
    p.xNm = xNp.inverse();
    p.xNp = std::move(xNp);
    p.c_minus = std::move(c_minus);
    p.c_plus = std::move(c_plus);
    return p;
}

std::map<std::string, std::string> HeckeParams::echo() const {
    return {{"q", q.fraction()},     {"Q0", Q0.fraction()},   {"QN", QN.fraction()},
            {"x0p", x0p.fraction()}, {"x0m", x0m.fraction()}, {"xNp", xNp.fraction()},
            {"xNm", xNm.fraction()}, {"c_minus", c_minus.fraction()}, {"c_plus", c_plus.fraction()}};
}

std::string to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::TL2B: return "TL2B";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "TL2B") return Family::TL2B;
    throw ParseError("unknown algebra family '" + std::string(s) + "'");
}

std::string to_string(BulkConvention c) {
    switch (c) {
        case BulkConvention::Printed: return "printed";
        case BulkConvention::IndexCorrected: return "index_corrected";
        case BulkConvention::Mirrored: return "mirrored";
    }
    return "?";
}

PolyMatrix bulk_generator(int N, const Rational& q, BulkConvention convention) {
    const Layout two{N, N};
    PolyMatrix g = PolyMatrix::identity(two, q);
    const Rational qi = q.inverse();
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            if (a == b) continue;
            const PolyMatrix second = convention == BulkConvention::Printed ? unit_local(N, a, b) : unit_local(N, b, a);
            g += kron(unit_local(N, a, b), second);
            const bool positive = convention == BulkConvention::Mirrored ? (b > a) : (a > b);
            g -= kron(unit_local(N, a, a), unit_local(N, b, b)) * LaurentPoly(positive ? q : qi);
        }
    }
    return g;
}

PolyMatrix left_boundary_generator(int N, const HeckeParams& p) {
    PolyMatrix g = scalar_local(N, p.Q0);
    g -= unit_local(N, 0, 0) * LaurentPoly(p.Q0.inverse());
    g -= unit_local(N, N - 1, N - 1) * LaurentPoly(p.Q0);
    g += unit_local(N, 0, N - 1) * LaurentPoly(p.x0p);
    g += unit_local(N, N - 1, 0) * LaurentPoly(p.x0m);
    return g;
}

PolyMatrix right_boundary_generator(int N, const HeckeParams& p) {
    PolyMatrix g = scalar_local(N, p.QN);
    g -= unit_local(N, 0, 0) * LaurentPoly(p.QN);
    g -= unit_local(N, N - 1, N - 1) * LaurentPoly(p.QN.inverse());
    g += unit_local(N, 0, N - 1) * LaurentPoly(p.xNp);
    g += unit_local(N, N - 1, 0) * LaurentPoly(p.xNm);
    return g;
}

PolyMatrix twist_matrix(int N, const Rational& q) {
    std::vector<Rational> d;
    for (int j = 1; j <= N; ++j) d.push_back(q.pow(N - 2 * j + 1));
    return PolyMatrix::diagonal(d);
}

PolyMatrix generator_inverse(const PolyMatrix& g, const Rational& alpha, const Rational& beta) {
    if (alpha.is_zero() || beta.is_zero()) throw NotInvertible("eigenvalue data must be nonzero");
    const PolyMatrix id = PolyMatrix::identity(g.layout());
    PolyMatrix x = (g - id * LaurentPoly(alpha - beta.inverse())) * LaurentPoly(beta / alpha);
    if (!(g * x == id)) throw NotInvertible("generator does not satisfy the quadratic relation for the given eigenvalues");
    return x;
}

HeckeRep::HeckeRep(int N, int n, HeckeParams params, LocalMatrices local, std::optional<BulkConvention> convention)
    : N_(N), n_(n), params_(std::move(params)), local_(std::move(local)), convention_(convention) {
    if (N < 2) throw DimensionMismatch("local dimension must be at least 2");
    if (n < 1) throw DimensionMismatch("chain must have at least one site");
    g_inv_local_ = try_inverse(local_.g, params_.q, params_.q);
    g0_inv_local_ = try_inverse(local_.g0, params_.Q0, params_.Q0);
    gN_inv_local_ = try_inverse(local_.gN, params_.QN, params_.QN);

    const Layout sites = site_layout();
    for (int i = 1; i < n_; ++i) {
        gens_.push_back(embed(local_.g, {i - 1, i}, sites));
        gen_invs_.push_back(g_inv_local_ ? std::optional(embed(*g_inv_local_, {i - 1, i}, sites)) : std::nullopt);
    }
    g0_ = embed(local_.g0, {0}, sites);
    gN_ = embed(local_.gN, {n_ - 1}, sites);
    if (g0_inv_local_) g0_inv_ = embed(*g0_inv_local_, {0}, sites);
    if (gN_inv_local_) gN_inv_ = embed(*gN_inv_local_, {n_ - 1}, sites);
}

HeckeRep HeckeRep::build_glN(int N, int n, const HeckeParams& p) {
    if (N < 2 || n < 1) throw DimensionMismatch("need N >= 2 and n >= 1");
    for (const auto* v : {&p.q, &p.Q0, &p.QN}) {
        if (v->is_zero()) throw ConstraintViolation("q, Q0 and QN must be nonzero");
    }
    if (p.x0p * p.x0m != Rational(1)) {
        throw ConstraintViolation("left boundary needs x0p*x0m = 1, got " + (p.x0p * p.x0m).to_string());
    }
    if (p.xNp * p.xNm != Rational(1)) {
        throw ConstraintViolation("right boundary needs xNp*xNm = 1, got " + (p.xNp * p.xNm).to_string());
    }
    LocalMatrices local;
    local.g0 = left_boundary_generator(N, p);
    local.gN = right_boundary_generator(N, p);
    local.M = twist_matrix(N, p.q);
    if (!quadratic_holds(local.g0, p.Q0, p.Q0)) throw ConstraintViolation("left boundary quadratic relation fails");
    if (!quadratic_holds(local.gN, p.QN, p.QN)) throw ConstraintViolation("right boundary quadratic relation fails");

    constexpr std::array kOrder{BulkConvention::Printed, BulkConvention::IndexCorrected, BulkConvention::Mirrored};
    for (BulkConvention c : kOrder) {
        PolyMatrix g = bulk_generator(N, p.q, c);
        if (!convention_valid(N, g, p)) continue;
        local.g = std::move(g);
        return HeckeRep(N, n, p, std::move(local), c);
    }
    throw ConstraintViolation("no bulk generator convention satisfies the braid and quadratic relations");
}

HeckeRep HeckeRep::from_local(int N, int n, const HeckeParams& params, LocalMatrices local) {
    return HeckeRep(N, n, params, std::move(local), std::nullopt);
}

HeckeRep HeckeRep::with_sites(int n) const { return HeckeRep(N_, n, params_, local_, convention_); }

HeckeRep HeckeRep::with_bulk(PolyMatrix g) const {
    LocalMatrices l = local_;
    l.g = std::move(g);
    return HeckeRep(N_, n_, params_, std::move(l), std::nullopt);
}

HeckeRep HeckeRep::with_left_boundary(PolyMatrix g0) const {
    LocalMatrices l = local_;
    l.g0 = std::move(g0);
    return HeckeRep(N_, n_, params_, std::move(l), convention_);
}

HeckeRep HeckeRep::with_right_boundary(PolyMatrix gN) const {
    LocalMatrices l = local_;
    l.gN = std::move(gN);
    return HeckeRep(N_, n_, params_, std::move(l), convention_);
}

const PolyMatrix& HeckeRep::g_inv_local() const { return require(g_inv_local_, "bulk generator"); }
const PolyMatrix& HeckeRep::g0_inv_local() const { return require(g0_inv_local_, "left boundary generator"); }
const PolyMatrix& HeckeRep::gN_inv_local() const { return require(gN_inv_local_, "right boundary generator"); }

PolyMatrix HeckeRep::M_inv_local() const {
    PolyMatrix out(local_.M.layout());
    for (int i = 0; i < local_.M.dim(); ++i) {
        const LaurentPoly& d = local_.M.at(i, i);
        if (!d.is_constant() || d.is_zero()) throw NotInvertible("twist matrix must be an invertible constant diagonal");
        out.set(i, i, LaurentPoly(d.coeff(0).inverse()));
    }
    return out;
}

const PolyMatrix& HeckeRep::gen(int i) const {
    if (i < 1 || i >= n_) throw IndexOutOfRange("generator g_" + std::to_string(i) + " outside 1.." + std::to_string(n_ - 1));
    return gens_[static_cast<std::size_t>(i - 1)];
}

const PolyMatrix& HeckeRep::gen_inv(int i) const {
    if (i < 1 || i >= n_) throw IndexOutOfRange("generator g_" + std::to_string(i) + " outside 1.." + std::to_string(n_ - 1));
    return require(gen_invs_[static_cast<std::size_t>(i - 1)], "bulk generator");
}

const PolyMatrix& HeckeRep::g0_inv() const { return require(g0_inv_, "left boundary generator"); }
const PolyMatrix& HeckeRep::gN_inv() const { return require(gN_inv_, "right boundary generator"); }

std::map<std::string, std::string> HeckeRep::echo() const {
    auto m = params_.echo();
    m["N"] = std::to_string(N_);
    m["n"] = std::to_string(n_);
    return m;
}

}  // namespace hecke
