#include "hecke/transfer.hpp"

#include "hecke/errors.hpp"

namespace hecke {

PolyMatrix at(const PolyMatrix& local, const Spectral& s) { return at_power(local, s.c, s.e); }

AuxProduct::AuxProduct(const HeckeRep& rep)
    : rep_(&rep),
      layout_(static_cast<std::size_t>(rep.sites() + 1), rep.local_dim()),
      r_hat_local_(r_hat_local(rep)),
      acc_(PolyMatrix::identity(layout_)) {}

void AuxProduct::mul(const PolyMatrix& m) { acc_ = acc_ * m; }

AuxProduct& AuxProduct::twist() { return twist(rep_->M_local()); }

AuxProduct& AuxProduct::twist(const PolyMatrix& m_local) { return aux(m_local); }

AuxProduct& AuxProduct::aux(const PolyMatrix& op) {
    mul(embed(op, {0}, layout_));
    return *this;
}

AuxProduct& AuxProduct::r_left(int k, const Spectral& s) {
    mul(permutation(layout_, 0, k));
    return r_hat(k, s);
}

AuxProduct& AuxProduct::r_right(int k, const Spectral& s) {
    r_hat(k, s);
    mul(permutation(layout_, 0, k));
    return *this;
}

AuxProduct& AuxProduct::r_hat(int k, const Spectral& s) {
    mul(embed(at(r_hat_local_, s), {0, k}, layout_));
    return *this;
}

ExpansionEdge extract_edges(const PolyMatrix& t) {
    if (t.is_zero()) throw ConditionFailure("expansion edges of the zero matrix");
    ExpansionEdge e;
    e.low_deg = t.min_deg();
    e.high_deg = t.max_deg();
    e.low_coeff = t.coefficient(e.low_deg);
    e.high_coeff = t.coefficient(e.high_deg);
    return e;
}

bool expect_proportional(CheckReport& r, const PolyMatrix& a, const PolyMatrix& b, const std::string& label) {
    const auto ratio = mat_proportional(a, b);
    if (ratio && !ratio->num.is_zero()) {
        r.details["ratio_" + label] = ratio->to_string();
        return true;
    }
    r.details["ratio_" + label] = "none";
    FailureWitness w = witness("MurphyMismatch", label);
    if (const auto diff = first_difference(a, b)) {
        w.row = diff->row;
        w.col = diff->col;
        w.lhs = diff->lhs.to_string();
        w.rhs = diff->rhs.to_string();
    }
    r.fail(std::move(w));
    return false;
}

CheckReport check_aux_trace(const HeckeRep& rep, const std::optional<PolyMatrix>& twist_override) {
    CheckReport r;
    r.name = "aux_trace";
    r.params = rep.echo();
    ScopedTimer timer(r);
    const int N = rep.local_dim();
    const Layout two{N, N};
    const PolyMatrix m = twist_override ? *twist_override : rep.M_local();
    const PolyMatrix rh = r_hat_local(rep).substituted(Rational(1), 2);
    // R^_{n0}: generator acting with its first factor on the site.
    const PolyMatrix x = embed(m, {0}, two) * embed(rh, {1, 0}, two);
    const PolyMatrix tr = partial_trace_first(x);
    const auto ratio = mat_proportional(tr, PolyMatrix::identity(tr.layout()));
    if (!ratio || !ratio->is_laurent()) {
        FailureWitness w = witness("ConditionFailure", "auxiliary trace is not a scalar matrix");
        if (const auto diff = first_difference(tr, PolyMatrix::identity(tr.layout(), Rational(0)))) {
            w.row = diff->row;
            w.col = diff->col;
            w.lhs = diff->lhs.to_string();
        }
        r.fail(std::move(w));
        return r;
    }
    r.ratio = ratio->to_string();
    return r;
}

PolyMatrix one_boundary_product(const HeckeRep& rep, const std::optional<PolyMatrix>& k_local) {
    const int n = rep.sites();
    const PolyMatrix k = k_local ? *k_local : k_minus_local(rep);
    PolyMatrix t = rep.identity();
    for (int i = n - 1; i >= 1; --i) t = t * r_hat(rep, i);
    t = t * embed(k, {0}, rep.site_layout());
    for (int i = 1; i <= n - 1; ++i) t = t * r_hat(rep, i);
    return t;
}

OneBoundaryTransfer build_t_one_boundary(const HeckeRep& rep, const std::optional<PolyMatrix>& k_local) {
    const CheckReport cond = check_aux_trace(rep);
    if (cond.failed()) throw ConditionFailure("auxiliary trace condition fails");
    const int n = rep.sites();
    const Spectral u0{Rational(1), 1};
    AuxProduct p(rep);
    p.twist().r_left(n, u0.times(1));
    for (int k = n - 1; k >= 1; --k) p.r_left(k, u0);
    p.aux(k_local ? *k_local : k_minus_local(rep));
    for (int k = 1; k <= n - 1; ++k) p.r_right(k, u0);
    p.r_right(n, Spectral{Rational(1), 0});

    OneBoundaryTransfer out{p.trace(), one_boundary_product(rep, k_local), {}};
    const auto ratio = mat_proportional(out.direct, out.factorized);
    if (!ratio || ratio->num.is_zero()) throw InternalMismatch("direct and factorized one-boundary transfer matrices differ");
    out.ratio = *ratio;
    return out;
}

namespace {

CheckReport one_boundary_report(const HeckeRep& rep, const std::string& name, Family family,
                                const std::optional<PolyMatrix>& k_local) {
    CheckReport r;
    r.name = name;
    r.params = rep.echo();
    r.params["sites"] = std::to_string(rep.sites());
    ScopedTimer timer(r);
    const int n = rep.sites();
    const CheckReport cond = check_aux_trace(rep);
    if (cond.failed()) {
        r.fail(*cond.first_failure);
        return r;
    }
    r.details["aux_trace"] = *cond.ratio;
    OneBoundaryTransfer t;
    try {
        t = build_t_one_boundary(rep, k_local);
    } catch (const Error& e) {
        r.fail(witness("InternalMismatch", e.what()));
        return r;
    }
    r.ratio = t.ratio.to_string();
    const ExpansionEdge edge = extract_edges(t.factorized);
    r.degrees = std::make_pair(edge.low_deg, edge.high_deg);
    const int expected_span = family == Family::A ? 2 * (n - 1) : 2 * n;
    if (edge.low_deg != 0 || edge.high_deg != expected_span) {
        r.fail(witness("DegreeMismatch", "expected degree span [0, " + std::to_string(expected_span) + "], got [" +
                                             std::to_string(edge.low_deg) + ", " + std::to_string(edge.high_deg) +
                                             "]"));
    }
    const int idx = n - 1;
    expect_proportional(r, edge.low_coeff, murphy(rep, family, idx), "low_edge");
    expect_proportional(r, edge.high_coeff, murphy_inverse(rep, family, idx), "high_edge");
    return r;
}

}  // namespace

CheckReport verify_murphy_B(const HeckeRep& rep) { return one_boundary_report(rep, "prop1", Family::B, std::nullopt); }

CheckReport verify_corollary(const HeckeRep& rep) {
    if (rep.sites() < 2) throw IndexOutOfRange("the A-type pipeline needs at least two sites");
    return one_boundary_report(rep, "corollary", Family::A, PolyMatrix::identity({rep.local_dim()}));
}

}  // namespace hecke
