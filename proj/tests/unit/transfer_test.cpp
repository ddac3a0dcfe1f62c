#include <gtest/gtest.h>

#include "hecke/errors.hpp"
#include "hecke/transfer.hpp"
#include "test_support.hpp"

namespace hecke {
namespace {

using testing::sample_point;

// g_{n-1} ... g_1 x g_1 ... g_{n-1} from the embedded generators.
PolyMatrix dressed(const HeckeRep& rep, const PolyMatrix& x, bool inverse) {
    PolyMatrix t = x;
    for (int i = 1; i < rep.sites(); ++i) {
        const PolyMatrix& g = inverse ? rep.gen_inv(i) : rep.gen(i);
        t = g * t * g;
    }
    return t;
}

TEST(AuxTrace, TwistMakesTraceScalar) {
    for (const int N : {2, 3}) {
        const HeckeRep rep = HeckeRep::build_glN(N, 2, sample_point());
        const CheckReport r = check_aux_trace(rep);
        EXPECT_TRUE(r.passed()) << N;
        ASSERT_TRUE(r.ratio);
    }
}

TEST(AuxTrace, IdentityTwistFails) {
    const HeckeRep rep = HeckeRep::build_glN(2, 2, sample_point());
    const CheckReport r = check_aux_trace(rep, PolyMatrix::identity({2}));
    EXPECT_TRUE(r.failed());
    EXPECT_EQ(r.first_failure->kind, "ConditionFailure");
}

TEST(Edges, ExtractsExtremeCoefficients) {
    const LaurentPoly u = LaurentPoly::monomial(Rational(1), 1);
    PolyMatrix m({2});
    m.set(0, 1, LaurentPoly::monomial(Rational(3), -1) + u * u);
    m.set(1, 0, LaurentPoly::monomial(Rational(-2), 3));
    const ExpansionEdge e = extract_edges(m);
    EXPECT_EQ(e.low_deg, -1);
    EXPECT_EQ(e.high_deg, 3);
    EXPECT_EQ(e.low_coeff, PolyMatrix::unit({2}, 0, 1, LaurentPoly(3)));
    EXPECT_EQ(e.high_coeff, PolyMatrix::unit({2}, 1, 0, LaurentPoly(-2)));
    EXPECT_THROW(extract_edges(PolyMatrix({2})), ConditionFailure);
}

TEST(OneBoundary, EdgesAreBTypeMurphyElements) {
    for (const auto& [N, n] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        const HeckeRep rep = HeckeRep::build_glN(N, n, sample_point(1));
        const OneBoundaryTransfer t = build_t_one_boundary(rep);
        const ExpansionEdge e = extract_edges(t.factorized);
        EXPECT_EQ(e.low_deg, 0);
        EXPECT_EQ(e.high_deg, 2 * n);
        EXPECT_TRUE(mat_proportional(e.low_coeff, dressed(rep, rep.g0(), false)));
        EXPECT_TRUE(mat_proportional(e.high_coeff, dressed(rep, rep.g0_inv(), true)));
        const CheckReport r = verify_murphy_B(rep);
        EXPECT_TRUE(r.passed()) << N << " " << n;
        EXPECT_EQ(r.degrees, std::make_pair(0, 2 * n));
    }
}

TEST(OneBoundary, SingleSiteIsTheBoundaryMatrix) {
    const HeckeRep rep = HeckeRep::build_glN(2, 1, sample_point());
    const OneBoundaryTransfer t = build_t_one_boundary(rep);
    EXPECT_TRUE(mat_proportional(t.direct, k_minus_hat(rep)));
}

TEST(OneBoundary, TrivialBoundaryGivesATypeEdges) {
    const HeckeRep rep = HeckeRep::build_glN(2, 3, sample_point(2));
    const CheckReport r = verify_corollary(rep);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.degrees, std::make_pair(0, 4));
    EXPECT_THROW(verify_corollary(rep.with_sites(1)), IndexOutOfRange);
}

TEST(OneBoundary, WrongBoundaryBreaksEdges) {
    const HeckeRep rep = HeckeRep::build_glN(2, 2, sample_point());
    const OneBoundaryTransfer t =
        build_t_one_boundary(rep, PolyMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(0), Rational(1)}}));
    const ExpansionEdge e = extract_edges(t.factorized);
    EXPECT_FALSE(mat_proportional(e.low_coeff, murphy(rep, Family::B, 1)));
}

class TwoBoundary : public ::testing::Test {
protected:
    static DualKit kit(int N, int n, int which = 0) {
        return DualKit::prepare(BaxterKit::calibrate(HeckeRep::build_glN(N, n, sample_point(which))));
    }
};

TEST_F(TwoBoundary, Condition2HoldsAtTheCrossingUnit) {
    for (const int N : {2, 3}) {
        const BaxterKit b = BaxterKit::calibrate(HeckeRep::build_glN(N, 2, sample_point()));
        const CheckReport r = check_condition2(b.rep, b.crossing.chi);
        EXPECT_TRUE(r.passed()) << N;
        EXPECT_EQ(r.details.at("nullity_minus"), "1");
        EXPECT_EQ(r.details.at("nullity_plus"), "1");
        EXPECT_EQ(r.details.at("re_k_plus"), "pass");
        EXPECT_EQ(r.details.at("re_k_minus"), "pass");
    }
}

TEST_F(TwoBoundary, Condition2RejectsOtherUnits) {
    const BaxterKit b = BaxterKit::calibrate(HeckeRep::build_glN(2, 2, sample_point()));
    EXPECT_TRUE(check_condition2(b.rep, -b.crossing.chi).failed());
    const Rational q2 = b.rep.params().q * b.rep.params().q;
    EXPECT_TRUE(check_condition2(b.rep, b.crossing.chi * q2).failed());
}

TEST_F(TwoBoundary, DualFactorsVanishAtCrossing) {
    const DualKit k = kit(2, 2);
    const Rational chi = k.crossing.chi;
    EXPECT_EQ(k.minus.f.evaluate(k.crossing.chi_half), Rational(0));
    EXPECT_EQ(k.plus.f.evaluate(k.crossing.chi_half.inverse()), Rational(0));
    EXPECT_EQ(k.minus.f.evaluate(Rational(0)), -chi);
}

TEST_F(TwoBoundary, MurphyEdgesExceptPlusOpposite) {
    for (const auto& [N, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        const std::vector<CheckReport> rs = verify_murphy_C(kit(N, n));
        ASSERT_EQ(rs.size(), 4u);
        EXPECT_EQ(rs[0].name, "prop2_t_minus_main");
        EXPECT_TRUE(rs[0].passed());
        EXPECT_TRUE(rs[1].passed());
        EXPECT_TRUE(rs[2].passed());
        // Known mismatch: the opposite point of t+ does not reduce to J_0^{-1}.
        EXPECT_EQ(rs[3].name, "prop2_t_plus_opposite");
        EXPECT_TRUE(rs[3].failed());
        EXPECT_EQ(rs[3].first_failure->kind, "MurphyMismatch");
    }
}

TEST_F(TwoBoundary, MainPointsAgreeWithFactorizedForms) {
    const DualKit k = kit(2, 2, 1);
    for (const auto kind : {TwoBoundaryKind::Minus, TwoBoundaryKind::Plus}) {
        const TwoBoundaryTransfer t = build_t_two_boundary(k, kind, EvalPoint::Main);
        ASSERT_TRUE(t.factorized);
        EXPECT_TRUE(mat_proportional(t.direct, *t.factorized));
        const TwoBoundaryTransfer o = build_t_two_boundary(k, kind, EvalPoint::Opposite);
        EXPECT_FALSE(o.factorized);
    }
}

TEST_F(TwoBoundary, DegenerateRightBoundaryGivesBTypeEdge) {
    for (const int n : {2, 3}) {
        const CheckReport r = check_degeneration(HeckeRep::build_glN(2, n, sample_point()));
        EXPECT_TRUE(r.passed()) << n;
        EXPECT_EQ(r.details.at("nullity_minus"), "1");
    }
}

TEST_F(TwoBoundary, GenericTransferReducesToTMinus) {
    const DualKit k = kit(2, 2);
    const PolyMatrix g = generic_transfer(k, 2, true, Spectral{Rational(1), 2});
    EXPECT_EQ(g, build_t_two_boundary(k, TwoBoundaryKind::Minus, EvalPoint::Main).direct);
    EXPECT_THROW(generic_transfer(k, 3, true, Spectral{}), IndexOutOfRange);
}

TEST_F(TwoBoundary, ExplorationIsInformational) {
    const DualKit k = kit(2, 3);
    const CheckReport r = explore_generic(k, 1);
    EXPECT_EQ(r.status, Status::Info);
    EXPECT_EQ(r.details.size(), 8u);
    EXPECT_TRUE(r.details.count("minus lambda=+1d"));
}

TEST(Integrability, HamiltonianIsInTheGeneratorSpan) {
    const std::vector<Rational> pts{Rational(2), Rational(-1, 3)};
    const Hamiltonian h3 = hamiltonian(HeckeRep::build_glN(2, 3, sample_point()), pts);
    ASSERT_TRUE(h3.report.passed());
    ASSERT_EQ(h3.coefficients.size(), 4u);
    EXPECT_EQ(h3.coefficients[2], h3.coefficients[3]);
    EXPECT_NE(h3.coefficients[1], Rational(0));
    const Hamiltonian h4 = hamiltonian(HeckeRep::build_glN(2, 4, sample_point()), pts);
    ASSERT_TRUE(h4.report.passed());
    EXPECT_EQ(h4.coefficients[2], h4.coefficients[4]);
    EXPECT_EQ(h4.coefficients[1] / h4.coefficients[2], h3.coefficients[1] / h3.coefficients[2]);
}

TEST(Integrability, CommutingFamily) {
    const std::vector<std::pair<Rational, Rational>> pairs{{Rational(2), Rational(-3, 5)}, {Rational(1, 7), Rational(4)}};
    for (const int N : {2, 3}) {
        const HeckeRep rep = HeckeRep::build_glN(N, 2, sample_point());
        EXPECT_TRUE(check_commuting_family(rep, Rational(3, 4), pairs).passed()) << N;
    }
    const HeckeRep rep = HeckeRep::build_glN(2, 3, sample_point());
    EXPECT_TRUE(check_commuting_family(rep, Rational(1), pairs).passed());
    const PolyMatrix bad = PolyMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(0), Rational(1)}});
    EXPECT_TRUE(check_commuting_family(rep, Rational(3, 4), pairs, bad).failed());
}

}  // namespace
}  // namespace hecke
