#include <gtest/gtest.h>

#include "hecke/errors.hpp"
#include "hecke/hecke_rep.hpp"
#include "test_support.hpp"

namespace hecke {
namespace {

using testing::dense_at;
using testing::dense_mul;
using testing::Dense;
using testing::sample_point;

Dense dense(const PolyMatrix& m) { return dense_at(m, Rational(1)); }

Dense dense_add(Dense a, const Dense& b, const Rational& s = Rational(1)) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += s * b[i][j];
    return a;
}

Dense dense_identity(std::size_t n, const Rational& c = Rational(1)) {
    Dense d(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = c;
    return d;
}

// (x - a)(x + 1/a) on dense matrices.
Dense quadratic(const Dense& x, const Rational& a) {
    const std::size_t n = x.size();
    return dense_mul(dense_add(x, dense_identity(n, -a)), dense_add(x, dense_identity(n, a.inverse())));
}

bool is_zero(const Dense& d) {
    for (const auto& row : d)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

TEST(BuildGlN, TwoDimensionalBulkGenerator) {
    const HeckeParams p = sample_point();
    const HeckeRep rep = HeckeRep::build_glN(2, 3, p);
    const Rational& q = p.q;
    const Rational d = q - q.inverse();
    // Basis (11, 12, 21, 22); the off-diagonal block sits under 21.
    const PolyMatrix expected = PolyMatrix::from_rows({{q, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, d, 0}, {0, 0, 0, q}});
    EXPECT_EQ(rep.g_local(), expected.relabeled({2, 2}));
    EXPECT_EQ(rep.bulk_convention(), BulkConvention::Mirrored);

    // Oracle: the relations checked on plain dense arrays, independent of the checker.
    const Dense g1 = dense(rep.gen(1));
    const Dense g2 = dense(rep.gen(2));
    EXPECT_TRUE(is_zero(quadratic(g1, q)));
    EXPECT_EQ(dense_mul(dense_mul(g1, g2), g1), dense_mul(dense_mul(g2, g1), g2));
    const Dense g0 = dense(rep.g0());
    EXPECT_EQ(dense_mul(dense_mul(g1, g0), dense_mul(g1, g0)), dense_mul(dense_mul(g0, g1), dense_mul(g0, g1)));
}

TEST(BuildGlN, OtherBulkFormsBreakTheBoundaryBraid) {
    const HeckeParams p = sample_point();
    const HeckeRep rep = HeckeRep::build_glN(2, 3, p);
    for (const auto conv : {BulkConvention::Printed, BulkConvention::IndexCorrected}) {
        const HeckeRep other = rep.with_bulk(bulk_generator(2, p.q, conv));
        EXPECT_TRUE(check_relations(other, Family::B).failed()) << to_string(conv);
    }
    // The index-corrected form is still an A-type representation.
    EXPECT_TRUE(check_relations(rep.with_bulk(bulk_generator(2, p.q, BulkConvention::IndexCorrected)), Family::A)
                    .passed());
}

TEST(BuildGlN, LeftBoundaryForTwoDimensions) {
    const HeckeParams p = sample_point(1);
    const PolyMatrix g0 = left_boundary_generator(2, p);
    EXPECT_EQ(g0, PolyMatrix::from_rows({{p.Q0 - p.Q0.inverse(), p.x0p}, {p.x0m, 0}}));
    EXPECT_TRUE(is_zero(quadratic(dense(g0), p.Q0)));
}

TEST(BuildGlN, RejectsBrokenBoundaryProduct) {
    HeckeParams p = sample_point();
    p.x0m = Rational(2) / p.x0p;
    EXPECT_THROW(HeckeRep::build_glN(2, 2, p), ConstraintViolation);
    // Residue of the quadratic relation sits in the (1,1) entry and equals x+x- - 1.
    const Dense res = quadratic(dense(left_boundary_generator(2, p)), p.Q0);
    EXPECT_EQ(res[0][0], Rational(1));
}

TEST(GeneratorInverse, FromQuadraticRelation) {
    const HeckeParams p = sample_point();
    const HeckeRep rep = HeckeRep::build_glN(3, 2, p);
    const PolyMatrix& g = rep.g_local();
    const PolyMatrix inv = generator_inverse(g, p.q, p.q);
    EXPECT_EQ(inv, g - PolyMatrix::identity(g.layout(), p.q - p.q.inverse()));
    EXPECT_EQ(g * inv, PolyMatrix::identity(g.layout()));
    EXPECT_EQ(generator_inverse(PolyMatrix::identity({2}), Rational(1), Rational(1)), PolyMatrix::identity({2}));
    EXPECT_THROW(generator_inverse(PolyMatrix::unit({2}, 0, 1), Rational(1), Rational(1)), NotInvertible);
}

TEST(Relations, AllFamiliesHold) {
    for (const int which : {0, 1, 2}) {
        const HeckeParams p = sample_point(which);
        for (const auto& [N, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}}) {
            const HeckeRep rep = HeckeRep::build_glN(N, n, p);
            for (const Family f : {Family::A, Family::B, Family::C}) {
                const CheckReport r = check_relations(rep, f);
                EXPECT_TRUE(r.passed()) << to_string(f) << " N=" << N << " n=" << n << " "
                                        << (r.first_failure ? r.first_failure->detail : "");
            }
        }
    }
}

TEST(Relations, IdentityBulkFailsQuadratic) {
    const HeckeRep rep = HeckeRep::build_glN(2, 3, sample_point());
    const HeckeRep broken = HeckeRep::from_local(2, 3, rep.params(),
                                                 LocalMatrices{PolyMatrix::identity({2, 2}), rep.g0_local(),
                                                               rep.gN_local(), rep.M_local()});
    const CheckReport r = check_relations(broken, Family::A);
    ASSERT_TRUE(r.failed());
    EXPECT_EQ(r.first_failure->kind, "RelationFailure");
    EXPECT_NE(r.first_failure->detail.find("quadratic"), std::string::npos);
}

TEST(Relations, FamilyAIgnoresBoundary) {
    const HeckeRep rep = HeckeRep::build_glN(2, 3, sample_point());
    const HeckeRep corrupted = rep.with_left_boundary(PolyMatrix::from_rows({{1, 2}, {3, 4}}));
    EXPECT_TRUE(check_relations(corrupted, Family::A).passed());
    EXPECT_TRUE(check_relations(corrupted, Family::B).failed());
}

TEST(TemperleyLieb, TwoDimensionalQuotient) {
    const HeckeParams p = sample_point();
    const HeckeRep rep = HeckeRep::build_glN(2, 3, p);
    CheckReport r;
    const auto k = check_tl_quotient(rep, r);
    ASSERT_TRUE(k) << (r.first_failure ? r.first_failure->detail : "");
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.details.at("kappa_minus"), k->kappa_minus.fraction());

    // Oracle: e1 e0 e1 = kappa e1 read off a nonzero entry of the dense product.
    const Dense e1 = dense_add(dense(rep.gen(1)), dense_identity(8, -p.q));
    const Dense e0 = dense_add(dense(rep.g0()), dense_identity(8, -p.Q0));
    const Dense prod = dense_mul(dense_mul(e1, e0), e1);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            EXPECT_EQ(prod[i][j], k->kappa_minus * e1[i][j]);
        }
    }
    const Dense e2 = dense_add(dense(rep.gen(2)), dense_identity(8, -p.q));
    EXPECT_EQ(dense_mul(dense_mul(e1, e2), e1), e1);
}

TEST(TemperleyLieb, ThreeDimensionalChainIsNotTL) {
    const HeckeRep rep = HeckeRep::build_glN(3, 3, sample_point());
    CheckReport r;
    EXPECT_FALSE(check_tl_quotient(rep, r));
    ASSERT_TRUE(r.failed());
    EXPECT_EQ(r.first_failure->kind, "RelationFailure");
}

TEST(Murphy, Constructors) {
    const HeckeRep rep = HeckeRep::build_glN(2, 3, sample_point());
    EXPECT_EQ(murphy(rep, Family::B, 0), rep.g0());
    EXPECT_EQ(murphy(rep, Family::A, 1), rep.gen(1) * rep.gen(1));
    EXPECT_EQ(murphy(rep, Family::B, 1), rep.gen(1) * rep.g0() * rep.gen(1));
    EXPECT_EQ(murphy(rep, Family::B, 2), rep.gen(2) * rep.gen(1) * rep.g0() * rep.gen(1) * rep.gen(2));
    EXPECT_EQ(murphy(rep, Family::B, 1, BRecursion::AsPrinted), rep.gen(1) * rep.gen(1));
    EXPECT_EQ(murphy(rep, Family::C, 0),
              rep.gen_inv(1) * rep.gen_inv(2) * rep.gN() * rep.gen(2) * rep.gen(1) * rep.g0());
    EXPECT_THROW(murphy(rep, Family::A, 0), IndexOutOfRange);
    EXPECT_THROW(murphy(rep, Family::B, 3), IndexOutOfRange);
}

TEST(Murphy, InversesAndTrivialBoundary) {
    const HeckeRep rep = HeckeRep::build_glN(2, 4, sample_point(1));
    for (const Family f : {Family::A, Family::B, Family::C}) {
        for (int i = f == Family::A ? 1 : 0; i < rep.sites(); ++i) {
            EXPECT_EQ(murphy(rep, f, i) * murphy_inverse(rep, f, i), rep.identity()) << to_string(f) << i;
        }
    }
    const HeckeRep trivial = rep.with_left_boundary(PolyMatrix::identity({2}));
    for (int i = 1; i < rep.sites(); ++i) EXPECT_EQ(murphy(trivial, Family::B, i), murphy(trivial, Family::A, i));
}

TEST(Murphy, PairwiseCommutation) {
    EXPECT_TRUE(check_murphy_commutation(HeckeRep::build_glN(2, 4, sample_point()), Family::B).passed());
    EXPECT_TRUE(check_murphy_commutation(HeckeRep::build_glN(3, 3, sample_point()), Family::A).passed());
    EXPECT_TRUE(check_murphy_commutation(HeckeRep::build_glN(2, 3, sample_point(2)), Family::C).passed());
}

TEST(Murphy, CorruptedElementNamesThePair) {
    const HeckeRep rep = HeckeRep::build_glN(2, 3, sample_point());
    std::vector<PolyMatrix> js = murphy_family(rep, Family::B);
    js[1] = js[1] + PolyMatrix::unit(rep.site_layout(), 0, 5);
    const CheckReport r = check_pairwise_commutation(js, 0);
    ASSERT_TRUE(r.failed());
    EXPECT_NE(r.first_failure->detail.find("(0,1)"), std::string::npos);
}

TEST(Murphy, PowerSumsAreCentral) {
    EXPECT_TRUE(check_symmetric_commutant(HeckeRep::build_glN(2, 3, sample_point()), Family::B, 2).passed());
    EXPECT_TRUE(check_symmetric_commutant(HeckeRep::build_glN(2, 2, sample_point()), Family::C, 1).passed());
    EXPECT_TRUE(check_symmetric_commutant(HeckeRep::build_glN(3, 3, sample_point(1)), Family::A, 2).passed());
    // A single element is not central.
    const HeckeRep rep = HeckeRep::build_glN(2, 3, sample_point());
    EXPECT_FALSE(commutator(murphy(rep, Family::B, 1), rep.gen(2)).is_zero());
}

TEST(AuxString, Images) {
    const HeckeRep rep = HeckeRep::build_glN(2, 3, sample_point());
    const AuxStringImage id = aux_string_image(rep, 0);
    EXPECT_EQ(id.g0, rep.g0());
    ASSERT_EQ(id.gs.size(), 2u);
    EXPECT_EQ(id.gs[0], rep.gen(1));

    const AuxStringImage s1 = aux_string_image(rep, 1);
    EXPECT_EQ(s1.g0, rep.gen(1) * rep.g0() * rep.gen(1));
    ASSERT_EQ(s1.gs.size(), 1u);
    EXPECT_EQ(s1.gs[0], rep.gen(2));
    EXPECT_TRUE(s1.report.passed());
    EXPECT_EQ(s1.report.details.at("image_g0_quadratic"), "fails");
    EXPECT_FALSE(is_zero(quadratic(dense(s1.g0), rep.params().Q0)));
    EXPECT_THROW(aux_string_image(rep, 3), IndexOutOfRange);
}

}  // namespace
}  // namespace hecke
