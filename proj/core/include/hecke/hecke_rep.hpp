#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/check_report.hpp"
#include "hecke/poly_matrix.hpp"

namespace hecke {

struct HeckeParams {
    Rational q;
    Rational Q0;
    Rational QN;
    Rational x0p;
    Rational x0m;
    Rational xNp;
    Rational xNm;
    Rational c_minus;
    Rational c_plus;

    // Fills x0m, xNm as the reciprocals of x0p, xNp.
    static HeckeParams make(Rational q, Rational Q0, Rational QN, Rational x0p, Rational xNp, Rational c_minus,
                            Rational c_plus);

    [[nodiscard]] std::map<std::string, std::string> echo() const;
};

enum class Family { A, B, C, TL2B };

std::string to_string(Family f);
Family parse_family(std::string_view s);

// Form of the off-diagonal bulk term tried when building the gl_N generator:
//   Printed         e_ab (x) e_ab, sign exponent sgn(a-b)
//   IndexCorrected  e_ab (x) e_ba, sign exponent sgn(a-b)
//   Mirrored        e_ab (x) e_ba, sign exponent sgn(b-a)
enum class BulkConvention { Printed, IndexCorrected, Mirrored };

std::string to_string(BulkConvention c);

PolyMatrix bulk_generator(int N, const Rational& q, BulkConvention convention);
PolyMatrix left_boundary_generator(int N, const HeckeParams& p);
PolyMatrix right_boundary_generator(int N, const HeckeParams& p);
PolyMatrix twist_matrix(int N, const Rational& q);

// Inverse from the quadratic relation (g - alpha)(g + 1/beta) = 0:
// X = (g - (alpha - 1/beta)) * beta / alpha. Throws NotInvertible when g X != 1.
PolyMatrix generator_inverse(const PolyMatrix& g, const Rational& alpha, const Rational& beta);

struct LocalMatrices {
    PolyMatrix g;   // layout {N, N}
    PolyMatrix g0;  // layout {N}
    PolyMatrix gN;  // layout {N}
    PolyMatrix M;   // layout {N}, diagonal
};

// Tensor representation of the A/B/C-type Hecke algebras on n sites of
// dimension N. Immutable; generators are embedded once at construction.
class HeckeRep {
public:
    // Builds the gl_N representation, selecting the first bulk convention that
    // satisfies the quadratic, braid and boundary braid relations. Throws
    // ConstraintViolation when the parameters break a quadratic relation.
    static HeckeRep build_glN(int N, int n, const HeckeParams& params);
    // No validation; used to probe the checkers with broken data.
    static HeckeRep from_local(int N, int n, const HeckeParams& params, LocalMatrices local);

    [[nodiscard]] HeckeRep with_sites(int n) const;
    [[nodiscard]] HeckeRep with_bulk(PolyMatrix g) const;
    [[nodiscard]] HeckeRep with_left_boundary(PolyMatrix g0) const;
    [[nodiscard]] HeckeRep with_right_boundary(PolyMatrix gN) const;

    [[nodiscard]] int local_dim() const { return N_; }
    [[nodiscard]] int sites() const { return n_; }
    [[nodiscard]] const HeckeParams& params() const { return params_; }
    [[nodiscard]] std::optional<BulkConvention> bulk_convention() const { return convention_; }

    [[nodiscard]] const PolyMatrix& g_local() const { return local_.g; }
    [[nodiscard]] const PolyMatrix& g0_local() const { return local_.g0; }
    [[nodiscard]] const PolyMatrix& gN_local() const { return local_.gN; }
    [[nodiscard]] const PolyMatrix& M_local() const { return local_.M; }
    [[nodiscard]] const PolyMatrix& g_inv_local() const;
    [[nodiscard]] const PolyMatrix& g0_inv_local() const;
    [[nodiscard]] const PolyMatrix& gN_inv_local() const;
    [[nodiscard]] PolyMatrix M_inv_local() const;

    [[nodiscard]] Layout site_layout() const { return Layout(static_cast<std::size_t>(n_), N_); }
    [[nodiscard]] PolyMatrix identity() const { return PolyMatrix::identity(site_layout()); }

    // pi(g_i) for 1 <= i <= n-1.
    [[nodiscard]] const PolyMatrix& gen(int i) const;
    [[nodiscard]] const PolyMatrix& gen_inv(int i) const;
    // pi(g_0) on site 1 and pi(g_N) on site n.
    [[nodiscard]] const PolyMatrix& g0() const { return g0_; }
    [[nodiscard]] const PolyMatrix& gN() const { return gN_; }
    [[nodiscard]] const PolyMatrix& g0_inv() const;
    [[nodiscard]] const PolyMatrix& gN_inv() const;

    [[nodiscard]] std::map<std::string, std::string> echo() const;

private:
    HeckeRep(int N, int n, HeckeParams params, LocalMatrices local, std::optional<BulkConvention> convention);

    int N_ = 2;
    int n_ = 1;
    HeckeParams params_;
    LocalMatrices local_;
    std::optional<BulkConvention> convention_;
    std::optional<PolyMatrix> g_inv_local_, g0_inv_local_, gN_inv_local_;
    std::vector<PolyMatrix> gens_;
    std::vector<std::optional<PolyMatrix>> gen_invs_;
    PolyMatrix g0_, gN_;
    std::optional<PolyMatrix> g0_inv_, gN_inv_;
};

// Relation checks. Every identity is an exact matrix equality on the n-site
// space; the first violation is recorded as a RelationFailure.
CheckReport check_relations(const HeckeRep& rep, Family family);

struct TLConstants {
    Rational kappa_minus;
    Rational kappa_plus;
};
// Checks the two-boundary Temperley-Lieb relations with e_i = g_i - q,
// e_0 = g_0 - Q0, e_N = g_N - QN. On success the report carries the boundary
// constants in details and they are returned.
std::optional<TLConstants> check_tl_quotient(const HeckeRep& rep, CheckReport& report);

// Which recursion builds the B-type Murphy elements for i >= 1:
// ViaB uses J_i = g_i J_{i-1}^{(B)} g_i, AsPrinted uses the A-type element
// J_{i-1}^{(A)} (with J_0^{(A)} = 1) and so never involves g_0.
enum class BRecursion { ViaB, AsPrinted };

PolyMatrix murphy(const HeckeRep& rep, Family family, int i, BRecursion rec = BRecursion::ViaB);
PolyMatrix murphy_inverse(const HeckeRep& rep, Family family, int i, BRecursion rec = BRecursion::ViaB);
// All Murphy elements of the family in index order.
std::vector<PolyMatrix> murphy_family(const HeckeRep& rep, Family family);

// [J_i, J_j] = 0 for every pair; failures name the pair by position in the list.
CheckReport check_pairwise_commutation(std::span<const PolyMatrix> elements, int first_index = 0);
CheckReport check_murphy_commutation(const HeckeRep& rep, Family family);
// Power sums of the Murphy elements against every generator of the family.
// For C the Laurent sums sum_i (J_i^m + J_i^{-m}) are used.
CheckReport check_symmetric_commutant(const HeckeRep& rep, Family family, int max_power);

struct AuxStringImage {
    PolyMatrix g0;               // sigma_l(g_0)
    std::vector<PolyMatrix> gs;  // sigma_l(g_i) = g_{i+l}, i = 1 .. n-1-l
    CheckReport report;          // B-type braid relations; quadratic relation recorded as info
};
AuxStringImage aux_string_image(const HeckeRep& rep, int l);

}  // namespace hecke
