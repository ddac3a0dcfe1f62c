#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hecke/baxter.hpp"

namespace hecke {

// Spectral value c * v^e of a single formal variable v.
struct Spectral {
    Rational c{1};
    int e = 0;

    [[nodiscard]] Spectral times(int k) const { return {c, e + k}; }
    [[nodiscard]] Spectral scaled(const Rational& s) const { return {c * s, e}; }
    // chi' / u
    [[nodiscard]] Spectral crossed(const Rational& chi_half) const { return {chi_half / c, -e}; }
};

PolyMatrix at(const PolyMatrix& local, const Spectral& s);

// Left-to-right product on aux (factor 0) (x) sites 1..n.
class AuxProduct {
public:
    explicit AuxProduct(const HeckeRep& rep);

    AuxProduct& twist();                                    // M_0
    AuxProduct& twist(const PolyMatrix& m_local);           // override of M_0
    AuxProduct& aux(const PolyMatrix& op);                  // op_0
    AuxProduct& r_left(int k, const Spectral& s);           // R_0k = P_0k R^_0k
    AuxProduct& r_right(int k, const Spectral& s);          // R_k0 = R^_0k P_0k
    AuxProduct& r_hat(int k, const Spectral& s);            // R^_0k alone

    [[nodiscard]] const PolyMatrix& value() const { return acc_; }
    [[nodiscard]] PolyMatrix trace() const { return partial_trace_first(acc_); }

private:
    void mul(const PolyMatrix& m);

    const HeckeRep* rep_;
    Layout layout_;
    PolyMatrix r_hat_local_;
    PolyMatrix acc_;
};

struct ExpansionEdge {
    int low_deg = 0;
    PolyMatrix low_coeff;
    int high_deg = 0;
    PolyMatrix high_coeff;
};

// Throws ConditionFailure for the zero matrix.
ExpansionEdge extract_edges(const PolyMatrix& t);

// Proportionality of a to b recorded under `label` in the report (ratio in
// details, MurphyMismatch on failure). Returns whether it held.
bool expect_proportional(CheckReport& r, const PolyMatrix& a, const PolyMatrix& b, const std::string& label);

// ---- one boundary ----------------------------------------------------------

// tr_0{M_0 R^_{n0}(u^2)} on two factors; passes when it is f(u) * I.
CheckReport check_aux_trace(const HeckeRep& rep, const std::optional<PolyMatrix>& twist_override = std::nullopt);

struct OneBoundaryTransfer {
    PolyMatrix direct;      // trace construction, variable u0
    PolyMatrix factorized;  // R^_{n-1,n} ... R^_12 K^_1 R^_12 ... R^_{n-1,n}
    PolyRatio ratio;        // direct / factorized
};

// Chain length is rep.sites(). k_local overrides K^ (N x N, in u0).
// Throws ConditionFailure when the aux trace is not scalar and
// InternalMismatch when the two constructions disagree.
OneBoundaryTransfer build_t_one_boundary(const HeckeRep& rep, const std::optional<PolyMatrix>& k_local = std::nullopt);

CheckReport verify_murphy_B(const HeckeRep& rep);
// K^ = I; low edge against the A-type element. Needs rep.sites() >= 2.
CheckReport verify_corollary(const HeckeRep& rep);

// ---- two boundaries --------------------------------------------------------

enum class DualSide { Minus, Plus };

// Boundary matrix A(u) = A0 + A1 u + A2 u^2 with a monic quadratic f such that
//   Minus: tr_0{M_0 A_0 (g_10 - u^2 g_10^{-1})} = f K-bar^
//   Plus:  tr_0{A_0 M_0 (u^2 g_10 - g_10^{-1})} = f K^
struct DualSolution {
    PolyMatrix a;
    LaurentPoly f;
    int nullity = 0;
};

// nullopt when the solution space is not one-dimensional or f vanishes.
std::optional<DualSolution> solve_dual(const HeckeRep& rep, DualSide side, int* nullity_out = nullptr);

struct DualKit {
    HeckeRep rep;
    Crossing crossing;
    DualSolution minus;  // K+ paired with K^ in t-
    DualSolution plus;   // K- paired with K-bar^ in t+

    // Throws ConditionFailure if either dual is missing.
    static DualKit prepare(const BaxterKit& kit);
};

// Solves both duals, requires f to vanish at u^2 = chi (resp. 1/chi) and
// checks that their crossing-dressed forms solve the reflection equation.
// chi' is the rational square root of chi.
CheckReport check_condition2(const HeckeRep& rep, const Rational& chi);

enum class TwoBoundaryKind { Minus, Plus };
enum class EvalPoint { Main, Opposite };

std::string to_string(TwoBoundaryKind k);
std::string to_string(EvalPoint p);

struct TwoBoundaryTransfer {
    PolyMatrix direct;
    std::optional<PolyMatrix> factorized;  // main points only
    std::optional<PolyRatio> ratio;
};

TwoBoundaryTransfer build_t_two_boundary(const DualKit& kit, TwoBoundaryKind kind, EvalPoint point);

// Four reports: t- and t+ at the main and opposite points.
std::vector<CheckReport> verify_murphy_C(const DualKit& kit);
// g_N -> QN I: the t- low edge against the B-type element.
CheckReport check_degeneration(const HeckeRep& rep);

// ---- integrability ---------------------------------------------------------

// Homogeneous product form in u; its derivative at u = 1 is the Hamiltonian.
PolyMatrix one_boundary_product(const HeckeRep& rep, const std::optional<PolyMatrix>& k_local = std::nullopt);

// Commuting family in u with the inhomogeneity u0 on the last site.
PolyMatrix commuting_transfer(const HeckeRep& rep, const Rational& u0,
                              const std::optional<PolyMatrix>& k_local = std::nullopt);

struct Hamiltonian {
    PolyMatrix h;
    // Coefficients of I, g_0, g_1, ..., g_{n-1}.
    std::vector<Rational> coefficients;
    CheckReport report;
};

Hamiltonian hamiltonian(const HeckeRep& rep, std::span<const Rational> points);

CheckReport check_commuting_family(const HeckeRep& rep, const Rational& u0,
                                   std::span<const std::pair<Rational, Rational>> pairs,
                                   const std::optional<PolyMatrix>& k_local = std::nullopt);

// Partially dressed transfer matrix on a chain of rep.sites() with the inner
// boundary dressed by sites 1..n and the outer one by n+1..L. Edges are
// compared against every C-type Murphy element and inverse; info only.
CheckReport explore_generic(const DualKit& kit, int n);
PolyMatrix generic_transfer(const DualKit& kit, int n, bool minus_pair, const Spectral& u);

}  // namespace hecke
