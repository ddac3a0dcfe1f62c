#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hecke/hecke_rep.hpp"

namespace hecke {

// Spectral objects are normalized to polynomials in u = e^{-2 lambda} by
// dropping the e^{lambda} (bulk) and e^{2 lambda} (boundary) prefactors.

// g - u g^{-1} on two factors {N, N}.
PolyMatrix r_hat_local(const HeckeRep& rep);
// g_b + c u - u^2 g_b^{-1} for a boundary generator with its inverse.
PolyMatrix boundary_k_local(const PolyMatrix& gb, const PolyMatrix& gb_inv, const Rational& c);
PolyMatrix k_minus_local(const HeckeRep& rep);
PolyMatrix k_bar_plus_local(const HeckeRep& rep);

// The same objects on the n-site space.
PolyMatrix r_hat(const HeckeRep& rep, int i);
PolyMatrix k_minus_hat(const HeckeRep& rep);
PolyMatrix k_bar_plus_hat(const HeckeRep& rep);

// Local matrix with u -> c * u^m; m = 0 evaluates at u = c.
PolyMatrix at_power(const PolyMatrix& local, const Rational& c, int m);

// Identities in two spectral variables are checked with the first one formal
// and the second fixed to each of the given rationals.
CheckReport check_ybe(const HeckeRep& rep, std::span<const Rational> second);

enum class End { Left, Right };
std::string to_string(End e);

CheckReport check_re(const HeckeRep& rep, End end, std::span<const Rational> second);
// Reflection equation for an arbitrary local boundary matrix in u.
CheckReport check_re_for(const HeckeRep& rep, const PolyMatrix& k_local, End end, std::span<const Rational> second);

CheckReport check_unitarity(const HeckeRep& rep);

// Multiplicative image chi of the crossing shift: the crossing identity holds
// under u -> chi / u. chi_half is its positive rational square root, the
// image of the half shift used to dress the dual boundary.
struct Crossing {
    Rational chi;
    int sign = 1;
    int exponent = 0;  // chi = sign * q^exponent
    Rational chi_half;
    PolyRatio ratio;   // the scalar function the crossing product equals
};

// Searches chi among +-q^k, |k| <= 2N. Throws CalibrationFailure when no
// candidate or more than one candidate passes.
Crossing calibrate_crossing(const HeckeRep& rep);
// Whether the crossing identity holds for a given chi; returns the ratio.
std::optional<PolyRatio> crossing_ratio(const HeckeRep& rep, const Rational& chi);

struct BaxterKit {
    HeckeRep rep;
    Crossing crossing;

    static BaxterKit calibrate(HeckeRep rep);
};

}  // namespace hecke
