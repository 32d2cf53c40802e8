#pragma once

#include <string>
#include <vector>

#include "mirrorhodge/bigint.hpp"
#include "mirrorhodge/bipoly.hpp"

namespace mhodge {

// Dimension bookkeeping for the fixed locus of one nontrivial torsion element:
// a torsor for the cotangent space of a Prym variety of dimension
// (r-1)(g-1), sitting inside an ambient space of half-dimension
// (r^2-1)(g-1), with normal bundle of rank 2r(r-1)(g-1).
struct GammaFixedLocus {
    int r = 0;
    int g = 0;
    long long fixed_dim = 0;        // 2(r-1)(g-1), complex dimension of the fixed locus
    long long ambient_half_dim = 0; // (r^2-1)(g-1)
    long long fermionic_shift = 0;  // r(r-1)(g-1), half the normal-bundle rank
};

GammaFixedLocus gamma_fixed_locus(int r, int g);

// Half the rank of the normal bundle to the fixed locus: r(r-1)(g-1). The
// symplectic form pairs each normal weight alpha with 1 - alpha, so the sum
// of weights is exactly half the rank.
long long fermionic_shift(int r, int g);

// A normalized rotation weight in [0, 1), kept exact.
struct UnitWeight {
    long long num = 0;
    long long den = 1;
};

// Sum of normalized rotation weights on the normal bundle. The action is
// trivial on the canonical bundle, which forces the sum to be an integer;
// a fractional total means the weight set is inconsistent.
long long shift_from_weights(const std::vector<UnitWeight>& weights);

// Closed form of the higher (gamma != 1) stringy terms of the finite-quotient
// space, for r prime and gcd(e, r) = 1:
//   (1/r)(r^{2g}-1)(uv)^{(r^2-1)(g-1)} *
//     [((1-u)(1-v))^{(r-1)(g-1)} - ((1+u+..+u^{r-1})(1+v+..+v^{r-1}))^{g-1}]
// The quotient of cyclotomic factors is expanded as a polynomial, never
// divided. The result does not depend on e.
BiPoly pgl_variant_closed(int r, int g, long long e);

// The same quantity assembled from the group side: (r^{2g}-1) identical fixed
// loci, each contributing (uv)^{(r^2-1)(g-1)} times the character average.
// Must equal pgl_variant_closed exactly; that equality is this module's
// primary self-consistency theorem.
BiPoly pgl_variant_raw(int r, int g, long long e);

inline constexpr const char* kLeadingTermPlaceholder =
    "<leading term: group-invariant part, not computed>";

// Structured decomposition of the stringy E-polynomial: the gamma = 1 slot is
// an opaque placeholder (it cancels in the mirror comparison), every
// nontrivial gamma contributes the same polynomial, and there are r^{2g}-1
// of them.
struct StringyHigherTerms {
    std::string leading = kLeadingTermPlaceholder;
    BiPoly per_gamma;
    Int count;
    BiPoly total;
};

StringyHigherTerms stringy_higher_terms(int r, int g, long long e);

} // namespace mhodge
