#pragma once

#include <functional>
#include <vector>

#include "mirrorhodge/bigint.hpp"
#include "mirrorhodge/bipoly.hpp"

namespace mhodge {

// Element of Z[zeta_r] for r prime, stored in the power basis
// {1, zeta, ..., zeta^{r-2}}. The basis is a Z-module basis because the
// minimal polynomial of zeta is 1 + zeta + ... + zeta^{r-1} = 0, so the
// representation is unique after eager reduction and rationality is just
// "all non-constant coordinates vanish".
class CycElem {
public:
    explicit CycElem(int r);
    static CycElem integer(int r, Int value);
    static CycElem one(int r) { return integer(r, 1); }
    static CycElem zeta_pow(int r, long long k);

    int order() const { return r_; }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    const Int& rational_part() const; // throws InternalCheckError when not rational

    // Substitute zeta -> zeta^k (a Galois conjugate when gcd(k, r) = 1).
    CycElem galois_conjugate(long long k) const;

    friend CycElem operator+(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a, const CycElem& b);
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    CycElem operator-() const;
    friend bool operator==(const CycElem& a, const CycElem& b);
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

private:
    // Reduce an exponent-indexed accumulator of length r via
    // zeta^{r-1} = -(1 + zeta + ... + zeta^{r-2}).
    static CycElem from_folded(int r, std::vector<Int> acc);
    static void require_same_ring(const CycElem& a, const CycElem& b);

    int r_;
    std::vector<Int> coords_; // length r-1
};

inline bool coeff_is_zero(const CycElem& c) { return c.is_zero(); }

// Bivariate polynomial with cyclotomic coefficients; the intermediate carrier
// while zeta-powers are substituted for characters.
using CycBiPoly = SparseBivariate<CycElem>;

inline CycBiPoly pow(const CycBiPoly& base, unsigned n, int r) {
    return detail::pow_with_one(base, n, CycBiPoly::monomial(CycElem::one(r), 0, 0));
}

// prod_{i=1}^{r-1} ((1 - zeta^{ij} u)(1 - zeta^{ij} v))^{g-1}: the j-th term of
// every mu_r-average in the pipeline (the E-polynomial of the torsion-fixed
// abelian-variety factor with the character evaluated at zeta^j).
CycBiPoly character_term_poly(int r, int j, int g);

// Twisted average over the r-th roots of unity:
//   (1/r) * sum_{j=0}^{r-1} zeta^{-j*twist} * evaluate(j).
// Orthogonality of roots of unity forces the sum to have rational integer
// coefficients divisible by r; both facts are asserted, and a violation is a
// bug in the caller, never a user-facing condition.
BiPoly rou_filter(const std::function<CycBiPoly(int)>& evaluate, long long twist, int r);

} // namespace mhodge
