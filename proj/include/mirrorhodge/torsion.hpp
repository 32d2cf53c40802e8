#pragma once

#include <vector>

#include "mirrorhodge/bigint.hpp"
#include "mirrorhodge/bipoly.hpp"

namespace mhodge {

inline constexpr long long kDefaultEnumCap = 1'000'000;

// An r-torsion class of line bundles on a genus-g curve, written in a fixed
// standard symplectic basis of (Z/r)^{2g}: coordinate i pairs with g+i.
struct TorsionElement {
    int r = 0;                // prime order of the ambient group
    std::vector<int> coords;  // 2g residues in [0, r)

    bool is_zero() const {
        for (int c : coords) {
            if (c != 0) return false;
        }
        return true;
    }
    int genus() const { return static_cast<int>(coords.size() / 2); }
};

// The torsion group (Z/r)^{2g} with its standard symplectic pairing; factory
// and enumerator for elements.
class TorsionGroup {
public:
    TorsionGroup(int r, int g);

    int r() const { return r_; }
    int genus() const { return g_; }
    Int order() const { return int_pow(Int(r_), static_cast<unsigned>(2 * g_)); }

    TorsionElement zero() const;
    TorsionElement basis(int i) const; // e_i, 0 <= i < 2g
    TorsionElement element(std::vector<int> coords) const;

    // Visit all r^{2g} elements in odometer order (last coordinate fastest).
    template <typename F>
    void for_each(F&& fn) const {
        TorsionElement cur = zero();
        for (;;) {
            fn(static_cast<const TorsionElement&>(cur));
            int i = static_cast<int>(cur.coords.size()) - 1;
            while (i >= 0) {
                if (++cur.coords[static_cast<std::size_t>(i)] < r_) break;
                cur.coords[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) return;
        }
    }

private:
    int r_;
    int g_;
};

// Standard symplectic Weil pairing sum_{i<g} (a_i b_{g+i} - a_{g+i} b_i) mod r,
// returned in [0, r). Bilinear, antisymmetric, nondegenerate.
int weil_pairing(const TorsionElement& a, const TorsionElement& b);

// Histogram over Z/r of pairing values <gamma, delta> across all delta, by
// exhaustive enumeration (capped). Nondegeneracy forces every count to equal
// r^{2g-1}; callers check that, this function just counts.
std::vector<long long> pairing_value_counts(const TorsionElement& gamma,
                                            long long cap = kDefaultEnumCap);

enum class AverageMode { kFull, kReduced };

// The invariant part of the fixed-locus E-polynomial as a group average:
//   (1/|Gamma|) sum_delta rho^{-e}(delta)
//       prod_{i=1}^{r-1} ((1 - rho^i(delta) u)(1 - rho^i(delta) v))^{g-1}
// with rho(delta) = zeta^{<gamma, delta>}. Full mode enumerates Gamma and
// measures the pairing histogram; reduced mode weights the r root-of-unity
// classes by r^{2g-1}. Both must produce the same integral polynomial.
BiPoly character_average(const TorsionElement& gamma, long long e, AverageMode mode,
                         long long cap = kDefaultEnumCap);

// Exponent q * <gamma, delta> mod r (q = d^{-1} mod r) by which delta moves
// the components of the fixed locus; the induced action on the chosen
// component composes with the negated Galois correction.
int component_action_exponent(const TorsionElement& gamma, const TorsionElement& delta,
                              long long d);

// Exponents of the eigenvalues of delta on H^1 of the fixed abelian variety:
// the multiset {k * <gamma, delta> mod r : k = 1..r-1}, each with
// multiplicity g-1. Returned sorted.
std::vector<int> prym_h1_eigenvalues(const TorsionElement& gamma, const TorsionElement& delta);

} // namespace mhodge
