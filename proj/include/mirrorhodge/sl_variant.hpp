#pragma once

#include <string>
#include <vector>

#include "mirrorhodge/bigint.hpp"
#include "mirrorhodge/bipoly.hpp"

namespace mhodge {

// Rank sequence (rk E_1, rk E_2, ...) of the weight decomposition of a
// C*-fixed Higgs bundle; entries are positive and sum to r.
using FixedTypeVector = std::vector<int>;

// Degrees (m_1, ..., m_{r-1}) of the divisors of zeroes of the Higgs-field
// components on a type-(1,...,1) fixed component.
using MTuple = std::vector<int>;

// Degrees (l_1, ..., l_r) of the line-bundle summands.
using DegreeVector = std::vector<long long>;

// Coefficient of t^m in ((1 - t u)(1 - t v))^{g-1}:
//   sum_{a+b=m} (-1)^m C(g-1, a) C(g-1, b) u^a v^b,
// zero once m exceeds 2(g-1).
BiPoly coeff_cm(int g, int m);

// Which congruence the m-tuples are filtered by. The degree relation
// m_i = l_{i+1} - l_i + 2g - 2 forces sum i*m_i = -d (mod r); the opposite
// reading (= +d) indexes the same components through reversed tuples and is
// kept selectable so the convention-independence of the final sum can be
// machine-checked.
enum class CongruenceSign { kMinusD, kPlusD };

// All tuples in the box [0, 2g-2]^{r-1} meeting the congruence, in
// lexicographic order.
std::vector<MTuple> enumerate_mtuples(int r, int g, long long d,
                                      CongruenceSign sign = CongruenceSign::kMinusD);

// Recover the summand degrees from an m-tuple:
//   l_r = (sum i*m_i + d)/r - (g-1)(r-1),  l_i = l_{i+1} - m_i + (2g-2).
// Integrality of l_r is exactly the congruence; the degree sum is asserted
// to equal d.
DegreeVector reconstruct_degrees(int r, int g, long long d, const MTuple& m);

struct StabilityCheck {
    bool stable = false;
    int failing_k = 0; // first k in 2..r violating the slope inequality; 0 when stable
};

// Slope stability against the invariant subbundles: for each k = 2..r,
// r * (l_k + ... + l_r) < d * (r - k + 1), evaluated in cleared-denominator
// integer form.
StabilityCheck check_stability(int r, long long d, const DegreeVector& l);

// Variant contribution of the type-(1,...,1) fixed components by direct
// enumeration: sum over admissible m-tuples of prod_i coeff_cm(g, m_i),
// scaled by (r^{2g}-1)(uv)^{(r^2-1)(g-1)}. Every enumerated tuple must
// reconstruct to a stable degree vector; a failure is a convention bug.
BiPoly sl_variant_enum(int r, int g, long long d,
                       CongruenceSign sign = CongruenceSign::kMinusD);

// The same sum computed through the twisted roots-of-unity average instead of
// the constrained enumeration. The two routes are independent oracles and
// must agree exactly.
BiPoly sl_variant_filter(int r, int g, long long d);

struct KnownVanishing {
    BiPoly value; // always the zero polynomial
    std::string reason;
};

// Variant contribution of fixed components of other types. Established zero
// for type (r) in any rank and types (1,2)/(2,1) in rank 3; every remaining
// type at rank >= 5 is surfaced as an open-conjecture error rather than
// silently skipped.
KnownVanishing other_component_variant(const FixedTypeVector& type, int r, int g);

} // namespace mhodge
