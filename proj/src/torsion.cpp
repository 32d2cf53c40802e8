#include "mirrorhodge/torsion.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mirrorhodge/cyclotomic.hpp"

namespace mhodge {

namespace {

void require_same_group(const TorsionElement& a, const TorsionElement& b) {
    if (a.r != b.r || a.coords.size() != b.coords.size()) {
        throw ParameterError("torsion elements belong to different groups");
    }
}

void require_valid_element(const TorsionElement& a) {
    require_prime(a.r, "torsion order");
    if (a.coords.empty() || a.coords.size() % 2 != 0) {
        throw ParameterError("torsion element needs 2g coordinates, g >= 1");
    }
    for (int c : a.coords) {
        if (c < 0 || c >= a.r) throw ParameterError("torsion coordinate out of range [0, r)");
    }
}

void require_enumerable(const TorsionGroup& group, long long cap) {
    if (group.order() > cap) {
        std::ostringstream os;
        os << "full enumeration of " << group.order() << " elements exceeds the cap " << cap
           << "; use reduced mode";
        throw EnumerationCapError(os.str());
    }
}

} // namespace

TorsionGroup::TorsionGroup(int r, int g) : r_(r), g_(g) {
    require_prime(r, "torsion order");
    if (g < 1) throw ParameterError("genus must be >= 1");
}

TorsionElement TorsionGroup::zero() const {
    return TorsionElement{r_, std::vector<int>(static_cast<std::size_t>(2 * g_), 0)};
}

TorsionElement TorsionGroup::basis(int i) const {
    if (i < 0 || i >= 2 * g_) throw ParameterError("basis index out of range");
    TorsionElement e = zero();
    e.coords[static_cast<std::size_t>(i)] = 1;
    return e;
}

TorsionElement TorsionGroup::element(std::vector<int> coords) const {
    if (coords.size() != static_cast<std::size_t>(2 * g_)) {
        throw ParameterError("torsion element needs exactly 2g coordinates");
    }
    for (int& c : coords) c = mod_norm(c, r_);
    return TorsionElement{r_, std::move(coords)};
}

int weil_pairing(const TorsionElement& a, const TorsionElement& b) {
    require_valid_element(a);
    require_same_group(a, b);
    const int g = a.genus();
    long long sum = 0;
    for (int i = 0; i < g; ++i) {
        sum += static_cast<long long>(a.coords[static_cast<std::size_t>(i)]) *
                   b.coords[static_cast<std::size_t>(g + i)] -
               static_cast<long long>(a.coords[static_cast<std::size_t>(g + i)]) *
                   b.coords[static_cast<std::size_t>(i)];
    }
    return mod_norm(sum, a.r);
}

std::vector<long long> pairing_value_counts(const TorsionElement& gamma, long long cap) {
    require_valid_element(gamma);
    if (gamma.is_zero()) {
        throw ParameterError("pairing histogram is degenerate against the identity element");
    }
    TorsionGroup group(gamma.r, gamma.genus());
    require_enumerable(group, cap);
    std::vector<long long> counts(static_cast<std::size_t>(gamma.r), 0);
    group.for_each([&](const TorsionElement& delta) {
        ++counts[static_cast<std::size_t>(weil_pairing(gamma, delta))];
    });
    return counts;
}

BiPoly character_average(const TorsionElement& gamma, long long e, AverageMode mode,
                         long long cap) {
    require_valid_element(gamma);
    if (gamma.is_zero()) {
        throw ParameterError("character_average requires a nontrivial group element");
    }
    const int r = gamma.r;
    const int g = gamma.genus();

    if (mode == AverageMode::kReduced) {
        // The r pairing-value classes each have r^{2g-1} members, so the
        // Gamma-average collapses to the mu_r-average.
        return rou_filter([&](int j) { return character_term_poly(r, j, g); }, e, r);
    }

    // Full mode: measure the class sizes by walking all of Gamma, then add the
    // per-class polynomial once per member.
    const std::vector<long long> counts = pairing_value_counts(gamma, cap);
    const int en = mod_norm(e, r);
    CycBiPoly sum;
    for (int p = 0; p < r; ++p) {
        CycElem weight = CycElem::zeta_pow(r, -static_cast<long long>(en) * p) *
                         CycElem::integer(r, counts[static_cast<std::size_t>(p)]);
        sum = sum + character_term_poly(r, p, g).scaled(weight);
    }
    const Int order = TorsionGroup(r, g).order();
    BiPoly out;
    for (const auto& [exp, c] : sum.terms()) {
        if (!c.is_rational()) {
            throw InternalCheckError("character_average: full-group sum has an irrational coefficient");
        }
        Int q, rem;
        boost::multiprecision::divide_qr(c.rational_part(), order, q, rem);
        if (!rem.is_zero()) {
            std::ostringstream os;
            os << "character_average: coefficient " << c.rational_part()
               << " is not divisible by the group order " << order;
            throw InternalCheckError(os.str());
        }
        out.add_term(exp.first, exp.second, q);
    }
    return out;
}

int component_action_exponent(const TorsionElement& gamma, const TorsionElement& delta,
                              long long d) {
    require_valid_element(gamma);
    require_same_group(gamma, delta);
    if (gamma.is_zero()) {
        throw ParameterError("component action is defined for a nontrivial group element");
    }
    require_coprime(d, gamma.r, "degree d");
    const int q = mod_inverse(d, gamma.r);
    return mod_norm(static_cast<long long>(q) * weil_pairing(gamma, delta), gamma.r);
}

std::vector<int> prym_h1_eigenvalues(const TorsionElement& gamma, const TorsionElement& delta) {
    require_valid_element(gamma);
    require_same_group(gamma, delta);
    if (gamma.is_zero()) {
        throw ParameterError("eigenvalue multiset is defined for a nontrivial group element");
    }
    const int r = gamma.r;
    const int g = gamma.genus();
    const int p = weil_pairing(gamma, delta);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>((r - 1) * (g - 1)));
    for (int k = 1; k < r; ++k) {
        for (int copy = 0; copy < g - 1; ++copy) {
            out.push_back(mod_norm(static_cast<long long>(k) * p, r));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mhodge
