#pragma once

#include <initializer_list>
#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "mirrorhodge/bigint.hpp"
#include "mirrorhodge/errors.hpp"

namespace mhodge {

// Exponent pair (p, q) of a u^p v^q term. std::map over these keys yields the
// canonical lexicographic term order used for serialization and comparison.
using ExpPair = std::pair<int, int>;

inline bool coeff_is_zero(const Int& c) { return c.is_zero(); }

// Sparse bivariate polynomial in (u, v) over an exact coefficient ring C.
// Invariants: no stored coefficient is zero (the zero polynomial is the empty
// map), exponents are nonnegative and unique. Values are immutable in use:
// all arithmetic returns fresh objects.
template <typename C>
class SparseBivariate {
public:
    using TermMap = std::map<ExpPair, C>;

    SparseBivariate() = default;

    static SparseBivariate monomial(C c, int p, int q) {
        SparseBivariate out;
        out.add_term(p, q, std::move(c));
        return out;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(int p, int q, C c) {
        if (p < 0 || q < 0) {
            throw InternalCheckError("negative exponent (" + std::to_string(p) + "," +
                                     std::to_string(q) + ") in bivariate term");
        }
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(ExpPair{p, q});
        if (it == terms_.end()) {
            terms_.emplace(ExpPair{p, q}, std::move(c));
            return;
        }
        it->second = it->second + c;
        if (coeff_is_zero(it->second)) terms_.erase(it);
    }

    friend SparseBivariate operator+(const SparseBivariate& a, const SparseBivariate& b) {
        SparseBivariate out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e.first, e.second, c);
        return out;
    }

    friend SparseBivariate operator-(const SparseBivariate& a, const SparseBivariate& b) {
        SparseBivariate out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e.first, e.second, -c);
        return out;
    }

    SparseBivariate operator-() const {
        SparseBivariate out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend SparseBivariate operator*(const SparseBivariate& a, const SparseBivariate& b) {
        SparseBivariate out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const SparseBivariate& a, const SparseBivariate& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparseBivariate& a, const SparseBivariate& b) {
        return !(a == b);
    }

    // Multiply every term by the scalar c.
    SparseBivariate scaled(const C& c) const {
        SparseBivariate out;
        for (const auto& [e, t] : terms_) out.add_term(e.first, e.second, t * c);
        return out;
    }

    // Multiply by the monomial u^dp v^dq.
    SparseBivariate shifted(int dp, int dq) const {
        SparseBivariate out;
        for (const auto& [e, c] : terms_) out.add_term(e.first + dp, e.second + dq, c);
        return out;
    }

    // Substitute u <-> v.
    SparseBivariate swapped_uv() const {
        SparseBivariate out;
        for (const auto& [e, c] : terms_) out.add_term(e.second, e.first, c);
        return out;
    }

private:
    TermMap terms_;
};

// The universal carrier of E-polynomials: integer coefficients, variables u, v.
using BiPoly = SparseBivariate<Int>;

namespace detail {
template <typename P>
P pow_with_one(const P& base, unsigned n, P one) {
    P result = std::move(one);
    P sq = base;
    while (n != 0) {
        if (n & 1u) result = result * sq;
        n >>= 1u;
        if (n != 0) sq = sq * sq;
    }
    return result;
}
} // namespace detail

inline BiPoly pow(const BiPoly& base, unsigned n) {
    return detail::pow_with_one(base, n, BiPoly::monomial(Int(1), 0, 0));
}

inline Int coeff(const BiPoly& a, int p, int q) {
    auto it = a.terms().find(ExpPair{p, q});
    return it == a.terms().end() ? Int(0) : it->second;
}

inline BiPoly bipoly_from_terms(std::initializer_list<std::tuple<int, int, long long>> ts) {
    BiPoly out;
    for (const auto& [p, q, c] : ts) out.add_term(p, q, Int(c));
    return out;
}

// Exact division of every coefficient by n; a coefficient that n does not
// divide is a bug in the caller's pipeline, reported with the offending term.
inline BiPoly exact_div(const BiPoly& a, const Int& n) {
    if (n.is_zero()) throw ParameterError("exact_div by zero");
    BiPoly out;
    for (const auto& [e, c] : a.terms()) {
        Int q, rem;
        boost::multiprecision::divide_qr(c, n, q, rem);
        if (!rem.is_zero()) {
            std::ostringstream os;
            os << "exact_div: coefficient " << c << " of u^" << e.first << " v^" << e.second
               << " is not divisible by " << n;
            throw InternalCheckError(os.str());
        }
        out.add_term(e.first, e.second, q);
    }
    return out;
}

inline bool divisible_by(const BiPoly& a, const Int& n) {
    if (n.is_zero()) return a.is_zero();
    for (const auto& [e, c] : a.terms()) {
        (void)e;
        if (c % n != 0) return false;
    }
    return true;
}

inline bool uv_symmetric(const BiPoly& a) { return a == a.swapped_uv(); }

// 1 + x + ... + x^{r-1} in the chosen variable; the polynomial form of
// (1 - x^r)/(1 - x), used so the pipeline never divides polynomials.
inline BiPoly geometric_sum_u(int r) {
    BiPoly out;
    for (int k = 0; k < r; ++k) out.add_term(k, 0, Int(1));
    return out;
}

inline BiPoly geometric_sum_v(int r) {
    BiPoly out;
    for (int k = 0; k < r; ++k) out.add_term(0, k, Int(1));
    return out;
}

} // namespace mhodge
