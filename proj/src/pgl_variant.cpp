#include "mirrorhodge/pgl_variant.hpp"

#include <numeric>
#include <sstream>

#include "mirrorhodge/torsion.hpp"

namespace mhodge {

namespace {

void require_rank_genus(int r, int g) {
    require_prime(r, "rank");
    if (g < 1) throw ParameterError("genus must be >= 1");
}

} // namespace

GammaFixedLocus gamma_fixed_locus(int r, int g) {
    require_rank_genus(r, g);
    GammaFixedLocus locus;
    locus.r = r;
    locus.g = g;
    locus.fixed_dim = 2LL * (r - 1) * (g - 1);
    locus.ambient_half_dim = (static_cast<long long>(r) * r - 1) * (g - 1);
    locus.fermionic_shift = static_cast<long long>(r) * (r - 1) * (g - 1);
    if (locus.ambient_half_dim != locus.fixed_dim / 2 + locus.fermionic_shift) {
        throw InternalCheckError("fixed-locus dimension bookkeeping is inconsistent");
    }
    return locus;
}

long long fermionic_shift(int r, int g) {
    require_rank_genus(r, g);
    return static_cast<long long>(r) * (r - 1) * (g - 1);
}

long long shift_from_weights(const std::vector<UnitWeight>& weights) {
    Int num = 0;
    Int den = 1;
    for (const UnitWeight& w : weights) {
        if (w.den <= 0 || w.num < 0 || w.num >= w.den) {
            throw ParameterError("rotation weight must satisfy 0 <= num/den < 1 with den > 0");
        }
        num = num * w.den + Int(w.num) * den;
        den *= w.den;
        Int common = boost::multiprecision::gcd(num, den);
        if (common > 1) {
            num /= common;
            den /= common;
        }
    }
    if (den != 1) {
        std::ostringstream os;
        os << "weight sum " << num << "/" << den << " is not an integer; weight set is inconsistent";
        throw ParameterError(os.str());
    }
    return num.convert_to<long long>();
}

BiPoly pgl_variant_closed(int r, int g, long long e) {
    require_rank_genus(r, g);
    require_coprime(e, r, "degree e");

    const unsigned outer = static_cast<unsigned>((r - 1) * (g - 1));
    const BiPoly one_minus_u = bipoly_from_terms({{0, 0, 1}, {1, 0, -1}});
    const BiPoly one_minus_v = bipoly_from_terms({{0, 0, 1}, {0, 1, -1}});
    const BiPoly lead = pow(one_minus_u * one_minus_v, outer);
    const BiPoly tail = pow(geometric_sum_u(r) * geometric_sum_v(r), static_cast<unsigned>(g - 1));

    const Int count = int_pow(Int(r), static_cast<unsigned>(2 * g)) - 1;
    const int shift = static_cast<int>(gamma_fixed_locus(r, g).ambient_half_dim);
    const BiPoly scaled = (lead - tail).scaled(count).shifted(shift, shift);
    return exact_div(scaled, Int(r));
}

BiPoly pgl_variant_raw(int r, int g, long long e) {
    require_rank_genus(r, g);
    require_coprime(e, r, "degree e");

    const TorsionGroup group(r, g);
    const BiPoly average = character_average(group.basis(0), e, AverageMode::kReduced);
    const Int count = group.order() - 1;
    const int shift = static_cast<int>(gamma_fixed_locus(r, g).ambient_half_dim);
    return average.scaled(count).shifted(shift, shift);
}

StringyHigherTerms stringy_higher_terms(int r, int g, long long e) {
    require_rank_genus(r, g);
    require_coprime(e, r, "degree e");

    const TorsionGroup group(r, g);
    const BiPoly average = character_average(group.basis(0), e, AverageMode::kReduced);
    const int shift = static_cast<int>(gamma_fixed_locus(r, g).ambient_half_dim);

    StringyHigherTerms out;
    out.per_gamma = average.shifted(shift, shift);
    out.count = group.order() - 1;
    out.total = out.per_gamma.scaled(out.count);
    if (out.total != pgl_variant_closed(r, g, e)) {
        throw InternalCheckError("stringy higher terms disagree with the closed form");
    }
    return out;
}

} // namespace mhodge
