#include "mirrorhodge/sl_variant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mirrorhodge/cyclotomic.hpp"
#include "mirrorhodge/pgl_variant.hpp"

namespace mhodge {

namespace {

void require_rank_genus_degree(int r, int g, long long d) {
    require_prime(r, "rank");
    if (g < 1) throw ParameterError("genus must be >= 1");
    require_coprime(d, r, "degree d");
}

long long weighted_degree_sum(const MTuple& m) {
    long long sum = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        sum += static_cast<long long>(i + 1) * m[i];
    }
    return sum;
}

std::string tuple_to_string(const MTuple& m) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ",";
        os << m[i];
    }
    os << ")";
    return os.str();
}

} // namespace

BiPoly coeff_cm(int g, int m) {
    if (g < 1) throw ParameterError("genus must be >= 1");
    if (m < 0) throw ParameterError("coefficient index must be >= 0");
    BiPoly out;
    if (m > 2 * (g - 1)) return out;
    const long long n = g - 1;
    for (int a = std::max(0, m - static_cast<int>(n)); a <= std::min(m, static_cast<int>(n)); ++a) {
        const int b = m - a;
        Int c = binomial(n, a) * binomial(n, b);
        if (m % 2 != 0) c = -c;
        out.add_term(a, b, c);
    }
    return out;
}

std::vector<MTuple> enumerate_mtuples(int r, int g, long long d, CongruenceSign sign) {
    require_rank_genus_degree(r, g, d);
    const int hi = 2 * g - 2;
    const int dn = mod_norm(d, r);
    const int target = sign == CongruenceSign::kMinusD ? (r - dn) % r : dn;

    std::vector<MTuple> out;
    MTuple m(static_cast<std::size_t>(r - 1), 0);
    for (;;) {
        if (mod_norm(weighted_degree_sum(m), r) == target) out.push_back(m);
        int i = static_cast<int>(m.size()) - 1;
        while (i >= 0) {
            if (++m[static_cast<std::size_t>(i)] <= hi) break;
            m[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

DegreeVector reconstruct_degrees(int r, int g, long long d, const MTuple& m) {
    require_rank_genus_degree(r, g, d);
    if (m.size() != static_cast<std::size_t>(r - 1)) {
        throw ParameterError("m-tuple must have r-1 entries");
    }
    for (int mi : m) {
        if (mi < 0) throw ParameterError("m-tuple entries must be >= 0");
    }
    const long long s = weighted_degree_sum(m);
    if (mod_norm(s + d, r) != 0) {
        throw ParameterError("m-tuple " + tuple_to_string(m) +
                             " violates the degree congruence; l_r is not integral");
    }
    DegreeVector l(static_cast<std::size_t>(r), 0);
    l[static_cast<std::size_t>(r - 1)] =
        (s + d) / r - static_cast<long long>(g - 1) * (r - 1);
    for (int i = r - 2; i >= 0; --i) {
        l[static_cast<std::size_t>(i)] =
            l[static_cast<std::size_t>(i + 1)] - m[static_cast<std::size_t>(i)] + (2LL * g - 2);
    }
    const long long total = std::accumulate(l.begin(), l.end(), 0LL);
    if (total != d) {
        throw InternalCheckError("reconstructed degrees sum to " + std::to_string(total) +
                                 " instead of d = " + std::to_string(d));
    }
    return l;
}

StabilityCheck check_stability(int r, long long d, const DegreeVector& l) {
    if (l.size() != static_cast<std::size_t>(r)) {
        throw ParameterError("degree vector must have r entries");
    }
    if (std::accumulate(l.begin(), l.end(), 0LL) != d) {
        throw ParameterError("degree vector does not sum to d");
    }
    long long tail = 0;
    for (int k = r; k >= 2; --k) {
        tail += l[static_cast<std::size_t>(k - 1)];
        // slope condition (l_k + ... + l_r)/(r-k+1) < d/r with denominators cleared
        if (!(static_cast<long long>(r) * tail < d * (r - k + 1))) {
            return StabilityCheck{false, k};
        }
    }
    return StabilityCheck{true, 0};
}

BiPoly sl_variant_enum(int r, int g, long long d, CongruenceSign sign) {
    require_rank_genus_degree(r, g, d);

    std::vector<BiPoly> cm(static_cast<std::size_t>(2 * g - 1));
    for (int m = 0; m <= 2 * g - 2; ++m) cm[static_cast<std::size_t>(m)] = coeff_cm(g, m);

    BiPoly sum;
    for (const MTuple& m : enumerate_mtuples(r, g, d, sign)) {
        // Under the +d reading the reversed tuple is the one carrying the
        // degree data; either way the guard must pass for every tuple.
        MTuple guarded = m;
        if (sign == CongruenceSign::kPlusD) std::reverse(guarded.begin(), guarded.end());
        const DegreeVector l = reconstruct_degrees(r, g, d, guarded);
        const StabilityCheck st = check_stability(r, d, l);
        if (!st.stable) {
            throw InternalCheckError("tuple " + tuple_to_string(m) +
                                     " reconstructs to an unstable degree vector (k = " +
                                     std::to_string(st.failing_k) + ")");
        }
        BiPoly term = BiPoly::monomial(Int(1), 0, 0);
        for (int mi : m) term = term * cm[static_cast<std::size_t>(mi)];
        sum = sum + term;
    }

    const Int count = int_pow(Int(r), static_cast<unsigned>(2 * g)) - 1;
    const int shift = static_cast<int>(gamma_fixed_locus(r, g).ambient_half_dim);
    return sum.scaled(count).shifted(shift, shift);
}

BiPoly sl_variant_filter(int r, int g, long long d) {
    require_rank_genus_degree(r, g, d);
    const BiPoly average =
        rou_filter([&](int j) { return character_term_poly(r, j, g); }, d, r);
    const Int count = int_pow(Int(r), static_cast<unsigned>(2 * g)) - 1;
    const int shift = static_cast<int>(gamma_fixed_locus(r, g).ambient_half_dim);
    return average.scaled(count).shifted(shift, shift);
}

KnownVanishing other_component_variant(const FixedTypeVector& type, int r, int g) {
    require_prime(r, "rank");
    if (g < 1) throw ParameterError("genus must be >= 1");
    if (type.empty()) throw ParameterError("type vector must be nonempty");
    int sum = 0;
    for (int t : type) {
        if (t <= 0) throw ParameterError("type entries must be positive");
        sum += t;
    }
    if (sum != r) {
        throw ParameterError("type entries must sum to the rank " + std::to_string(r));
    }

    std::ostringstream name;
    name << "(";
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (i) name << ",";
        name << type[i];
    }
    name << ")";

    if (type.size() == static_cast<std::size_t>(r)) {
        throw ParameterError("type " + name.str() +
                             " carries the variant contribution; use sl_variant_enum");
    }
    if (type.size() == 1) {
        return KnownVanishing{BiPoly{},
                              "type " + name.str() +
                                  ": the component is the moduli space of stable bundles with "
                                  "fixed determinant, whose cohomology is torsion-invariant"};
    }
    if (r == 3) {
        // remaining rank-3 types are (1,2) and (2,1)
        return KnownVanishing{BiPoly{},
                              "type " + name.str() +
                                  ": rank-3 pair-moduli component; the torsion group acts "
                                  "trivially on its cohomology"};
    }
    throw OpenConjectureError("variant contribution of type " + name.str() + " at rank " +
                              std::to_string(r) +
                              " is conjectured to vanish but is not established");
}

} // namespace mhodge
