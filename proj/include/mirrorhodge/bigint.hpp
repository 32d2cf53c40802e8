#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <string>

#include "mirrorhodge/errors.hpp"

namespace mhodge {

// Exact signed integers of unbounded size. Every coefficient in the pipeline
// is one of these; rationals are never stored, divisions are exact and checked.
using Int = boost::multiprecision::cpp_int;

inline Int int_pow(const Int& base, unsigned n) {
    Int result = 1;
    Int sq = base;
    while (n != 0) {
        if (n & 1u) result *= sq;
        n >>= 1u;
        if (n != 0) sq *= sq;
    }
    return result;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

// Normalize x into [0, r).
inline int mod_norm(long long x, int r) {
    long long m = x % r;
    if (m < 0) m += r;
    return static_cast<int>(m);
}

// Inverse of a mod r for r prime and a not divisible by r.
inline int mod_inverse(long long a, int r) {
    int an = mod_norm(a, r);
    if (an == 0) throw ParameterError("no inverse: value is divisible by the prime " + std::to_string(r));
    for (int q = 1; q < r; ++q) {
        if ((q * an) % r == 1) return q;
    }
    throw ParameterError("no inverse mod " + std::to_string(r) + " (modulus not prime?)");
}

inline void require_prime(int r, const std::string& role) {
    if (!is_prime(r)) {
        throw ParameterError(role + " must be prime, got " + std::to_string(r));
    }
}

inline void require_coprime(long long x, int r, const std::string& role) {
    if (std::gcd(x, static_cast<long long>(r)) != 1) {
        throw ParameterError(role + " = " + std::to_string(x) + " must be coprime to " + std::to_string(r));
    }
}

} // namespace mhodge
