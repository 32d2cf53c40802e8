#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mirrorhodge/cyclotomic.hpp"

using namespace mhodge;

namespace {

CycElem random_elem(int r, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    CycElem acc(r);
    for (int k = 0; k < r - 1; ++k) {
        acc = acc + CycElem::integer(r, coeff(rng)) * CycElem::zeta_pow(r, k);
    }
    return acc;
}

} // namespace

TEST_CASE("zeta times zeta^{r-2} reduces to -(1 + zeta + ... + zeta^{r-2})") {
    for (int r : {3, 5, 7}) {
        const CycElem prod = CycElem::zeta_pow(r, 1) * CycElem::zeta_pow(r, r - 2);
        CycElem expected(r);
        for (int k = 0; k < r - 1; ++k) expected = expected - CycElem::zeta_pow(r, k);
        CHECK(prod == expected);
        CHECK(prod == CycElem::zeta_pow(r, r - 1));
    }
}

TEST_CASE("one is the multiplicative identity") {
    std::mt19937 rng(424242);
    for (int r : {2, 3, 5}) {
        for (int i = 0; i < 20; ++i) {
            const CycElem a = random_elem(r, rng);
            CHECK(a * CycElem::one(r) == a);
            CHECK(CycElem::one(r) * a == a);
        }
    }
}

TEST_CASE("r=3 hand reduction: (1 + zeta)^2 = zeta") {
    const CycElem a = CycElem::one(3) + CycElem::zeta_pow(3, 1);
    CHECK(a * a == CycElem::zeta_pow(3, 1));
}

TEST_CASE("mismatched ring orders are rejected") {
    const CycElem a = CycElem::one(3);
    const CycElem b = CycElem::one(5);
    CHECK_THROWS_AS(a * b, ParameterError);
    CHECK_THROWS_AS(a + b, ParameterError);
}

TEST_CASE("power basis representation is unique and rationality is visible") {
    // 1 + zeta + ... + zeta^{r-1} = 0 collapses to the zero vector
    for (int r : {2, 3, 5, 7}) {
        CycElem sum(r);
        for (int k = 0; k < r; ++k) sum = sum + CycElem::zeta_pow(r, k);
        CHECK(sum.is_zero());
        CHECK(sum.is_rational());
        CHECK(sum.rational_part() == 0);
    }
    CHECK(!CycElem::zeta_pow(5, 2).is_rational());
    CHECK_THROWS_AS(CycElem::zeta_pow(5, 2).rational_part(), InternalCheckError);
    // r = 2 has zeta = -1: everything is rational
    CHECK(CycElem::zeta_pow(2, 1).is_rational());
    CHECK(CycElem::zeta_pow(2, 1).rational_part() == -1);
}

TEST_CASE("product over Galois conjugates is a rational integer") {
    std::mt19937 rng(777);
    for (int r : {3, 5, 7}) {
        for (int i = 0; i < 25; ++i) {
            const CycElem a = random_elem(r, rng);
            CycElem norm = a;
            for (int k = 2; k < r; ++k) norm = norm * a.galois_conjugate(k);
            CHECK(norm.is_rational());
        }
    }
}

TEST_CASE("galois conjugation is multiplicative") {
    std::mt19937 rng(31415);
    for (int r : {3, 5}) {
        for (int i = 0; i < 20; ++i) {
            const CycElem a = random_elem(r, rng);
            const CycElem b = random_elem(r, rng);
            for (int k = 1; k < r; ++k) {
                CHECK((a * b).galois_conjugate(k) == a.galois_conjugate(k) * b.galois_conjugate(k));
            }
        }
    }
    CHECK_THROWS_AS(CycElem::one(5).galois_conjugate(5), ParameterError);
}

TEST_CASE("rou_filter of the constant 1 is 1") {
    const auto one = [](int) { return CycBiPoly::monomial(CycElem::one(3), 0, 0); };
    CHECK(rou_filter(one, 0, 3) == BiPoly::monomial(Int(1), 0, 0));
}

TEST_CASE("rou_filter of zeta^j vanishes by orthogonality") {
    const auto zeta_j = [](int j) { return CycBiPoly::monomial(CycElem::zeta_pow(3, j), 0, 0); };
    CHECK(rou_filter(zeta_j, 0, 3) == BiPoly{});
}

TEST_CASE("rou_filter r=2 twisted example: -(u+v)") {
    // evaluate(j) = (1 - zeta^j u)(1 - zeta^j v), twist 1:
    //   (1/2)[(1-u)(1-v) - (1+u)(1+v)] = -(u + v)
    const auto evaluate = [](int j) {
        const CycElem w = CycElem::zeta_pow(2, j);
        CycBiPoly fu;
        fu.add_term(0, 0, CycElem::one(2));
        fu.add_term(1, 0, -w);
        CycBiPoly fv;
        fv.add_term(0, 0, CycElem::one(2));
        fv.add_term(0, 1, -w);
        return fu * fv;
    };
    CHECK(rou_filter(evaluate, 1, 2) == bipoly_from_terms({{1, 0, -1}, {0, 1, -1}}));
}

TEST_CASE("rou_filter orthogonality: zeta^{jk} filtered at twist t picks out k = t") {
    for (int r : {2, 3, 5}) {
        for (int k = 0; k < r; ++k) {
            const auto evaluate = [&](int j) {
                return CycBiPoly::monomial(CycElem::zeta_pow(r, static_cast<long long>(j) * k), 0, 0);
            };
            for (int t = 0; t < r; ++t) {
                const BiPoly got = rou_filter(evaluate, t, r);
                if (k == t) {
                    CHECK(got == BiPoly::monomial(Int(1), 0, 0));
                } else {
                    CHECK(got == BiPoly{});
                }
            }
            // twists shifted by r behave identically
            CHECK(rou_filter(evaluate, k + r, r) == BiPoly::monomial(Int(1), 0, 0));
            CHECK(rou_filter(evaluate, k - r, r) == BiPoly::monomial(Int(1), 0, 0));
        }
    }
}

TEST_CASE("rou_filter flags non-divisible and non-rational sums as bugs") {
    // sum_j j over j in {0, 1} is 1: rational but not divisible by 2
    const auto count = [](int j) { return CycBiPoly::monomial(CycElem::integer(2, j), 0, 0); };
    CHECK_THROWS_AS(rou_filter(count, 0, 2), InternalCheckError);
    // constant zeta summed three times is 3*zeta: not rational
    const auto constant_zeta = [](int) { return CycBiPoly::monomial(CycElem::zeta_pow(3, 1), 0, 0); };
    CHECK_THROWS_AS(rou_filter(constant_zeta, 0, 3), InternalCheckError);
}

TEST_CASE("rou_filter rejects composite order") {
    const auto one = [](int) { return CycBiPoly::monomial(CycElem::one(3), 0, 0); };
    CHECK_THROWS_AS(rou_filter(one, 0, 4), ParameterError);
}

TEST_CASE("character_term_poly at j=0 is ((1-u)(1-v))^{(r-1)(g-1)} rationally") {
    for (int r : {2, 3, 5}) {
        for (int g : {1, 2, 3}) {
            const CycBiPoly t = character_term_poly(r, 0, g);
            BiPoly rational;
            for (const auto& [e, c] : t.terms()) {
                REQUIRE(c.is_rational());
                rational.add_term(e.first, e.second, c.rational_part());
            }
            const BiPoly expected =
                pow(bipoly_from_terms({{0, 0, 1}, {1, 0, -1}}) * bipoly_from_terms({{0, 0, 1}, {0, 1, -1}}),
                    static_cast<unsigned>((r - 1) * (g - 1)));
            CHECK(rational == expected);
        }
    }
}

TEST_CASE("character_term_poly at j != 0 collapses to the geometric product") {
    // prod_{i=1}^{r-1} (1 - zeta^{ij} x) = 1 + x + ... + x^{r-1} for j coprime to r
    for (int r : {2, 3, 5, 7}) {
        for (int j = 1; j < r; ++j) {
            const CycBiPoly t = character_term_poly(r, j, 2);
            BiPoly rational;
            for (const auto& [e, c] : t.terms()) {
                REQUIRE(c.is_rational());
                rational.add_term(e.first, e.second, c.rational_part());
            }
            CHECK(rational == geometric_sum_u(r) * geometric_sum_v(r));
        }
    }
}
