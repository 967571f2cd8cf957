#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "dsrg/cyclic_poly.hpp"

using dsrg::BigInt;
using dsrg::CyclicPoly;

namespace {

CyclicPoly from_ints(int m, std::vector<long long> cs) {
    CyclicPoly p(m);
    for (int i = 0; i < m; ++i) p[i] = BigInt(cs[static_cast<size_t>(i)]);
    return p;
}

// Oracle: plain schoolbook product of the coefficient vectors (degree 2m-2),
// then exponents folded modulo m. Independent of the CyclicPoly multiply.
CyclicPoly schoolbook_mul(const CyclicPoly& a, const CyclicPoly& b) {
    const int m = a.modulus();
    std::vector<BigInt> plain(static_cast<size_t>(2 * m - 1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) plain[i + j] += a[i] * b[j];
    CyclicPoly out(m);
    for (int d = 0; d < 2 * m - 1; ++d) out[d % m] += plain[d];
    return out;
}

// Lift to an ordinary integer polynomial and multiply by (1 - x) without any
// exponent reduction.
std::vector<BigInt> times_one_minus_x(const CyclicPoly& p) {
    std::vector<BigInt> out(static_cast<size_t>(p.modulus()) + 1);
    for (int i = 0; i < p.modulus(); ++i) {
        out[i] += p[i];
        out[i + 1] -= p[i];
    }
    return out;
}

CyclicPoly random_poly(int m, std::mt19937& rng) {
    std::uniform_int_distribution<long long> dist(-5, 5);
    CyclicPoly p(m);
    for (int i = 0; i < m; ++i) p[i] = BigInt(dist(rng));
    return p;
}

} // namespace

TEST_CASE("addition") {
    CyclicPoly a = from_ints(4, {1, 1, 0, 0});   // 1 + x
    CyclicPoly b = from_ints(4, {0, 1, 1, 0});   // x + x^2
    CHECK(a + b == from_ints(4, {1, 2, 1, 0}));
    CHECK(a + CyclicPoly(4) == a);
    CyclicPoly q = dsrg::make_q(1);
    CHECK((q + (BigInt(-1) * q)).is_zero());
    CHECK_THROWS_AS(from_ints(4, {0, 0, 0, 0}) + from_ints(5, {0, 0, 0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("multiplication reduces exponents") {
    CyclicPoly x3 = CyclicPoly::monomial(4, 3);
    CyclicPoly b = from_ints(4, {0, 1, 1, 0});   // x + x^2
    CHECK(x3 * b == from_ints(4, {1, 1, 0, 0})); // x^4 -> 1, x^5 -> x

    // q^2 == (2n+3) q and p*q == (n+1) q at n = 1
    CyclicPoly q1 = dsrg::make_q(1);
    CHECK(q1 * q1 == q1 * BigInt(5));
    CHECK(dsrg::make_p(1) * q1 == q1 * BigInt(2));
    CHECK_THROWS_AS(q1 * dsrg::make_q(2), std::invalid_argument);
}

TEST_CASE("rotation") {
    CyclicPoly q = dsrg::make_q(2);   // m = 7
    for (long long s = 0; s < 21; ++s) CHECK(q.rotated(s) == q);

    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        CyclicPoly p = random_poly(7, rng);
        CHECK(p.rotated(0) == p);
        long long a = rng() % 20, b = rng() % 20;
        CHECK(p.rotated(a).rotated(b) == p.rotated(a + b));
        // rotation is multiplication by a monomial
        CHECK(p.rotated(a) == p * CyclicPoly::monomial(7, a));
    }
    CHECK_THROWS_AS(q.rotated(-1), std::invalid_argument);
}

TEST_CASE("scalar multiplication and coefficient sums") {
    CyclicPoly a = from_ints(4, {1, 1, 0, 0});
    CHECK(BigInt(3) * a == from_ints(4, {3, 3, 0, 0}));
    CHECK((BigInt(0) * a).is_zero());

    CHECK(dsrg::make_p(3).coeff_sum() == BigInt(4));
    CHECK(dsrg::make_q(3).coeff_sum() == BigInt(9));
    CHECK(CyclicPoly(6).coeff_sum() == BigInt(0));

    // (2n+4) q at n = 2 has every coefficient equal to 8
    CyclicPoly rhs = BigInt(8) * dsrg::make_q(2);
    for (int e = 0; e < 7; ++e) CHECK(rhs[e] == BigInt(8));
}

TEST_CASE("named polynomial constructors") {
    CHECK(dsrg::make_q(1) == from_ints(5, {1, 1, 1, 1, 1}));

    // r at n=2: exponents {0,2,3,4,6} over m=7
    CHECK(dsrg::make_r(2) == from_ints(7, {1, 0, 1, 1, 1, 0, 1}));

    // s must agree with direct subtraction from q per its definition
    for (int n = 2; n <= 10; ++n) {
        const int m = 2 * n + 3;
        CyclicPoly expected = dsrg::make_q(n);
        for (int e : {0, 2, n + 2, n + 3})
            expected -= CyclicPoly::monomial(m, e);
        CHECK(dsrg::make_s(n) == expected);
        CHECK(dsrg::make_s(n).is_binary());

        CyclicPoly expected_r = dsrg::make_q(n);
        expected_r -= CyclicPoly::monomial(m, n - 1);
        expected_r -= CyclicPoly::monomial(m, 2 * n + 1);
        CHECK(dsrg::make_r(n) == expected_r);
        CHECK(dsrg::make_r(n).is_binary());
    }
    CHECK(dsrg::make_s(2).constant_term() == BigInt(0));

    CHECK_THROWS_AS(dsrg::make_p(0), std::invalid_argument);
    CHECK_THROWS_AS(dsrg::make_q(0), std::invalid_argument);
    CHECK_THROWS_AS(dsrg::make_r(1), std::invalid_argument);
    CHECK_THROWS_AS(dsrg::make_s(1), std::invalid_argument);
}

TEST_CASE("binarity predicate") {
    CHECK(dsrg::make_q(2).is_binary());
    CHECK_FALSE((BigInt(2) * dsrg::make_q(2)).is_binary());
    CHECK_FALSE(from_ints(3, {0, -1, 0}).is_binary());
    CHECK(CyclicPoly(3).is_binary());
}

TEST_CASE("ring laws on random elements") {
    std::mt19937 rng(23);
    for (int m : {1, 2, 5, 7}) {
        for (int rep = 0; rep < 50; ++rep) {
            CyclicPoly a = random_poly(m, rng);
            CyclicPoly b = random_poly(m, rng);
            CyclicPoly c = random_poly(m, rng);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("rotation invariance and product identities for all n up to 10") {
    for (int n = 1; n <= 10; ++n) {
        const int m = 2 * n + 3;
        CyclicPoly p = dsrg::make_p(n);
        CyclicPoly q = dsrg::make_q(n);
        for (int s = 0; s < 3 * m; ++s) CHECK(q.rotated(s) == q);
        CHECK(p * q == BigInt(n + 1) * q);
        CHECK(q * q == BigInt(2 * n + 3) * q);

        // In plain polynomial arithmetic, (1-x) p == 1 - x^(n+1) and
        // (1-x) q == 1 - x^(2n+3).
        std::vector<BigInt> lp = times_one_minus_x(p);
        for (int d = 0; d <= m; ++d) {
            BigInt expect = d == 0 ? BigInt(1) : (d == n + 1 ? BigInt(-1) : BigInt(0));
            CHECK(lp[d] == expect);
        }
        std::vector<BigInt> lq = times_one_minus_x(q);
        for (int d = 0; d <= m; ++d) {
            BigInt expect = d == 0 ? BigInt(1) : (d == m ? BigInt(-1) : BigInt(0));
            CHECK(lq[d] == expect);
        }
    }
}

TEST_CASE("multiplication matches the schoolbook convolution oracle") {
    std::mt19937 rng(31);
    for (int m : {5, 7, 9, 11})
        for (int rep = 0; rep < 200; ++rep) {
            CyclicPoly a = random_poly(m, rng);
            CyclicPoly b = random_poly(m, rng);
            CHECK(a * b == schoolbook_mul(a, b));
        }
}

TEST_CASE("textual form round trips") {
    CyclicPoly p = from_ints(4, {1, -2, 0, 7});
    CHECK(p.to_string() == "4:1,-2,0,7");
    CHECK(CyclicPoly::parse(p.to_string()) == p);

    std::mt19937 rng(41);
    for (int rep = 0; rep < 30; ++rep) {
        int m = 1 + static_cast<int>(rng() % 12);
        CyclicPoly r = random_poly(m, rng);
        CHECK(CyclicPoly::parse(r.to_string()) == r);
    }

    CHECK_THROWS_AS(CyclicPoly::parse("4:1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(CyclicPoly::parse("4:1,2,3,4,5"), std::invalid_argument);
    CHECK_THROWS_AS(CyclicPoly::parse("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(CyclicPoly::parse("0:"), std::invalid_argument);
}

TEST_CASE("pretty printing") {
    CHECK(CyclicPoly(3).pretty() == "0");
    CHECK(CyclicPoly::monomial(5, 3).pretty() == "x^3");
    CHECK(from_ints(4, {0, 1, 1, 0}).pretty() == "x+x^2");
    CHECK(from_ints(4, {1, 2, 0, -1}).pretty() == "1+2x-x^3");
}
