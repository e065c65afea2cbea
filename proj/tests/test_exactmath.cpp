#include "quartic/fp.hpp"
#include "quartic/matrix.hpp"
#include "quartic/poly.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

using namespace quartic;

namespace {

// Independent resultant oracle: Sylvester matrix expanded by rational
// Gaussian elimination (no Bareiss, no shared code path).
BigRat sylvester_det_oracle(const IntPoly& f, const IntPoly& g) {
    int n = f.degree(), m = g.degree();
    size_t dim = static_cast<size_t>(n + m);
    std::vector<std::vector<BigRat>> s(dim, std::vector<BigRat>(dim, BigRat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[size_t(i)][size_t(i + j)] = BigRat(f.coeff(n - j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[size_t(m + i)][size_t(i + j)] = BigRat(g.coeff(m - j));
    BigRat det(1);
    for (size_t k = 0; k < dim; ++k) {
        size_t piv = k;
        while (piv < dim && s[piv][k].is_zero()) ++piv;
        if (piv == dim) return BigRat(0);
        if (piv != k) {
            std::swap(s[piv], s[k]);
            det = -det;
        }
        det *= s[k][k];
        BigRat d = s[k][k].inv();
        for (size_t i = k + 1; i < dim; ++i) {
            if (s[i][k].is_zero()) continue;
            BigRat fac = s[i][k] * d;
            for (size_t j = k; j < dim; ++j) s[i][j] -= fac * s[k][j];
        }
    }
    return det;
}

BigInt disc_oracle(const IntPoly& f) {
    BigRat r = sylvester_det_oracle(f, f.derivative());
    int n = f.degree();
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    EXPECT_TRUE(r.is_integer());
    return r.num();
}

IntPoly random_poly(SplitMix64& rng, int deg, long coef_range) {
    std::vector<BigInt> c;
    for (int i = 0; i < deg; ++i)
        c.emplace_back(static_cast<long>(rng.below(2 * static_cast<std::uint64_t>(coef_range) + 1)) - coef_range);
    c.emplace_back(1);
    return IntPoly(std::move(c));
}

}  // namespace

TEST(BigInt, Basics) {
    BigInt a("123456789012345678901234567890");
    BigInt b = a * a;
    EXPECT_EQ(b.str(), "15241578753238836750495351562536198787501905199875019052100");
    EXPECT_EQ(BigInt::gcd(BigInt(48), BigInt(-36)), BigInt(12));
    EXPECT_EQ(BigInt(17).fdiv_r(BigInt(5)), BigInt(2));
    EXPECT_EQ(BigInt(-17).fdiv_r(BigInt(5)), BigInt(3));
    EXPECT_EQ(BigInt(99).isqrt(), BigInt(9));
    EXPECT_TRUE(BigInt(144).is_square());
    EXPECT_FALSE(BigInt(145).is_square());
    BigInt s, t;
    BigInt g = BigInt::gcdext(BigInt(240), BigInt(46), s, t);
    EXPECT_EQ(g, BigInt(2));
    EXPECT_EQ(s * BigInt(240) + t * BigInt(46), g);
}

TEST(BigRat, Canonical) {
    BigRat q(BigInt(6), BigInt(-4));
    EXPECT_EQ(q.num(), BigInt(-3));
    EXPECT_EQ(q.den(), BigInt(2));
    EXPECT_EQ(BigInt::gcd(q.num(), q.den()), BigInt(1));
    EXPECT_TRUE(q.den().sign() > 0);
    EXPECT_EQ((BigRat(1, 3) + BigRat(1, 6)), BigRat(1, 2));
    EXPECT_EQ(BigRat(7, 2).floor(), BigInt(3));
    EXPECT_EQ(BigRat(-7, 2).floor(), BigInt(-4));
    EXPECT_EQ(BigRat(5, 2).round(), BigInt(3));
}

TEST(PolyDiscriminant, SpecExamples) {
    // x^2 - 5 -> 20
    EXPECT_EQ(poly_discriminant(IntPoly({-5, 0, 1})), BigInt(20));
    // x^4 + x + 1 -> 229, frozen from the Sylvester oracle
    IntPoly f({1, 1, 0, 0, 1});
    EXPECT_EQ(disc_oracle(f), BigInt(229));
    EXPECT_EQ(poly_discriminant(f), BigInt(229));
    // x^4 + 1 -> 256
    IntPoly g({1, 0, 0, 0, 1});
    EXPECT_EQ(disc_oracle(g), BigInt(256));
    EXPECT_EQ(poly_discriminant(g), BigInt(256));
}

TEST(PolyDiscriminant, RejectsNonMonic) {
    EXPECT_THROW(poly_discriminant(IntPoly({1, 0, 2})), std::invalid_argument);
}

TEST(PolyDiscriminant, MatchesSylvesterOracleDegreeUpTo4) {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int deg = 1 + static_cast<int>(rng.below(4));
        IntPoly f = random_poly(rng, deg, 8);
        if (gcd_poly(f, f.derivative()).degree() > 0 && deg > 1) continue;
        EXPECT_EQ(poly_discriminant(f), disc_oracle(f)) << f.str_pretty();
    }
}

TEST(Resultant, KnownValues) {
    // Res(x^2 - 1, x - 2) = f evaluated at the root of g: 3 (up to sign convention)
    EXPECT_EQ(resultant(IntPoly({-1, 0, 1}), IntPoly({-2, 1})), BigInt(3));
    EXPECT_EQ(resultant(IntPoly({-2, 1}), IntPoly({-1, 0, 1})), BigInt(3));
}

TEST(FactorModP, SpecExamples) {
    IntPoly f({1, 1, 0, 0, 1});  // x^4 + x + 1
    auto f2 = factor_fp(f.reduce_mod(2));
    ASSERT_EQ(f2.size(), 1u);
    EXPECT_EQ(f2[0].second, 1);
    EXPECT_EQ(f2[0].first.degree(), 4);

    auto f3 = factor_fp(f.reduce_mod(3));
    ASSERT_EQ(f3.size(), 2u);
    // (x - 1)(cubic) mod 3: factors sorted by degree
    EXPECT_EQ(f3[0].first.degree(), 1);
    EXPECT_EQ(f3[1].first.degree(), 3);
    EXPECT_EQ(eval(f3[0].first, 1), 0u);

    auto f5 = factor_fp(IntPoly({-5, 0, 1}).reduce_mod(5));
    ASSERT_EQ(f5.size(), 1u);
    EXPECT_EQ(f5[0].first.degree(), 1);  // x
    EXPECT_EQ(f5[0].second, 2);          // multiplicity 2
    EXPECT_EQ(f5[0].first.coeff(0), 0u);
}

TEST(FactorModP, RejectsCompositeModulus) {
    EXPECT_THROW(factor_fp(PolyFp(15, {1, 1})), std::invalid_argument);
}

TEST(FactorModP, AgreesWithExhaustiveOracleSmallP) {
    SplitMix64 rng(3);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
        for (int iter = 0; iter < 60; ++iter) {
            std::vector<std::uint64_t> c;
            int deg = 1 + static_cast<int>(rng.below(4));
            for (int i = 0; i < deg; ++i) c.push_back(rng.below(p));
            c.push_back(1 + rng.below(p - 1 ? p - 1 : 1));
            PolyFp f(p, c);
            if (f.degree() < 1) continue;
            auto a = factor_fp(f, iter);
            auto b = factor_fp_exhaustive(f);
            EXPECT_EQ(a, b) << "p=" << p;
        }
    }
}

TEST(FactorModP, ProductReproducesInput1000Random) {
    SplitMix64 rng(11);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (int iter = 0; iter < 1000; ++iter) {
        std::uint64_t p = primes[rng.below(sizeof(primes) / sizeof(primes[0]))];
        int deg = 1 + static_cast<int>(rng.below(4));
        std::vector<std::uint64_t> c;
        for (int i = 0; i <= deg; ++i) c.push_back(rng.below(p));
        PolyFp f(p, c);
        if (f.degree() < 1) continue;
        auto fac = factor_fp(f, 1234 + static_cast<std::uint64_t>(iter));
        PolyFp prod = PolyFp::one(p);
        for (const auto& [g, m] : fac) {
            EXPECT_TRUE(g.lead() == 1);
            for (int i = 0; i < m; ++i) prod = mul(prod, g);
        }
        // product equals f up to the unit lead(f)
        PolyFp lf(p, {f.lead()});
        EXPECT_EQ(mul(prod, lf), f);
    }
}

namespace {

// Oracle: the row-HNF bases of the index-2 sublattices of Z^2 are exactly
// [[1,0],[0,2]], [[1,1],[0,2]], [[2,0],[0,1]]. Check span containment of the
// input rows to decide which one a given matrix must normalize to.
bool spans_contain(const IntMatrix& h, std::vector<std::vector<long>> vecs) {
    for (const auto& v : vecs) {
        std::vector<BigInt> w;
        for (long x : v) w.emplace_back(x);
        if (!in_row_span_hnf(h, w)) return false;
    }
    return true;
}

}  // namespace

TEST(Hnf, SpecExamples) {
    EXPECT_EQ(hnf(IntMatrix::identity(3)), IntMatrix::identity(3));

    IntMatrix m(2, 2);
    m(0, 0) = BigInt(2);
    m(0, 1) = BigInt(0);
    m(1, 0) = BigInt(1);
    m(1, 1) = BigInt(1);
    IntMatrix h = hnf(m);
    IntMatrix expect(2, 2);
    expect(0, 0) = BigInt(1);
    expect(0, 1) = BigInt(1);
    expect(1, 0) = BigInt(0);
    expect(1, 1) = BigInt(2);
    EXPECT_EQ(h, expect);
    // oracle: determinant-2 HNFs are enumerable; the span must contain the
    // original rows and the HNF rows must lie in the original span
    EXPECT_TRUE(spans_contain(h, {{2, 0}, {1, 1}}));
    EXPECT_EQ(h.det().abs(), BigInt(2));

    IntMatrix z(3, 2);
    EXPECT_EQ(hnf(z), z);
}

TEST(Hnf, IdempotentAndDetPreserving) {
    SplitMix64 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        size_t n = 2 + rng.below(3);
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m(i, j) = BigInt(static_cast<long>(rng.below(21)) - 10);
        IntMatrix h = hnf(m);
        EXPECT_EQ(hnf(h), h);
        EXPECT_EQ(h.det().abs(), m.det().abs());
    }
}

TEST(Hnf, UpperTriangularReduced) {
    SplitMix64 rng(9);
    for (int iter = 0; iter < 50; ++iter) {
        IntMatrix m(4, 4);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) m(i, j) = BigInt(static_cast<long>(rng.below(19)) - 9);
        if (m.det().is_zero()) continue;
        IntMatrix h = hnf(m);
        for (size_t i = 0; i < 4; ++i) {
            EXPECT_GT(h(i, i).sign(), 0);
            for (size_t j = 0; j < i; ++j) EXPECT_TRUE(h(i, j).is_zero());
            for (size_t i2 = 0; i2 < i; ++i2) {
                EXPECT_TRUE(h(i2, i) >= BigInt(0));
                EXPECT_TRUE(h(i2, i) < h(i, i));
            }
        }
    }
}

TEST(CongruencePreimage, SimpleLattice) {
    // {x in Q^2 : (1/2)x0 in Z, (1/3)(x0 + x1) in Z} = {x0 in 2Z, x1 in 3Z - x0}
    RatMatrix a{{BigRat(1, 2), BigRat(0)}, {BigRat(1, 3), BigRat(1, 3)}};
    RatLattice l = congruence_preimage(a);
    EXPECT_TRUE(l.contains({BigRat(2), BigRat(1)}));
    EXPECT_TRUE(l.contains({BigRat(0), BigRat(3)}));
    EXPECT_FALSE(l.contains({BigRat(1), BigRat(2)}));
    EXPECT_FALSE(l.contains({BigRat(2), BigRat(2)}));
}

TEST(Cyclotomic, SmallTable) {
    EXPECT_EQ(cyclotomic(1), IntPoly({-1, 1}));
    EXPECT_EQ(cyclotomic(2), IntPoly({1, 1}));
    EXPECT_EQ(cyclotomic(5), IntPoly({1, 1, 1, 1, 1}));
    EXPECT_EQ(cyclotomic(8), IntPoly({1, 0, 0, 0, 1}));
    EXPECT_EQ(cyclotomic(10), IntPoly({1, -1, 1, -1, 1}));
    EXPECT_EQ(cyclotomic(12), IntPoly({1, 0, -1, 0, 1}));
    EXPECT_EQ(euler_phi(60), 16);
}

TEST(IntPoly, ShiftAndSerialization) {
    IntPoly f({1, 1, 0, 0, 1});
    EXPECT_EQ(f.str_coeffs(), "1,1,0,0,1");
    EXPECT_EQ(IntPoly::parse_coeffs("1,1,0,0,1"), f);
    IntPoly g = f.shift(BigInt(1));  // f(x+1)
    EXPECT_EQ(g.eval(BigInt(0)), f.eval(BigInt(1)));
    EXPECT_EQ(g.eval(BigInt(4)), f.eval(BigInt(5)));
}
