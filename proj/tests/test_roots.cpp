#include "quartic/roots.hpp"

#include <gtest/gtest.h>

using namespace quartic;

namespace {

// Plain sign-bisection oracle for a real root of f in [lo, hi].
BigRat bisect_oracle(const IntPoly& f, BigRat lo, BigRat hi, int steps) {
    int slo = f.eval(lo).sign();
    EXPECT_NE(slo, 0);
    EXPECT_NE(f.eval(hi).sign(), 0);
    EXPECT_NE(slo, f.eval(hi).sign());
    for (int i = 0; i < steps; ++i) {
        BigRat m = (lo + hi) * BigRat(1, 2);
        int sm = f.eval(m).sign();
        if (sm == 0) return m;
        if (sm == slo)
            lo = m;
        else
            hi = m;
    }
    return (lo + hi) * BigRat(1, 2);
}

}  // namespace

TEST(IsolateRoots, QuadraticPureImaginary) {
    auto boxes = isolate_roots(IntPoly({1, 0, 1}), BigRat(1, 100));
    ASSERT_EQ(boxes.size(), 2u);
    for (const auto& b : boxes) {
        EXPECT_FALSE(b.is_real);
        EXPECT_TRUE(b.box.re.contains(BigRat(0)));
        EXPECT_TRUE(b.radius() <= BigRat(1, 100));
    }
    EXPECT_TRUE(boxes[0].box.im.is_negative());
    EXPECT_TRUE(boxes[1].box.im.is_positive());
    EXPECT_TRUE(boxes[0].box.im.contains(BigRat(-1)));
    EXPECT_TRUE(boxes[1].box.im.contains(BigRat(1)));
}

TEST(IsolateRoots, QuarticTwoRealTwoComplex) {
    // x^4 - 2: real roots +-2^{1/4} ~ +-1.18920711...
    IntPoly f({-2, 0, 0, 0, 1});
    auto boxes = isolate_roots(f, BigRat(1, 1000000));
    ASSERT_EQ(boxes.size(), 4u);
    int nreal = 0;
    for (const auto& b : boxes) nreal += b.is_real ? 1 : 0;
    EXPECT_EQ(nreal, 2);
    BigRat r = bisect_oracle(f, BigRat(1), BigRat(2), 40);
    EXPECT_TRUE(boxes[3].is_real);
    EXPECT_TRUE(boxes[0].is_real);
    EXPECT_TRUE((boxes[3].center_re() - r).abs() < BigRat(1, 100000));
    EXPECT_TRUE((boxes[0].center_re() + r).abs() < BigRat(1, 100000));
    // the complex pair sits on the imaginary axis for this biquadratic
    EXPECT_TRUE(boxes[1].box.re.contains(BigRat(0)));
    EXPECT_TRUE(boxes[2].box.re.contains(BigRat(0)));
}

TEST(IsolateRoots, QuarticTotallyComplex) {
    // x^4 + x + 1 has no real roots: certify via a grid + Lipschitz oracle,
    // then check the isolator agrees.
    IntPoly f({1, 1, 0, 0, 1});
    {
        // outside [-13/10, 13/10]: x^4 > |x| + 1; inside: grid of step 1/32
        // with |f'| <= 4*(13/10)^3 + 1 < 98/10
        BigRat step(1, 32), bound(13, 10), lip(98, 10);
        BigRat margin = lip * step;  // change of f between grid points
        for (BigRat x = -bound; x <= bound; x += step) {
            EXPECT_TRUE(f.eval(x) > margin) << x.str();
        }
    }
    auto boxes = isolate_roots(f, BigRat(1, 1000000));
    ASSERT_EQ(boxes.size(), 4u);
    for (const auto& b : boxes) EXPECT_FALSE(b.is_real);
    // conjugate pairs share Re and negate Im
    EXPECT_EQ(boxes[0].center_re(), boxes[1].center_re());
    EXPECT_EQ(boxes[2].center_re(), boxes[3].center_re());
    EXPECT_EQ(boxes[0].center_im(), -boxes[1].center_im());
    // sum of roots = 0 (coefficient of x^3)
    RatInterval s = boxes[0].box.re + boxes[1].box.re + boxes[2].box.re + boxes[3].box.re;
    EXPECT_TRUE(s.contains(BigRat(0)));
}

TEST(IsolateRoots, RejectsNonSquarefree) {
    EXPECT_THROW(isolate_roots(IntPoly({1, 2, 1}), BigRat(1, 10)), std::invalid_argument);
    EXPECT_THROW(isolate_roots(IntPoly({0, 0, 1}), BigRat(1, 10)), std::invalid_argument);
}

TEST(IsolateRoots, RationalRootsExact) {
    // (x-1)(x-3)(x^2+x+1)
    IntPoly f = IntPoly({-1, 1}) * IntPoly({-3, 1}) * IntPoly({1, 1, 1});
    auto boxes = isolate_roots(f, BigRat(1, 4096));
    ASSERT_EQ(boxes.size(), 4u);
    int nreal = 0;
    for (const auto& b : boxes)
        if (b.is_real) ++nreal;
    EXPECT_EQ(nreal, 2);
    EXPECT_TRUE(boxes[2].is_real && boxes[2].box.re.contains(BigRat(1)));
    EXPECT_TRUE(boxes[3].is_real && boxes[3].box.re.contains(BigRat(3)));
}

TEST(IsolateRoots, CenterResidualBoundedProperty) {
    SplitMix64 rng(21);
    int done = 0;
    for (int iter = 0; iter < 200 && done < 60; ++iter) {
        std::vector<BigInt> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(static_cast<long>(rng.below(11)) - 5);
        c.emplace_back(1);
        IntPoly f(std::move(c));
        if (!is_squarefree(f)) continue;
        ++done;
        BigRat eps(1, 1 << 20);
        auto boxes = isolate_roots(f, eps);
        ASSERT_EQ(boxes.size(), 4u);
        // |f(center)| <= radius * sup |f'| over |z| <= R+1, with
        // sup |f'| <= sum i*|a_i|*(R+1)^{i-1}, R = 1 + max |a_i|
        BigRat R(1);
        for (int i = 0; i <= 4; ++i) {
            BigRat a = BigRat(f.coeff(i)).abs();
            if (a > R) R = a;
        }
        R += BigRat(1);
        BigRat sup(0), pw(1);
        for (int i = 1; i <= 4; ++i) {
            sup += BigRat(i) * BigRat(f.coeff(i)).abs() * pw;
            pw *= R + BigRat(1);
        }
        for (const auto& b : boxes) {
            ComplexBox center = ComplexBox::point(b.center_re(), b.center_im());
            ComplexBox v = eval_box(f, center);
            RatInterval mag2 = v.norm2();
            BigRat lim = b.radius() * sup;
            EXPECT_TRUE(mag2.hi <= lim * lim) << f.str_pretty();
        }
        // disjointness and count
        for (size_t i = 0; i < boxes.size(); ++i)
            for (size_t j = i + 1; j < boxes.size(); ++j) EXPECT_TRUE(boxes[i].box.disjoint(boxes[j].box));
    }
    EXPECT_GE(done, 40);
}

TEST(IsolateRoots, CanonicalOrderIsSorted) {
    IntPoly f({1, 0, 0, 0, 1});  // x^4 + 1, roots e^{i pi/4} etc.
    auto boxes = isolate_roots(f, BigRat(1, 1 << 20));
    ASSERT_EQ(boxes.size(), 4u);
    // expect Re = -sqrt(2)/2 pair first, then +sqrt(2)/2 pair
    EXPECT_TRUE(boxes[0].box.re.is_negative());
    EXPECT_TRUE(boxes[1].box.re.is_negative());
    EXPECT_TRUE(boxes[2].box.re.is_positive());
    EXPECT_TRUE(boxes[3].box.re.is_positive());
    EXPECT_TRUE(boxes[0].box.im.is_negative());
    EXPECT_TRUE(boxes[1].box.im.is_positive());
}
