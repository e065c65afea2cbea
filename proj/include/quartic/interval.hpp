#pragma once

// Rational-endpoint interval arithmetic and complex rectangles. All
// operations return enclosures; nothing here rounds through floating point.

#include "quartic/bigint.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace quartic {

struct RatInterval {
    BigRat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(BigRat l, BigRat h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw std::invalid_argument("RatInterval: hi < lo");
    }
    static RatInterval point(const BigRat& x) { return RatInterval(x, x); }

    BigRat width() const { return hi - lo; }
    BigRat mid() const { return (lo + hi) * BigRat(1, 2); }
    bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool is_positive() const { return lo.sign() > 0; }
    bool is_negative() const { return hi.sign() < 0; }
    bool is_point() const { return lo == hi; }

    RatInterval operator-() const { return RatInterval(-hi, -lo); }
    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo + b.lo, a.hi + b.hi);
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo - b.hi, a.hi - b.lo);
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        BigRat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        BigRat lo = std::min(std::min(p1, p2), std::min(p3, p4));
        BigRat hi = std::max(std::max(p1, p2), std::max(p3, p4));
        return RatInterval(std::move(lo), std::move(hi));
    }
    friend RatInterval operator*(const BigRat& s, const RatInterval& a) {
        return s.sign() >= 0 ? RatInterval(s * a.lo, s * a.hi) : RatInterval(s * a.hi, s * a.lo);
    }
    RatInterval inv() const {
        if (contains_zero()) throw std::domain_error("RatInterval::inv: contains zero");
        return RatInterval(hi.inv(), lo.inv());
    }
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b) { return a * b.inv(); }

    RatInterval square() const {
        if (is_positive() || lo.sign() == 0) return RatInterval(lo * lo, hi * hi);
        if (is_negative() || hi.sign() == 0) return RatInterval(hi * hi, lo * lo);
        return RatInterval(BigRat(0), std::max(lo * lo, hi * hi));
    }
    RatInterval abs() const {
        if (is_positive() || lo.sign() == 0) return *this;
        if (is_negative() || hi.sign() == 0) return -*this;
        return RatInterval(BigRat(0), std::max(-lo, hi));
    }

    RatInterval intersect(const RatInterval& o) const {
        BigRat l = std::max(lo, o.lo), h = std::min(hi, o.hi);
        if (h < l) throw std::domain_error("RatInterval::intersect: empty");
        return RatInterval(l, h);
    }
    bool strictly_below(const RatInterval& o) const { return hi < o.lo; }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

// sqrt(a/b) bounded below/above with k extra bits of accuracy.
inline BigRat sqrt_lower(const BigRat& r, unsigned k) {
    if (r.sign() < 0) throw std::domain_error("sqrt_lower: negative");
    BigInt a = r.num(), b = r.den();
    BigInt scale = BigInt::pow(BigInt(2), 2 * k);
    BigInt s = (a * b * scale).isqrt();
    return BigRat(s, b * BigInt::pow(BigInt(2), k));
}
inline BigRat sqrt_upper(const BigRat& r, unsigned k) {
    if (r.sign() < 0) throw std::domain_error("sqrt_upper: negative");
    BigInt a = r.num(), b = r.den();
    BigInt scale = BigInt::pow(BigInt(2), 2 * k);
    BigInt s = (a * b * scale).isqrt() + BigInt(1);
    return BigRat(s, b * BigInt::pow(BigInt(2), k));
}

// Enclosure of sqrt over a nonnegative interval.
inline RatInterval sqrt_interval(const RatInterval& x, unsigned k) {
    if (x.lo.sign() < 0) throw std::domain_error("sqrt_interval: negative interval");
    return RatInterval(sqrt_lower(x.lo, k), sqrt_upper(x.hi, k));
}

struct ComplexBox {
    RatInterval re, im;

    ComplexBox() = default;
    ComplexBox(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
    static ComplexBox point(const BigRat& r, const BigRat& i) {
        return ComplexBox(RatInterval::point(r), RatInterval::point(i));
    }

    friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
        return ComplexBox(a.re + b.re, a.im + b.im);
    }
    friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
        return ComplexBox(a.re - b.re, a.im - b.im);
    }
    friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
        return ComplexBox(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    ComplexBox conj() const { return ComplexBox(re, -im); }

    RatInterval norm2() const { return re.square() + im.square(); }  // |z|^2
    RatInterval abs(unsigned k) const { return sqrt_interval(norm2(), k); }

    ComplexBox inv() const {
        RatInterval n2 = norm2();
        if (n2.contains_zero()) throw std::domain_error("ComplexBox::inv: contains zero");
        RatInterval n2inv = n2.inv();
        return ComplexBox(re * n2inv, (-im) * n2inv);
    }
    friend ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) { return a * b.inv(); }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool disjoint(const ComplexBox& o) const {
        return re.hi < o.re.lo || o.re.hi < re.lo || im.hi < o.im.lo || o.im.hi < im.lo;
    }
};

}  // namespace quartic
