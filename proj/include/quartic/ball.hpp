#pragma once

// Certified real intervals over MPFR with directed rounding. Used for the
// transcendental outputs (regulators, lengths, angles); all set membership
// decisions stay on the exact rational side.

#include "quartic/bigint.hpp"
#include "quartic/interval.hpp"

#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace quartic {

class RealBall {
public:
    explicit RealBall(mpfr_prec_t prec = 192) : prec_(prec) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    RealBall(const RealBall& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    RealBall(RealBall&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    RealBall& operator=(RealBall o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~RealBall() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static RealBall from_rat(const BigRat& q, mpfr_prec_t prec = 192) {
        RealBall b(prec);
        mpfr_set_q(b.lo_, q.raw(), MPFR_RNDD);
        mpfr_set_q(b.hi_, q.raw(), MPFR_RNDU);
        return b;
    }
    static RealBall from_interval(const RatInterval& iv, mpfr_prec_t prec = 192) {
        RealBall b(prec);
        mpfr_set_q(b.lo_, iv.lo.raw(), MPFR_RNDD);
        mpfr_set_q(b.hi_, iv.hi.raw(), MPFR_RNDU);
        return b;
    }
    static RealBall from_long(long v, mpfr_prec_t prec = 192) {
        RealBall b(prec);
        mpfr_set_si(b.lo_, v, MPFR_RNDD);
        mpfr_set_si(b.hi_, v, MPFR_RNDU);
        return b;
    }
    static RealBall pi(mpfr_prec_t prec = 192) {
        RealBall b(prec);
        mpfr_const_pi(b.lo_, MPFR_RNDD);
        mpfr_const_pi(b.hi_, MPFR_RNDU);
        return b;
    }
    static RealBall from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
        RealBall b(prec);
        mpfr_set(b.lo_, lo, MPFR_RNDD);
        mpfr_set(b.hi_, hi, MPFR_RNDU);
        return b;
    }

    mpfr_prec_t prec() const { return prec_; }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const { return (lo_d() + hi_d()) / 2; }
    double rad_d() const {
        double r = (hi_d() - lo_d()) / 2;
        return r < 0 ? 0 : r;
    }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool is_positive() const { return mpfr_sgn(lo_) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_) < 0; }
    bool overlaps(const RealBall& o) const {
        return !(mpfr_cmp(hi_, o.lo_) < 0 || mpfr_cmp(o.hi_, lo_) < 0);
    }

    friend RealBall operator+(const RealBall& a, const RealBall& b) {
        RealBall r(std::max(a.prec_, b.prec_));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend RealBall operator-(const RealBall& a, const RealBall& b) {
        RealBall r(std::max(a.prec_, b.prec_));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    RealBall operator-() const {
        RealBall r(prec_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    friend RealBall operator*(const RealBall& a, const RealBall& b) {
        RealBall r(std::max(a.prec_, b.prec_));
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        bool first = true;
        for (int i = 0; i < 4; ++i) {
            mpfr_srcptr x = (i & 1) ? a.hi_ : a.lo_;
            mpfr_srcptr y = (i & 2) ? b.hi_ : b.lo_;
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
        mpfr_clear(t);
        return r;
    }
    // reciprocal of a sign-definite ball
    RealBall inv() const {
        if (contains_zero()) throw std::domain_error("RealBall::inv: contains zero");
        RealBall r(prec_);
        mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
        mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
        return r;
    }
    friend RealBall operator/(const RealBall& a, const RealBall& b) { return a * b.inv(); }

    RealBall abs() const {
        RealBall r(prec_);
        if (is_positive() || mpfr_sgn(lo_) == 0) return *this;
        if (is_negative() || mpfr_sgn(hi_) == 0) return -*this;
        mpfr_set_zero(r.lo_, 1);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    RealBall log() const {
        if (mpfr_sgn(lo_) <= 0) throw std::domain_error("RealBall::log: not strictly positive");
        RealBall r(prec_);
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    RealBall exp() const {
        RealBall r(prec_);
        mpfr_exp(r.lo_, lo_, MPFR_RNDD);
        mpfr_exp(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    RealBall sqrt() const {
        if (mpfr_sgn(lo_) < 0) throw std::domain_error("RealBall::sqrt: negative");
        RealBall r(prec_);
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    RealBall mul_si(long k) const {
        RealBall r(prec_);
        if (k >= 0) {
            mpfr_mul_si(r.lo_, lo_, k, MPFR_RNDD);
            mpfr_mul_si(r.hi_, hi_, k, MPFR_RNDU);
        } else {
            mpfr_mul_si(r.lo_, hi_, k, MPFR_RNDD);
            mpfr_mul_si(r.hi_, lo_, k, MPFR_RNDU);
        }
        return r;
    }

    // Relative width (hi-lo)/|mid|; +inf if the ball straddles zero.
    double rel_width() const {
        double m = mid_d();
        if (m == 0) return contains_zero() && lo_d() == 0 && hi_d() == 0 ? 0 : 1e300;
        double w = hi_d() - lo_d();
        return w / (m < 0 ? -m : m);
    }

    std::string str() const {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.15g \xc2\xb1 %.3g", mid_d(), rad_d());
        return buf;
    }

    mpfr_srcptr lo_raw() const { return lo_; }
    mpfr_srcptr hi_raw() const { return hi_; }

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

// Enclosure of arg(z) for a complex box lying in the open upper or lower
// half plane, or strictly right of the imaginary axis. The extrema of arg
// over such an axis-aligned box are attained at corners.
inline RealBall arg_interval(const ComplexBox& z, mpfr_prec_t prec = 192) {
    bool ok = z.im.is_positive() || z.im.is_negative() || z.re.is_positive();
    if (!ok) throw std::domain_error("arg_interval: box not sign-definite");
    mpfr_t x, y, t, lo, hi;
    mpfr_init2(x, prec);
    mpfr_init2(y, prec);
    mpfr_init2(t, prec);
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        const BigRat& xr = (i & 1) ? z.re.hi : z.re.lo;
        const BigRat& yr = (i & 2) ? z.im.hi : z.im.lo;
        for (int dir = 0; dir < 2; ++dir) {
            mpfr_set_q(x, xr.raw(), dir ? MPFR_RNDU : MPFR_RNDD);
            mpfr_set_q(y, yr.raw(), dir ? MPFR_RNDU : MPFR_RNDD);
            mpfr_atan2(t, y, x, dir ? MPFR_RNDU : MPFR_RNDD);
            if (first || mpfr_cmp(t, lo) < 0) mpfr_set(lo, t, MPFR_RNDD);
            if (first || mpfr_cmp(t, hi) > 0) mpfr_set(hi, t, MPFR_RNDU);
            first = false;
        }
    }
    RealBall out = RealBall::from_endpoints(lo, hi, prec);
    mpfr_clear(x);
    mpfr_clear(y);
    mpfr_clear(t);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return out;
}

}  // namespace quartic
