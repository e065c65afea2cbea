#pragma once

// Certified complex root isolation for squarefree monic integer polynomials
// of degree <= 4. Real roots come from Sturm bisection with exact rational
// arithmetic; complex pairs from interval deflation (1-2 real roots present)
// or from the resolvent-cubic factorization of a depressed quartic (no real
// roots). Precision doubles until all boxes meet the radius target, are
// pairwise disjoint, and are sign-definite in the imaginary part.

#include "quartic/bigint.hpp"
#include "quartic/interval.hpp"
#include "quartic/poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quartic {

struct RootBox {
    ComplexBox box;
    bool is_real = false;

    BigRat center_re() const { return box.re.mid(); }
    BigRat center_im() const { return is_real ? BigRat(0) : box.im.mid(); }
    BigRat radius() const { return (box.re.width() + box.im.width()) * BigRat(1, 2); }
};

namespace rootdetail {

inline std::vector<RatPoly> sturm_chain(const IntPoly& f) {
    std::vector<RatPoly> chain;
    chain.emplace_back(f);
    chain.emplace_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPoly q, r;
        divrem(chain[chain.size() - 2], chain.back(), q, r);
        for (auto& c : r.c) c = -c;
        r.trim();
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_variations(const std::vector<RatPoly>& chain, const BigRat& x) {
    int var = 0, prev = 0;
    for (const auto& g : chain) {
        int s = g.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of roots in the half-open interval (a, b].
inline int count_roots(const std::vector<RatPoly>& chain, const BigRat& a, const BigRat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// Isolating intervals (a, b] for all real roots of a squarefree f, with
// f nonzero at every endpoint used.
inline std::vector<RatInterval> isolate_real(const IntPoly& f) {
    if (f.degree() < 1) return {};
    auto chain = sturm_chain(f);
    BigRat bound(1);
    for (int i = 0; i < f.degree(); ++i) {
        BigRat c = (BigRat(f.coeff(i)) / BigRat(f.lead())).abs();
        if (c > bound) bound = c;
    }
    bound += BigRat(1);
    BigRat lo = -bound, hi = bound;
    while (f.eval(lo).is_zero()) lo -= BigRat(1);
    while (f.eval(hi).is_zero()) hi += BigRat(1);
    std::vector<RatInterval> out;
    std::vector<std::pair<BigRat, BigRat>> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int n = count_roots(chain, a, b);
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(a, b);
            continue;
        }
        BigRat m = (a + b) * BigRat(1, 2);
        if (f.eval(m).is_zero()) {
            out.emplace_back(m, m);
            // shrink around the exact root so (ml, mr] holds only this root
            BigRat eps = (b - a) * BigRat(1, 1024);
            BigRat ml = m - eps, mr = m + eps;
            while (f.eval(ml).is_zero()) ml = (m + ml) * BigRat(1, 2);
            while (f.eval(mr).is_zero()) mr = (mr + m) * BigRat(1, 2);
            while (count_roots(chain, ml, mr) > 1) {
                ml = (ml + m) * BigRat(1, 2);
                mr = (m + mr) * BigRat(1, 2);
                while (f.eval(ml).is_zero()) ml = (m + ml) * BigRat(1, 2);
                while (f.eval(mr).is_zero()) mr = (mr + m) * BigRat(1, 2);
            }
            work.push_back({a, ml});
            work.push_back({mr, b});
        } else {
            work.push_back({a, m});
            work.push_back({m, b});
        }
    }
    std::sort(out.begin(), out.end(), [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
    return out;
}

// Shrink an isolating interval for a simple real root until width <= w.
// Endpoints with f = 0 are exact roots and pass through unchanged.
inline RatInterval refine_real(const IntPoly& f, RatInterval iv, const BigRat& w) {
    if (iv.is_point()) return iv;
    int sa = f.eval(iv.lo).sign();
    int sb = f.eval(iv.hi).sign();
    if (sa == 0) return RatInterval::point(iv.lo);
    if (sb == 0) return RatInterval::point(iv.hi);
    if (sa == sb) throw std::logic_error("refine_real: endpoints do not bracket");
    while (iv.width() > w) {
        BigRat m = iv.mid();
        int sm = f.eval(m).sign();
        if (sm == 0) return RatInterval::point(m);
        if (sm == sa)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

// Integer roots of a monic integer polynomial, found by isolation plus
// exact verification (no factoring of the constant term).
inline std::vector<BigInt> integer_roots_monic(const IntPoly& f) {
    std::vector<BigInt> out;
    IntPoly g = squarefree_part(f);
    for (const auto& iv : isolate_real(g)) {
        RatInterval r = refine_real(g, iv, BigRat(1, 4));
        BigInt cand = r.mid().round();
        if (f.eval(cand).is_zero()) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Divide an interval-coefficient polynomial (monic, degree n, given as
// exact integers) by (x - r) where r is an interval enclosing a root.
// Returns interval coefficients of the cofactor, lowest degree first.
inline std::vector<RatInterval> deflate(const std::vector<RatInterval>& coeffs, const RatInterval& r) {
    int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<RatInterval> q(static_cast<size_t>(n));
    RatInterval carry = coeffs[static_cast<size_t>(n)];
    for (int i = n - 1; i >= 0; --i) {
        q[static_cast<size_t>(i)] = carry;
        carry = coeffs[static_cast<size_t>(i)] + r * carry;
    }
    return q;  // remainder `carry` contains 0 by construction
}

inline std::vector<RatInterval> to_intervals(const IntPoly& f) {
    std::vector<RatInterval> v;
    for (const auto& c : f.coeffs()) v.push_back(RatInterval::point(BigRat(c)));
    return v;
}

// Complex pair of y^2 + B y + C with disc proven negative; emits the two
// conjugate boxes.
inline bool quad_pair(const RatInterval& B, const RatInterval& C, unsigned k, std::vector<RootBox>& out) {
    RatInterval disc = B.square() - BigRat(4) * C;
    if (!disc.is_negative()) return false;
    RatInterval re = BigRat(-1, 2) * B;
    RatInterval imag = BigRat(1, 2) * sqrt_interval(-disc, k);
    RootBox up, dn;
    up.box = ComplexBox(re, imag);
    dn.box = ComplexBox(re, -imag);
    out.push_back(dn);
    out.push_back(up);
    return true;
}

}  // namespace rootdetail

// One box per complex root, conjugates symmetric, radii <= eps, pairwise
// disjoint, sorted by (Re, |Im|, Im). Requires monic squarefree input.
inline std::vector<RootBox> isolate_roots(const IntPoly& f, const BigRat& eps) {
    using namespace rootdetail;
    if (f.is_zero() || !f.monic()) throw std::invalid_argument("isolate_roots: monic input required");
    if (!is_squarefree(f)) throw std::invalid_argument("isolate_roots: non-squarefree input rejected");
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("isolate_roots: degree >= 1 required");
    if (eps.sign() <= 0) throw std::invalid_argument("isolate_roots: eps must be positive");

    if (n == 1) {
        RootBox b;
        b.box = ComplexBox::point(BigRat(-f.coeff(0)), BigRat(0));
        b.is_real = true;
        return {b};
    }

    auto real_ivs = isolate_real(f);
    int nreal = static_cast<int>(real_ivs.size());

    for (unsigned k = 16; k <= 1u << 14; k *= 2) {
        BigRat w = BigRat(1, 2);
        for (unsigned i = 0; i < k; ++i) w = w * BigRat(1, 2);
        std::vector<RootBox> boxes;
        bool ok = true;

        std::vector<RatInterval> reals;
        for (auto iv : real_ivs) reals.push_back(refine_real(f, iv, w));
        for (const auto& r : reals) {
            RootBox b;
            b.box = ComplexBox(r, RatInterval::point(BigRat(0)));
            b.is_real = true;
            boxes.push_back(b);
        }

        int ncomplex = n - nreal;
        if (ncomplex == 2) {
            // deflate all real roots, leaving one quadratic factor
            auto coeffs = to_intervals(f);
            for (const auto& r : reals) coeffs = deflate(coeffs, r);
            ok = quad_pair(coeffs[1], coeffs[0], k, boxes);
        } else if (ncomplex == 4) {
            // depress: x = y - a3/4
            BigRat sh = BigRat(f.coeff(3)) * BigRat(1, 4);
            BigRat p, q, r0;
            {
                BigRat a3(f.coeff(3)), a2(f.coeff(2)), a1(f.coeff(1)), a0(f.coeff(0));
                BigRat s = -sh;
                p = a2 - BigRat(3, 8) * a3 * a3;
                q = a1 - BigRat(1, 2) * a3 * a2 + BigRat(1, 8) * a3 * a3 * a3;
                r0 = a0 + s * (a1 + s * (a2 + s * (a3 + s)));
                // r0 via direct evaluation f(-a3/4)
            }
            std::vector<RootBox> yboxes;
            if (q.is_zero()) {
                BigRat disc0 = p * p - BigRat(4) * r0;
                if (disc0.sign() > 0) {
                    RatInterval sq = sqrt_interval(RatInterval::point(disc0), k);
                    RatInterval z1 = BigRat(1, 2) * (RatInterval::point(-p) - sq);
                    RatInterval z2 = BigRat(1, 2) * (RatInterval::point(-p) + sq);
                    for (const auto& z : {z1, z2}) {
                        if (!z.is_negative()) {
                            ok = false;
                            break;
                        }
                        RatInterval imag = sqrt_interval(-z, k);
                        RootBox up, dn;
                        up.box = ComplexBox(RatInterval::point(BigRat(0)), imag);
                        dn.box = ComplexBox(RatInterval::point(BigRat(0)), -imag);
                        yboxes.push_back(dn);
                        yboxes.push_back(up);
                    }
                } else if (disc0.sign() < 0) {
                    // y^2 = u +- i v, v > 0
                    RatInterval u = RatInterval::point(BigRat(-1, 2) * p);
                    RatInterval v = BigRat(1, 2) * sqrt_interval(RatInterval::point(-disc0), k);
                    RatInterval zabs = sqrt_interval(u.square() + v.square(), k);
                    RatInterval s = sqrt_interval(BigRat(1, 2) * (zabs + u), k);
                    if (s.contains_zero()) {
                        ok = false;
                    } else {
                        RatInterval t = BigRat(1, 2) * (v / s);
                        for (int sr : {-1, 1})
                            for (int si : {-1, 1}) {
                                RootBox b;
                                RatInterval rr = sr > 0 ? s : -s;
                                RatInterval ii = si > 0 ? t : -t;
                                b.box = ComplexBox(rr, ii);
                                yboxes.push_back(b);
                            }
                    }
                } else {
                    ok = false;  // double root; unreachable for squarefree f
                }
            } else {
                // resolvent cubic z^3 + 2p z^2 + (p^2 - 4 r0) z - q^2,
                // integerized via z = w / d
                BigInt d = BigInt::lcm(BigInt::lcm(p.den(), q.den()), r0.den());
                BigRat dr(d);
                std::vector<BigInt> wc{(-q * q * dr * dr * dr).num(), ((p * p - BigRat(4) * r0) * dr * dr).num(),
                                       (BigRat(2) * p * dr).num(), BigInt(1)};
                IntPoly res(std::move(wc));
                IntPoly res_sf = squarefree_part(res);
                auto zivs = isolate_real(res_sf);
                if (zivs.empty()) throw std::logic_error("resolvent cubic has no real root");
                RatInterval wbest = refine_real(res_sf, zivs.back(), w);
                RatInterval z0(wbest.lo / dr, wbest.hi / dr);
                if (!z0.is_positive()) {
                    ok = false;
                } else {
                    RatInterval u = sqrt_interval(z0, k);
                    RatInterval qq = RatInterval::point(q);
                    RatInterval pv = RatInterval::point(p);
                    RatInterval v = BigRat(1, 2) * (pv + z0 - qq / u);
                    RatInterval wv = BigRat(1, 2) * (pv + z0 + qq / u);
                    ok = quad_pair(u, v, k, yboxes) && quad_pair(-u, wv, k, yboxes);
                }
            }
            if (ok) {
                for (auto& b : yboxes) {
                    b.box.re = b.box.re + RatInterval::point(-sh);
                    boxes.push_back(b);
                }
            }
        }

        if (!ok || static_cast<int>(boxes.size()) != n) continue;

        // non-real boxes must be sign-definite in Im
        for (const auto& b : boxes)
            if (!b.is_real && b.box.im.contains_zero()) ok = false;
        if (!ok) continue;

        for (const auto& b : boxes)
            if (b.radius() > eps) ok = false;
        if (!ok) continue;

        for (size_t i = 0; i < boxes.size() && ok; ++i)
            for (size_t j = i + 1; j < boxes.size() && ok; ++j)
                if (!boxes[i].box.disjoint(boxes[j].box)) ok = false;
        if (!ok) continue;

        // canonical order (Re, |Im|, Im); requires strict separation or
        // exact ties in each key, else refine further
        bool comparable = true;
        auto cmp_lt = [&](const RootBox& a, const RootBox& b) -> std::optional<bool> {
            if (a.box.re.hi < b.box.re.lo) return true;
            if (b.box.re.hi < a.box.re.lo) return false;
            if (!(a.box.re.lo == b.box.re.lo && a.box.re.hi == b.box.re.hi)) return std::nullopt;
            RatInterval aa = a.box.im.abs(), bb = b.box.im.abs();
            if (aa.hi < bb.lo) return true;
            if (bb.hi < aa.lo) return false;
            if (!(aa.lo == bb.lo && aa.hi == bb.hi)) return std::nullopt;
            int sa = a.is_real ? 0 : (a.box.im.is_positive() ? 1 : -1);
            int sb = b.is_real ? 0 : (b.box.im.is_positive() ? 1 : -1);
            return sa < sb;
        };
        for (size_t i = 0; i + 1 < boxes.size() && comparable; ++i)
            for (size_t j = i + 1; j < boxes.size() && comparable; ++j)
                if (!cmp_lt(boxes[i], boxes[j]).has_value()) comparable = false;
        if (!comparable) continue;
        std::sort(boxes.begin(), boxes.end(),
                  [&](const RootBox& a, const RootBox& b) { return *cmp_lt(a, b); });
        return boxes;
    }
    throw std::runtime_error("isolate_roots: precision limit exceeded");
}

// Evaluate an integer polynomial on a complex box.
inline ComplexBox eval_box(const IntPoly& f, const ComplexBox& z) {
    ComplexBox r = ComplexBox::point(BigRat(0), BigRat(0));
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        r = r * z + ComplexBox::point(BigRat(f.coeffs()[i]), BigRat(0));
    }
    return r;
}

}  // namespace quartic
