#pragma once

// Arithmetic over F_p for word-sized p, univariate polynomials over F_p,
// and factorization (squarefree / distinct-degree / equal-degree splitting).
// Randomized splitting is driven by an explicit seed; a deterministic
// exhaustive factorizer exists for p <= 7 and doubles as a test oracle.

#include "quartic/bigint.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace quartic {

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p) s -= p;
    return s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("invmod: zero");
    return powmod(a % p, p - 2, p);
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

// Dense polynomial over F_p, coefficients lowest degree first, normalized
// so the last entry is nonzero (or the vector is empty = zero polynomial).
struct PolyFp {
    std::uint64_t p = 2;
    std::vector<std::uint64_t> c;

    PolyFp() = default;
    PolyFp(std::uint64_t p_, std::vector<std::uint64_t> c_) : p(p_), c(std::move(c_)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() % p == 0) c.pop_back();
        for (auto& x : c) x %= p;
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    std::uint64_t lead() const { return c.back(); }
    std::uint64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : 0;
    }
    static PolyFp one(std::uint64_t p) { return PolyFp(p, {1}); }
    static PolyFp x(std::uint64_t p) { return PolyFp(p, {0, 1}); }

    friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.p == b.p && a.c == b.c; }
    friend bool operator<(const PolyFp& a, const PolyFp& b) {
        if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
        for (size_t i = a.c.size(); i-- > 0;)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return false;
    }

    PolyFp monic() const {
        if (is_zero()) return *this;
        PolyFp r = *this;
        std::uint64_t li = invmod(lead(), p);
        for (auto& x : r.c) x = mulmod(x, li, p);
        return r;
    }
};

inline PolyFp add(const PolyFp& a, const PolyFp& b) {
    PolyFp r;
    r.p = a.p;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = addmod(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.p);
    r.trim();
    return r;
}
inline PolyFp sub(const PolyFp& a, const PolyFp& b) {
    PolyFp r;
    r.p = a.p;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = submod(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.p);
    r.trim();
    return r;
}
inline PolyFp mul(const PolyFp& a, const PolyFp& b) {
    if (a.is_zero() || b.is_zero()) return PolyFp(a.p, {});
    PolyFp r;
    r.p = a.p;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = addmod(r.c[i + j], mulmod(a.c[i], b.c[j], a.p), a.p);
    r.trim();
    return r;
}
// division with remainder; b != 0
inline void divrem(const PolyFp& a, const PolyFp& b, PolyFp& q, PolyFp& r) {
    if (b.is_zero()) throw std::domain_error("PolyFp divrem by zero");
    std::uint64_t p = a.p;
    q = PolyFp(p, {});
    r = a;
    std::uint64_t li = invmod(b.lead(), p);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        std::uint64_t f = mulmod(r.lead(), li, p);
        std::vector<std::uint64_t> qc(static_cast<size_t>(k) + 1, 0);
        qc[static_cast<size_t>(k)] = f;
        PolyFp t(p, qc);
        q = add(q, t);
        r = sub(r, mul(t, b));
    }
}
inline PolyFp mod(const PolyFp& a, const PolyFp& b) {
    PolyFp q, r;
    divrem(a, b, q, r);
    return r;
}
inline PolyFp gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
        PolyFp r = mod(a, b);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}
inline PolyFp powmod_poly(PolyFp base, BigInt e, const PolyFp& m) {
    PolyFp r = PolyFp::one(base.p);
    base = mod(base, m);
    while (e.sign() > 0) {
        if (e.odd()) r = mod(mul(r, base), m);
        base = mod(mul(base, base), m);
        e = e / BigInt(2);
    }
    return r;
}
inline PolyFp derivative(const PolyFp& a) {
    PolyFp r;
    r.p = a.p;
    for (int i = 1; i <= a.degree(); ++i) r.c.push_back(mulmod(a.c[static_cast<size_t>(i)], static_cast<std::uint64_t>(i) % a.p, a.p));
    r.trim();
    return r;
}
inline std::uint64_t eval(const PolyFp& a, std::uint64_t x) {
    std::uint64_t r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = addmod(mulmod(r, x, a.p), a.c[i], a.p);
    return r;
}

// p-th root of a polynomial whose exponents are all multiples of p
// (appears in squarefree decomposition when f' = 0).
inline PolyFp pth_root(const PolyFp& a) {
    std::uint64_t p = a.p;
    PolyFp r;
    r.p = p;
    for (int i = 0; i <= a.degree(); i += static_cast<int>(p)) r.c.push_back(a.coeff(i));
    r.trim();
    return r;
}

namespace detail {

// Equal-degree splitting (Cantor-Zassenhaus), f squarefree monic, all
// irreducible factors of degree d.
inline void equal_degree(const PolyFp& f, int d, SplitMix64& rng, std::vector<PolyFp>& out) {
    std::uint64_t p = f.p;
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    while (true) {
        // random polynomial of degree < deg f
        std::vector<std::uint64_t> rc(static_cast<size_t>(f.degree()), 0);
        for (auto& x : rc) x = rng.below(p);
        PolyFp a(p, rc);
        if (a.is_zero()) continue;
        PolyFp g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            PolyFp q, r;
            divrem(f, g, q, r);
            equal_degree(q.monic(), d, rng, out);
            return;
        }
        PolyFp b;
        if (p == 2) {
            // trace to F_2 of factors of degree d: a + a^2 + ... + a^(2^(d-1))
            PolyFp t = a, acc = a;
            for (int i = 1; i < d; ++i) {
                t = mod(mul(t, t), f);
                acc = add(acc, t);
            }
            b = acc;
        } else {
            BigInt e = (BigInt::pow(BigInt(static_cast<long>(p)), static_cast<unsigned long>(d)) - BigInt(1)) / BigInt(2);
            b = sub(powmod_poly(a, e, f), PolyFp::one(p));
        }
        g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            PolyFp q, r;
            divrem(f, g, q, r);
            equal_degree(q.monic(), d, rng, out);
            return;
        }
    }
}

// Irreducible factors of a squarefree monic f: distinct-degree, then
// equal-degree splitting.
inline void factor_squarefree(const PolyFp& f, SplitMix64& rng, std::vector<PolyFp>& out) {
    std::uint64_t p = f.p;
    PolyFp h = PolyFp::x(p);
    PolyFp rem = f.monic();
    for (int d = 1; rem.degree() > 0 && 2 * d <= rem.degree(); ++d) {
        h = powmod_poly(h, BigInt(static_cast<long>(p)), rem);
        PolyFp gd = gcd(sub(h, PolyFp::x(p)), rem);
        if (gd.degree() > 0) {
            equal_degree(gd.monic(), d, rng, out);
            PolyFp q, r;
            divrem(rem, gd, q, r);
            rem = q.monic();
            h = mod(h, rem);
        }
    }
    if (rem.degree() > 0) out.push_back(rem.monic());
}

// Set of distinct irreducible factors of monic f (any multiplicities).
inline void irreducible_factor_set(const PolyFp& f, SplitMix64& rng, std::vector<PolyFp>& out) {
    if (f.degree() <= 0) return;
    PolyFp fp = derivative(f);
    if (fp.is_zero()) {
        // f = g(x)^p with g the coefficient-wise p-th root over F_p
        irreducible_factor_set(pth_root(f).monic(), rng, out);
        return;
    }
    PolyFp g = gcd(f, fp);
    if (g.degree() == 0) {
        factor_squarefree(f, rng, out);
        return;
    }
    PolyFp q, r;
    divrem(f, g, q, r);
    factor_squarefree(q.monic(), rng, out);
    irreducible_factor_set(g.monic(), rng, out);
}

}  // namespace detail

// Monic irreducible factors with multiplicities, product = f up to the unit
// lead(f). Requires p prime, f nonzero.
inline std::vector<std::pair<PolyFp, int>> factor_fp(const PolyFp& f_in, std::uint64_t seed = 0) {
    if (f_in.is_zero()) throw std::invalid_argument("factor_fp: zero polynomial");
    if (!is_prime_u64(f_in.p)) throw std::invalid_argument("factor_fp: composite modulus");
    SplitMix64 rng(seed ^ (0xabcd1234ULL + f_in.p));
    PolyFp f = f_in.monic();

    std::vector<PolyFp> irr;
    detail::irreducible_factor_set(f, rng, irr);
    std::sort(irr.begin(), irr.end());
    irr.erase(std::unique(irr.begin(), irr.end()), irr.end());

    std::vector<std::pair<PolyFp, int>> out;
    for (const auto& e : irr) {
        int m = 0;
        PolyFp t = f, q, r;
        while (true) {
            divrem(t, e, q, r);
            if (!r.is_zero()) break;
            t = q;
            ++m;
        }
        if (m > 0) out.emplace_back(e, m);
    }
    return out;
}

// Exhaustive factorization for tiny p: repeatedly strip the lexicographically
// smallest monic irreducible divisor. Used as the deterministic fallback and
// as an independent oracle in tests.
inline std::vector<std::pair<PolyFp, int>> factor_fp_exhaustive(const PolyFp& f_in) {
    std::uint64_t p = f_in.p;
    if (p > 7) throw std::invalid_argument("factor_fp_exhaustive: p too large");
    if (f_in.is_zero()) throw std::invalid_argument("factor_fp_exhaustive: zero polynomial");
    std::vector<std::pair<PolyFp, int>> out;
    PolyFp f = f_in.monic();
    auto all_monic_of_degree = [&](int d) {
        std::vector<PolyFp> res;
        std::vector<std::uint64_t> c(static_cast<size_t>(d) + 1, 0);
        c[static_cast<size_t>(d)] = 1;
        size_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (size_t k = 0; k < count; ++k) {
            size_t t = k;
            for (int i = 0; i < d; ++i) {
                c[static_cast<size_t>(i)] = t % p;
                t /= p;
            }
            res.emplace_back(p, c);
        }
        std::sort(res.begin(), res.end());
        return res;
    };
    while (f.degree() > 0) {
        bool split = false;
        for (int d = 1; d <= f.degree() / 2 + (f.degree() == 1 ? 1 : 0) && !split; ++d) {
            for (const auto& g : all_monic_of_degree(d)) {
                PolyFp q, r;
                divrem(f, g, q, r);
                if (r.is_zero() && g.degree() >= 1) {
                    // g divides; is g irreducible? it is, if no smaller-degree
                    // monic divides it -- guaranteed since we try degrees upward.
                    int m = 0;
                    while (true) {
                        divrem(f, g, q, r);
                        if (!r.is_zero()) break;
                        f = q;
                        ++m;
                    }
                    out.emplace_back(g, m);
                    split = true;
                    break;
                }
            }
        }
        if (!split) {
            out.emplace_back(f.monic(), 1);
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace quartic
