#pragma once

// Integer factorization: trial division plus Pollard-Brent rho with a
// deterministic parameter sequence. Scales are modest here (discriminants
// of small fields), so no attempt at anything fancier.

#include "quartic/bigint.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace quartic {

namespace factordetail {

inline BigInt pollard_brent(const BigInt& n, long c0) {
    // Brent's cycle variant of Pollard rho with f(x) = x^2 + c
    for (long c = c0;; ++c) {
        BigInt x(2), y(2), d(1);
        BigInt cc(c);
        long power = 1, lam = 0;
        y = (y * y + cc) % n;
        while (d.is_one()) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (y * y + cc) % n;
            ++lam;
            BigInt diff = (x - y).abs();
            if (diff.is_zero()) break;
            d = BigInt::gcd(diff, n);
        }
        if (!d.is_zero() && !d.is_one() && d != n) return d;
    }
}

inline void factor_rec(const BigInt& n, std::map<BigInt, int>& out) {
    if (n.is_one()) return;
    if (n.is_probab_prime()) {
        out[n] += 1;
        return;
    }
    if (n.is_square()) {
        BigInt r = n.isqrt();
        factor_rec(r, out);
        factor_rec(r, out);
        return;
    }
    BigInt d = pollard_brent(n, 1);
    factor_rec(d, out);
    factor_rec(n.divexact(d), out);
}

}  // namespace factordetail

// Prime factorization of |n| as sorted (prime, exponent) pairs; n != 0.
inline std::vector<std::pair<BigInt, int>> factorize(const BigInt& n_in) {
    if (n_in.is_zero()) throw std::invalid_argument("factorize: zero");
    BigInt n = n_in.abs();
    std::map<BigInt, int> acc;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
        BigInt bp(p);
        while (n.divisible_by(bp)) {
            acc[bp] += 1;
            n = n.divexact(bp);
        }
    }
    // wheel over 6k +- 1 up to 10^5
    for (long k = 49; k <= 100000 && BigInt(k) * BigInt(k) <= n; k += 2) {
        BigInt bp(k);
        while (n.divisible_by(bp)) {
            acc[bp] += 1;
            n = n.divexact(bp);
        }
    }
    if (!n.is_one()) factordetail::factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

// Largest d with d^2 | n (n != 0), i.e. the square part of |n|.
inline BigInt square_part(const BigInt& n) {
    BigInt d(1);
    for (const auto& [p, e] : factorize(n)) d *= BigInt::pow(p, static_cast<unsigned long>(e / 2));
    return d;
}

// Squarefree part of n, keeping the sign.
inline BigInt squarefree_kernel(const BigInt& n) {
    BigInt d = square_part(n);
    return n.divexact(d * d);
}

// All positive divisors, sorted.
inline std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [p, e] : factorize(n)) {
        size_t sz = out.size();
        BigInt pk(1);
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<BigInt> prime_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

}  // namespace quartic
