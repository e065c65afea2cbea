#pragma once

// Arbitrary-precision integers and rationals on top of GMP, with value
// semantics. BigRat is always canonical: gcd(num, den) = 1, den > 0.

#include <gmp.h>

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace quartic {

class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }
    BigInt(int v) : BigInt(static_cast<long>(v)) {}
    explicit BigInt(unsigned long v) { mpz_init_set_ui(z_, v); }
    explicit BigInt(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("BigInt: bad decimal string: " + s);
        }
    }
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("BigInt::to_long");
        return mpz_get_si(z_);
    }
    double to_double() const { return mpz_get_d(z_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }
    BigInt& operator+=(const BigInt& b) {
        mpz_add(z_, z_, b.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& b) {
        mpz_sub(z_, z_, b.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& b) {
        mpz_mul(z_, z_, b.z_);
        return *this;
    }

    // Truncated division; fdiv/cdiv variants where rounding matters.
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    BigInt fdiv_q(const BigInt& b) const {
        BigInt r;
        mpz_fdiv_q(r.z_, z_, b.z_);
        return r;
    }
    BigInt fdiv_r(const BigInt& b) const {
        BigInt r;
        mpz_fdiv_r(r.z_, z_, b.z_);
        return r;
    }
    BigInt cdiv_q(const BigInt& b) const {
        BigInt r;
        mpz_cdiv_q(r.z_, z_, b.z_);
        return r;
    }
    // Exact division, throws if not divisible.
    BigInt divexact(const BigInt& b) const {
        if (b.is_zero()) throw std::domain_error("BigInt::divexact by zero");
        if (!mpz_divisible_p(z_, b.z_)) throw std::domain_error("BigInt::divexact: not divisible");
        BigInt r;
        mpz_divexact(r.z_, z_, b.z_);
        return r;
    }
    bool divisible_by(const BigInt& b) const { return mpz_divisible_p(z_, b.z_) != 0; }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) >= 0; }
    friend bool operator==(const BigInt& a, long b) { return mpz_cmp_si(a.z_, b) == 0; }
    friend bool operator!=(const BigInt& a, long b) { return mpz_cmp_si(a.z_, b) != 0; }

    BigInt abs() const {
        BigInt r;
        mpz_abs(r.z_, z_);
        return r;
    }
    static BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    static BigInt lcm(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }
    // g = gcd(a,b) = s*a + t*b
    static BigInt gcdext(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
        BigInt g;
        mpz_gcdext(g.z_, s.z_, t.z_, a.z_, b.z_);
        return g;
    }
    static BigInt pow(const BigInt& a, unsigned long e) {
        BigInt r;
        mpz_pow_ui(r.z_, a.z_, e);
        return r;
    }
    // Floor of the square root; second form also reports exactness.
    BigInt isqrt() const {
        if (sign() < 0) throw std::domain_error("BigInt::isqrt of negative");
        BigInt r;
        mpz_sqrt(r.z_, z_);
        return r;
    }
    bool is_square() const { return sign() >= 0 && mpz_perfect_square_p(z_) != 0; }
    bool is_probab_prime() const { return mpz_probab_prime_p(z_, 30) != 0; }

    size_t bits() const { return mpz_sizeinbase(z_, 2); }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, out.size() + 1);
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.str(); }

private:
    mpz_t z_;
};

class BigRat {
public:
    BigRat() { mpq_init(q_); }
    BigRat(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    BigRat(int v) : BigRat(static_cast<long>(v)) {}
    BigRat(const BigInt& n) {
        mpq_init(q_);
        mpq_set_z(q_, n.raw());
    }
    BigRat(const BigInt& n, const BigInt& d) {
        if (d.is_zero()) throw std::domain_error("BigRat: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), n.raw());
        mpz_set(mpq_denref(q_), d.raw());
        mpq_canonicalize(q_);
    }
    BigRat(long n, long d) : BigRat(BigInt(n), BigInt(d)) {}
    BigRat(const BigRat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    BigRat(BigRat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    BigRat& operator=(const BigRat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    BigRat& operator=(BigRat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~BigRat() { mpq_clear(q_); }

    mpq_srcptr raw() const { return q_; }

    BigInt num() const {
        BigInt n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    BigInt den() const {
        BigInt d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }
    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    double to_double() const { return mpq_get_d(q_); }

    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.is_zero()) throw std::domain_error("BigRat: division by zero");
        BigRat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    BigRat operator-() const {
        BigRat r;
        mpq_neg(r.q_, q_);
        return r;
    }
    BigRat& operator+=(const BigRat& b) {
        mpq_add(q_, q_, b.q_);
        return *this;
    }
    BigRat& operator-=(const BigRat& b) {
        mpq_sub(q_, q_, b.q_);
        return *this;
    }
    BigRat& operator*=(const BigRat& b) {
        mpq_mul(q_, q_, b.q_);
        return *this;
    }
    BigRat inv() const {
        if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
        BigRat r;
        mpq_inv(r.q_, q_);
        return r;
    }
    BigRat abs() const {
        BigRat r;
        mpq_abs(r.q_, q_);
        return r;
    }

    friend bool operator==(const BigRat& a, const BigRat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }
    friend bool operator<(const BigRat& a, const BigRat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    BigInt floor() const {
        BigInt r;
        mpz_fdiv_q(r.raw(), mpq_numref(q_), mpq_denref(q_));
        return r;
    }
    BigInt ceil() const {
        BigInt r;
        mpz_cdiv_q(r.raw(), mpq_numref(q_), mpq_denref(q_));
        return r;
    }
    // Nearest integer, ties toward +infinity.
    BigInt round() const { return (*this + BigRat(1, 2)).floor(); }

    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, out.size() + 1);
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const BigRat& a) { return os << a.str(); }

private:
    mpq_t q_;
};

inline BigRat operator*(const BigInt& a, const BigRat& b) { return BigRat(a) * b; }
inline BigRat operator*(const BigRat& a, const BigInt& b) { return a * BigRat(b); }

// Deterministic 64-bit generator for the few randomized routines (seedable per spec).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

private:
    std::uint64_t state_;
};

}  // namespace quartic
