#pragma once

// Integer and rational univariate polynomials. Coefficients are stored
// lowest degree first; the zero polynomial has an empty coefficient vector.

#include "quartic/bigint.hpp"
#include "quartic/fp.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace quartic {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly x() { return IntPoly({0, 1}); }
    static IntPoly constant(const BigInt& a) {
        IntPoly r;
        r.c_.push_back(a);
        r.trim();
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& lead() const { return c_.back(); }
    bool monic() const { return !c_.empty() && c_.back().is_one(); }
    BigInt coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return BigInt(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }
    friend bool operator<(const IntPoly& a, const IntPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }
    IntPoly operator-() const {
        std::vector<BigInt> r = c_;
        for (auto& x : r) x = -x;
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const BigInt& s, const IntPoly& a) {
        std::vector<BigInt> r = a.c_;
        for (auto& x : r) x = s * x;
        return IntPoly(std::move(r));
    }

    IntPoly derivative() const {
        std::vector<BigInt> r;
        for (int i = 1; i <= degree(); ++i) r.push_back(BigInt(i) * c_[static_cast<size_t>(i)]);
        return IntPoly(std::move(r));
    }

    BigInt eval(const BigInt& x) const {
        BigInt r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }
    BigRat eval(const BigRat& x) const {
        BigRat r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + BigRat(c_[i]);
        return r;
    }

    BigInt content() const {
        BigInt g(0);
        for (const auto& x : c_) g = BigInt::gcd(g, x);
        return g;
    }
    IntPoly primitive_part() const {
        if (is_zero()) return *this;
        BigInt g = content();
        if (lead().sign() < 0) g = -g;
        std::vector<BigInt> r = c_;
        for (auto& x : r) x = x.divexact(g);
        return IntPoly(std::move(r));
    }

    // Exact division; throws if the division has a remainder.
    IntPoly divexact(const IntPoly& b) const {
        if (b.is_zero()) throw std::domain_error("IntPoly::divexact by zero");
        IntPoly rem = *this;
        std::vector<BigInt> q(is_zero() ? 0 : static_cast<size_t>(std::max(0, degree() - b.degree()) + 1), BigInt(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            if (!rem.lead().divisible_by(b.lead())) throw std::domain_error("IntPoly::divexact: not divisible");
            BigInt f = rem.lead().divexact(b.lead());
            int k = rem.degree() - b.degree();
            q[static_cast<size_t>(k)] = f;
            std::vector<BigInt> t(static_cast<size_t>(k) + 1, BigInt(0));
            t[static_cast<size_t>(k)] = f;
            rem = rem - IntPoly(std::move(t)) * b;
        }
        if (!rem.is_zero()) throw std::domain_error("IntPoly::divexact: not divisible");
        return IntPoly(std::move(q));
    }

    // f(x + a)
    IntPoly shift(const BigInt& a) const {
        IntPoly r;
        IntPoly base({1});
        IntPoly lin = IntPoly({0, 1}) + IntPoly::constant(a);
        for (int i = 0; i <= degree(); ++i) {
            r = r + coeff(i) * base;
            base = base * lin;
        }
        return r;
    }
    // x^n f(1/x) with n = degree (coefficient reversal)
    IntPoly reverse() const {
        std::vector<BigInt> r(c_.rbegin(), c_.rend());
        return IntPoly(std::move(r));
    }

    PolyFp reduce_mod(std::uint64_t p) const {
        std::vector<std::uint64_t> r;
        BigInt bp(static_cast<long>(p));
        for (const auto& x : c_) {
            BigInt m = x.fdiv_r(bp);
            r.push_back(static_cast<std::uint64_t>(m.to_long()));
        }
        return PolyFp(p, std::move(r));
    }

    // Serialization: comma-separated coefficients, constant term first.
    std::string str_coeffs() const {
        std::ostringstream os;
        if (is_zero()) return "0";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ",";
            os << c_[i];
        }
        return os.str();
    }
    static IntPoly parse_coeffs(const std::string& s) {
        std::vector<BigInt> r;
        std::string cur;
        std::istringstream is(s);
        while (std::getline(is, cur, ',')) {
            size_t b = cur.find_first_not_of(" \t");
            size_t e = cur.find_last_not_of(" \t");
            if (b == std::string::npos) throw std::invalid_argument("empty polynomial coefficient");
            r.emplace_back(cur.substr(b, e - b + 1));
        }
        if (r.empty()) throw std::invalid_argument("empty polynomial");
        return IntPoly(std::move(r));
    }

    // Human-readable form, highest degree first.
    std::string str_pretty() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            BigInt a = coeff(i);
            if (a.is_zero()) continue;
            if (!first) os << (a.sign() > 0 ? " + " : " - ");
            else if (a.sign() < 0)
                os << "-";
            BigInt m = a.abs();
            if (i == 0 || !m.is_one()) os << m;
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

// Fraction-free (Bareiss) determinant of a square BigInt matrix given as rows.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt denom(1);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return BigInt(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divexact(denom);
            }
            m[i][k] = BigInt(0);
        }
        denom = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Sylvester-matrix resultant Res(f, g).
inline BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return BigInt(0);
    int n = f.degree(), m = g.degree();
    if (n == 0) return BigInt::pow(f.coeff(0), static_cast<unsigned long>(m));
    if (m == 0) return BigInt::pow(g.coeff(0), static_cast<unsigned long>(n));
    size_t dim = static_cast<size_t>(n + m);
    std::vector<std::vector<BigInt>> s(dim, std::vector<BigInt>(dim, BigInt(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = f.coeff(n - j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[static_cast<size_t>(m + i)][static_cast<size_t>(i + j)] = g.coeff(m - j);
    return bareiss_det(std::move(s));
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') for monic f.
inline BigInt poly_discriminant(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("poly_discriminant: degree >= 1 required");
    if (!f.monic()) throw std::invalid_argument("poly_discriminant: non-monic input rejected");
    BigInt r = resultant(f, f.derivative());
    int n = f.degree();
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

// Primitive-PRS gcd in Z[x] (result primitive with positive lead).
inline IntPoly gcd_poly(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    BigInt ca = a.content(), cb = b.content();
    BigInt g = BigInt::gcd(ca, cb);
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        int d = a.degree() - b.degree();
        if (d < 0) {
            std::swap(a, b);
            continue;
        }
        IntPoly r = BigInt::pow(b.lead(), static_cast<unsigned long>(d) + 1) * a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            BigInt f = r.lead().divexact(b.lead());
            int k = r.degree() - b.degree();
            std::vector<BigInt> t(static_cast<size_t>(k) + 1, BigInt(0));
            t[static_cast<size_t>(k)] = f;
            r = r - IntPoly(std::move(t)) * b;
        }
        a = b;
        b = r.is_zero() ? r : r.primitive_part();
    }
    return IntPoly(std::vector<BigInt>{g}) * a;
}

inline bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return gcd_poly(f, f.derivative()).degree() == 0;
}

inline IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero() || f.degree() == 0) return f;
    IntPoly g = gcd_poly(f, f.derivative());
    if (g.degree() == 0) return f.primitive_part();
    IntPoly q = (BigInt::pow(g.lead(), static_cast<unsigned long>(f.degree())) * f).divexact(g);
    return q.primitive_part();
}

// n-th cyclotomic polynomial by the division recurrence.
inline const IntPoly& cyclotomic(int n) {
    static std::map<int, IntPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> xn(static_cast<size_t>(n) + 1, BigInt(0));
    xn[0] = BigInt(-1);
    xn[static_cast<size_t>(n)] = BigInt(1);
    IntPoly num(std::move(xn));
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = num.divexact(cyclotomic(d));
    }
    return cache.emplace(n, std::move(num)).first->second;
}

inline int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

// Dense rational polynomial; just enough for internal use.
struct RatPoly {
    std::vector<BigRat> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> cc) : c(std::move(cc)) { trim(); }
    explicit RatPoly(const IntPoly& f) {
        for (const auto& x : f.coeffs()) c.emplace_back(x);
    }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    BigRat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : BigRat(0);
    }
    BigRat eval(const BigRat& x) const {
        BigRat r(0);
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }
    // Clears denominators to a primitive integer polynomial.
    IntPoly to_int_primitive() const {
        BigInt l(1);
        for (const auto& x : c) l = BigInt::lcm(l, x.den());
        std::vector<BigInt> r;
        for (const auto& x : c) r.push_back((BigRat(l) * x).num());
        return IntPoly(std::move(r)).primitive_part();
    }
};

inline RatPoly add(const RatPoly& a, const RatPoly& b) {
    std::vector<BigRat> r(std::max(a.c.size(), b.c.size()), BigRat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return RatPoly(std::move(r));
}
inline RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<BigRat> r(a.c.size() + b.c.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return RatPoly(std::move(r));
}
inline void divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw std::domain_error("RatPoly divrem by zero");
    q = RatPoly();
    r = a;
    q.c.assign(a.c.size(), BigRat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        BigRat f = r.c.back() / b.c.back();
        int k = r.degree() - b.degree();
        q.c[static_cast<size_t>(k)] = f;
        std::vector<BigRat> t(static_cast<size_t>(k) + 1, BigRat(0));
        t[static_cast<size_t>(k)] = f;
        RatPoly tp(std::move(t));
        RatPoly prod = mul(tp, b);
        std::vector<BigRat> nr(std::max(r.c.size(), prod.c.size()), BigRat(0));
        for (size_t i = 0; i < nr.size(); ++i) nr[i] = r.coeff(static_cast<int>(i)) - prod.coeff(static_cast<int>(i));
        r = RatPoly(std::move(nr));
    }
    q.trim();
}

}  // namespace quartic
