#pragma once

// Exact matrices: BigInt matrices with row-style Hermite normal form,
// Bareiss determinants, rational Gauss-Jordan, congruence-preimage
// lattices, and small F_p kernels.

#include "quartic/bigint.hpp"
#include "quartic/fp.hpp"
#include "quartic/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace quartic {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}
    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = BigInt(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    BigInt& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }
    friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    IntMatrix transpose() const {
        IntMatrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    BigInt det() const {
        if (rows_ != cols_) throw std::invalid_argument("IntMatrix::det: not square");
        std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(cols_));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m[i][j] = (*this)(i, j);
        return bareiss_det(std::move(m));
    }

    BigInt trace() const {
        BigInt t(0);
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    size_t rows_, cols_;
    std::vector<BigInt> a_;
};

// Row-style Hermite normal form: unimodular row operations only, so the
// row span over Z is preserved. Pivots positive, entries above a pivot
// reduced into [0, pivot). Zero rows sink to the bottom; shape preserved.
inline IntMatrix hnf(IntMatrix m) {
    size_t rows = m.rows(), cols = m.cols();
    size_t r = 0;
    for (size_t j = 0; j < cols && r < rows; ++j) {
        // clear below position (r, j) with gcd steps
        for (size_t i = r + 1; i < rows; ++i) {
            if (m(i, j).is_zero()) continue;
            if (m(r, j).is_zero()) {
                for (size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(i, k));
                continue;
            }
            BigInt s, t;
            BigInt g = BigInt::gcdext(m(r, j), m(i, j), s, t);
            BigInt u = m(r, j).divexact(g), v = m(i, j).divexact(g);
            for (size_t k = 0; k < cols; ++k) {
                BigInt a = m(r, k), b = m(i, k);
                m(r, k) = s * a + t * b;
                m(i, k) = u * b - v * a;
            }
        }
        if (m(r, j).is_zero()) continue;
        if (m(r, j).sign() < 0)
            for (size_t k = 0; k < cols; ++k) m(r, k) = -m(r, k);
        // reduce entries above the pivot
        for (size_t i = 0; i < r; ++i) {
            if (m(i, j).is_zero()) continue;
            BigInt q = m(i, j).fdiv_q(m(r, j));
            if (q.is_zero()) continue;
            for (size_t k = 0; k < cols; ++k) m(i, k) -= q * m(r, k);
        }
        ++r;
    }
    return m;
}

// Membership of an integer vector in the row span (over Z) of an HNF matrix.
inline bool in_row_span_hnf(const IntMatrix& h, const std::vector<BigInt>& v) {
    if (v.size() != h.cols()) throw std::invalid_argument("in_row_span_hnf: size mismatch");
    std::vector<BigInt> w = v;
    size_t r = 0;
    for (size_t j = 0; j < h.cols(); ++j) {
        if (r < h.rows() && !h(r, j).is_zero()) {
            if (!w[j].divisible_by(h(r, j))) return false;
            BigInt q = w[j].divexact(h(r, j));
            if (!q.is_zero())
                for (size_t k = j; k < h.cols(); ++k) w[k] -= q * h(r, k);
            ++r;
        } else if (!w[j].is_zero()) {
            return false;
        }
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

// Dense rational matrix helpers.
using RatMatrix = std::vector<std::vector<BigRat>>;

inline RatMatrix rat_identity(size_t n) {
    RatMatrix m(n, std::vector<BigRat>(n, BigRat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = BigRat(1);
    return m;
}

inline RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y) {
    size_t n = x.size(), k = y.size(), m = y.empty() ? 0 : y[0].size();
    RatMatrix r(n, std::vector<BigRat>(m, BigRat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (x[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += x[i][t] * y[t][j];
        }
    return r;
}

// Gauss-Jordan inverse; throws on singular input.
inline RatMatrix rat_inverse(RatMatrix m) {
    size_t n = m.size();
    RatMatrix inv = rat_identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("rat_inverse: singular matrix");
        std::swap(m[piv], m[k]);
        std::swap(inv[piv], inv[k]);
        BigRat d = m[k][k].inv();
        for (size_t j = 0; j < n; ++j) {
            m[k][j] *= d;
            inv[k][j] *= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].is_zero()) continue;
            BigRat f = m[i][k];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

// Solve M x = b exactly (square nonsingular M).
inline std::vector<BigRat> rat_solve(RatMatrix m, std::vector<BigRat> b) {
    size_t n = m.size();
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("rat_solve: singular matrix");
        std::swap(m[piv], m[k]);
        std::swap(b[piv], b[k]);
        BigRat d = m[k][k].inv();
        for (size_t j = k; j < n; ++j) m[k][j] *= d;
        b[k] *= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].is_zero()) continue;
            BigRat f = m[i][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
            b[i] -= f * b[k];
        }
    }
    return b;
}

// A lattice in Q^n given as rows of an integer matrix divided by a common
// positive denominator. Rows are kept in HNF, zero rows dropped.
struct RatLattice {
    BigInt den{1};
    IntMatrix rows;  // full rank over its row count

    void canonicalize() {
        rows = hnf(rows);
        size_t nz = rows.rows();
        while (nz > 0) {
            bool zero = true;
            for (size_t j = 0; j < rows.cols(); ++j)
                if (!rows(nz - 1, j).is_zero()) zero = false;
            if (!zero) break;
            --nz;
        }
        IntMatrix t(nz, rows.cols());
        for (size_t i = 0; i < nz; ++i)
            for (size_t j = 0; j < rows.cols(); ++j) t(i, j) = rows(i, j);
        // remove common content shared by the denominator
        BigInt g = den;
        for (size_t i = 0; i < t.rows(); ++i)
            for (size_t j = 0; j < t.cols(); ++j) g = BigInt::gcd(g, t(i, j));
        if (!g.is_one() && !g.is_zero()) {
            den = den.divexact(g);
            for (size_t i = 0; i < t.rows(); ++i)
                for (size_t j = 0; j < t.cols(); ++j) t(i, j) = t(i, j).divexact(g);
        }
        rows = std::move(t);
    }

    size_t rank() const { return rows.rows(); }
    size_t dim() const { return rows.cols(); }

    bool contains(const std::vector<BigRat>& v) const {
        std::vector<BigInt> w;
        w.reserve(v.size());
        for (const auto& x : v) {
            BigRat scaled = BigRat(den) * x;
            if (!scaled.is_integer()) return false;
            w.push_back(scaled.num());
        }
        return in_row_span_hnf(rows, w);
    }

    std::vector<BigRat> basis_row(size_t i) const {
        std::vector<BigRat> v;
        for (size_t j = 0; j < rows.cols(); ++j) v.emplace_back(rows(i, j), den);
        return v;
    }

    friend bool operator==(const RatLattice& a, const RatLattice& b) {
        return a.den == b.den && a.rows == b.rows;
    }
};

inline RatLattice lattice_from_rat_rows(const std::vector<std::vector<BigRat>>& vs) {
    if (vs.empty()) throw std::invalid_argument("lattice_from_rat_rows: empty");
    size_t n = vs[0].size();
    BigInt den(1);
    for (const auto& v : vs)
        for (const auto& x : v) den = BigInt::lcm(den, x.den());
    IntMatrix m(vs.size(), n);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = (BigRat(den) * vs[i][j]).num();
    RatLattice l{den, std::move(m)};
    l.canonicalize();
    return l;
}

// {x in Q^n : A x in Z^m} for a rational matrix A of full column rank,
// returned as a RatLattice whose rows are the basis vectors.
inline RatLattice congruence_preimage(const RatMatrix& a) {
    size_t m = a.size();
    if (m == 0) throw std::invalid_argument("congruence_preimage: empty");
    size_t n = a[0].size();
    BigInt d(1);
    for (const auto& row : a)
        for (const auto& x : row) d = BigInt::lcm(d, x.den());
    IntMatrix nmat(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) nmat(i, j) = (BigRat(d) * a[i][j]).num();
    IntMatrix h = hnf(std::move(nmat));
    // top n rows form a nonsingular upper-triangular block when rank = n
    RatMatrix hq(n, std::vector<BigRat>(n));
    for (size_t i = 0; i < n; ++i) {
        bool nonzero = false;
        for (size_t j = 0; j < n; ++j) {
            hq[i][j] = BigRat(h(i, j));
            if (!h(i, j).is_zero()) nonzero = true;
        }
        if (!nonzero) throw std::domain_error("congruence_preimage: rank-deficient system");
    }
    RatMatrix hinv = rat_inverse(std::move(hq));
    // solution lattice is spanned by d * (columns of H^{-1})
    std::vector<std::vector<BigRat>> rows(n, std::vector<BigRat>(n));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) rows[j][i] = BigRat(d) * hinv[i][j];
    return lattice_from_rat_rows(rows);
}

// Kernel basis of an m x n matrix over F_p (vectors of length n).
inline std::vector<std::vector<std::uint64_t>> fp_kernel(std::vector<std::vector<std::uint64_t>> m,
                                                         std::uint64_t p) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<long> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t j = 0; j < cols && r < rows; ++j) {
        size_t piv = r;
        while (piv < rows && m[piv][j] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = invmod(m[r][j], p);
        for (size_t k = 0; k < cols; ++k) m[r][k] = mulmod(m[r][k], inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][j] % p == 0) continue;
            std::uint64_t f = m[i][j];
            for (size_t k = 0; k < cols; ++k) m[i][k] = submod(m[i][k], mulmod(f, m[r][k], p), p);
        }
        pivot_of_col[j] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::vector<std::uint64_t>> ker;
    for (size_t j = 0; j < cols; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[j] = 1;
        for (size_t jj = 0; jj < cols; ++jj) {
            if (pivot_of_col[jj] >= 0) {
                std::uint64_t val = m[static_cast<size_t>(pivot_of_col[jj])][j];
                v[jj] = val % p == 0 ? 0 : p - val;
            }
        }
        ker.push_back(std::move(v));
    }
    return ker;
}

}  // namespace quartic
