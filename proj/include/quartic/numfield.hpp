#pragma once

// Number fields of degree 1, 2, 4: exact element arithmetic in the power
// basis, certified embeddings, quadratic subfield detection through the
// resolvent cubic, and bounded search for roots of a polynomial inside the
// field (shared by kappa, automorphism counting and isomorphism tests).

#include "quartic/ball.hpp"
#include "quartic/factor.hpp"
#include "quartic/interval.hpp"
#include "quartic/matrix.hpp"
#include "quartic/poly.hpp"
#include "quartic/roots.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quartic {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    const IntPoly& defining() const { return f_; }
    int degree() const { return f_.degree(); }
    int real_embeddings() const { return r_; }
    int complex_pairs() const { return s_; }
    bool totally_complex() const { return degree() == 4 && r_ == 0 && s_ == 2; }
    const BigInt& poly_disc() const { return poly_disc_; }
    // Elements of the maximal order have power-basis denominators dividing this.
    const BigInt& denominator_bound() const { return den_bound_; }
    const std::vector<RootBox>& roots() const { return roots_; }

    // Fresh root boxes with radius <= eps, in the canonical embedding order.
    std::vector<RootBox> roots_refined(const BigRat& eps) const {
        if (eps >= default_eps_) return roots_;
        return isolate_roots(f_, eps);
    }

    // coords of alpha^k for k = 0 .. 2n-2, reduced mod f (integer entries).
    const std::vector<std::vector<BigRat>>& power_table() const { return powers_; }

    friend FieldPtr make_field(const IntPoly& f);

private:
    IntPoly f_;
    int r_ = 0, s_ = 0;
    BigInt poly_disc_;
    BigInt den_bound_;
    std::vector<RootBox> roots_;
    BigRat default_eps_;
    std::vector<std::vector<BigRat>> powers_;
};

// A witness factor for a reducible defining polynomial rides along in the
// exception message.
class ReducibleError : public std::invalid_argument {
public:
    ReducibleError(const std::string& msg, IntPoly factor)
        : std::invalid_argument(msg), factor_(std::move(factor)) {}
    const IntPoly& factor() const { return factor_; }

private:
    IntPoly factor_;
};

namespace fielddetail {

// Integer quadratic factors of a monic integer quartic, located through the
// root boxes: a monic quadratic factor's coefficients are (up to sign) the
// sum and product of two of the quartic's roots.
inline std::optional<IntPoly> quadratic_factor(const IntPoly& f) {
    auto boxes = isolate_roots(squarefree_part(f), BigRat(1, BigInt(1) == BigInt(1) ? 1048576 : 1));
    // pair up all 2-subsets; refine until sum/product intervals trap at most
    // one integer each
    for (unsigned k = 20; k <= 200; k += 60) {
        BigRat eps = BigRat(1, BigInt::pow(BigInt(2), k));
        auto bs = isolate_roots(squarefree_part(f), eps);
        size_t n = bs.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                ComplexBox sum = ComplexBox(bs[i].box.re + bs[j].box.re, bs[i].box.im + bs[j].box.im);
                ComplexBox prod = bs[i].box * bs[j].box;
                if (!sum.im.contains_zero() || !prod.im.contains_zero()) continue;
                BigInt p = (-sum.re.mid()).round();
                BigInt q = prod.re.mid().round();
                if (!sum.re.contains(BigRat(-p)) || !prod.re.contains(BigRat(q))) continue;
                IntPoly cand({q, p, BigInt(1)});
                IntPoly quo, rem;
                // exact trial division
                try {
                    quo = f.divexact(cand);
                } catch (const std::domain_error&) {
                    continue;
                }
                return cand;
            }
        }
    }
    return std::nullopt;
}

}  // namespace fielddetail

inline FieldPtr make_field(const IntPoly& f) {
    if (f.is_zero() || !f.monic()) throw std::invalid_argument("make_field: monic integer polynomial required");
    int n = f.degree();
    if (n != 1 && n != 2 && n != 4) throw std::invalid_argument("make_field: degree must be 1, 2 or 4");

    if (n >= 2) {
        for (const auto& r : rootdetail::integer_roots_monic(f)) {
            IntPoly w({-r, BigInt(1)});
            throw ReducibleError("make_field: reducible, factor " + w.str_pretty(), w);
        }
    }
    if (n == 2) {
        BigInt disc = f.coeff(1) * f.coeff(1) - BigInt(4) * f.coeff(0);
        if (disc.is_square())
            throw ReducibleError("make_field: reducible quadratic", IntPoly({BigInt(0), BigInt(1)}));
    }
    if (n == 4) {
        if (!is_squarefree(f)) {
            IntPoly g = gcd_poly(f, f.derivative());
            throw ReducibleError("make_field: reducible, factor " + g.str_pretty(), g);
        }
        if (auto q = fielddetail::quadratic_factor(f))
            throw ReducibleError("make_field: reducible, factor " + q->str_pretty(), *q);
    }

    auto fld = std::make_shared<NumberField>();
    auto* m = const_cast<NumberField*>(fld.get());
    m->f_ = f;
    m->poly_disc_ = n == 1 ? BigInt(1) : poly_discriminant(f);
    m->den_bound_ = n == 1 ? BigInt(1) : square_part(m->poly_disc_);
    m->default_eps_ = BigRat(1, BigInt::pow(BigInt(2), 96));
    m->roots_ = isolate_roots(f, m->default_eps_);
    m->r_ = 0;
    for (const auto& b : m->roots_)
        if (b.is_real) ++m->r_;
    m->s_ = (n - m->r_) / 2;

    // power table alpha^k, k = 0..2n-2
    std::vector<std::vector<BigRat>> powers;
    std::vector<BigRat> cur(static_cast<size_t>(n), BigRat(0));
    cur[0] = BigRat(1);
    powers.push_back(cur);
    for (int k = 1; k <= 2 * n - 2; ++k) {
        std::vector<BigRat> nxt(static_cast<size_t>(n), BigRat(0));
        // multiply by alpha: shift, then reduce the overflow via f
        BigRat top = cur[static_cast<size_t>(n - 1)];
        for (int i = n - 1; i >= 1; --i) nxt[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        nxt[0] = BigRat(0);
        if (!top.is_zero()) {
            for (int i = 0; i < n; ++i) nxt[static_cast<size_t>(i)] -= top * BigRat(f.coeff(i));
        }
        powers.push_back(nxt);
        cur = nxt;
    }
    m->powers_ = std::move(powers);
    return fld;
}

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<BigRat> coords)
        : field_(std::move(field)), c_(std::move(coords)) {
        if (static_cast<int>(c_.size()) != field_->degree())
            throw std::invalid_argument("FieldElement: coordinate length != degree");
    }
    static FieldElement from_rational(FieldPtr field, const BigRat& q) {
        std::vector<BigRat> c(static_cast<size_t>(field->degree()), BigRat(0));
        c[0] = q;
        return FieldElement(std::move(field), std::move(c));
    }
    static FieldElement generator(FieldPtr field) {
        std::vector<BigRat> c(static_cast<size_t>(field->degree()), BigRat(0));
        if (field->degree() == 1)
            c[0] = BigRat(-field->defining().coeff(0));
        else
            c[1] = BigRat(1);
        return FieldElement(std::move(field), std::move(c));
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<BigRat>& coords() const { return c_; }
    int degree() const { return field_->degree(); }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    bool same_field(const FieldElement& o) const { return field_->defining() == o.field_->defining(); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_->defining() == b.field_->defining() && a.c_ == b.c_;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        std::vector<BigRat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
        return FieldElement(a.field_, std::move(c));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        std::vector<BigRat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
        return FieldElement(a.field_, std::move(c));
    }
    FieldElement operator-() const {
        std::vector<BigRat> c(c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
        return FieldElement(field_, std::move(c));
    }
    friend FieldElement operator*(const BigRat& s, const FieldElement& a) {
        std::vector<BigRat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
        return FieldElement(a.field_, std::move(c));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        size_t n = a.c_.size();
        std::vector<BigRat> prod(2 * n - 1, BigRat(0));
        for (size_t i = 0; i < n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        const auto& table = a.field_->power_table();
        std::vector<BigRat> c(n, BigRat(0));
        for (size_t k = 0; k < prod.size(); ++k) {
            if (prod[k].is_zero()) continue;
            for (size_t i = 0; i < n; ++i) c[i] += prod[k] * table[k][i];
        }
        return FieldElement(a.field_, std::move(c));
    }

    // matrix of multiplication by this element on the power basis (columns
    // indexed by basis vectors alpha^j)
    RatMatrix mult_matrix() const {
        size_t n = c_.size();
        RatMatrix m(n, std::vector<BigRat>(n, BigRat(0)));
        FieldElement cur = *this;
        for (size_t j = 0; j < n; ++j) {
            for (size_t i = 0; i < n; ++i) m[i][j] = cur.c_[i];
            if (j + 1 < n) cur = cur * FieldElement::generator(field_);
        }
        return m;
    }

    FieldElement inv() const {
        if (is_zero()) throw std::domain_error("FieldElement::inv: zero");
        size_t n = c_.size();
        std::vector<BigRat> e0(n, BigRat(0));
        e0[0] = BigRat(1);
        return FieldElement(field_, rat_solve(mult_matrix(), std::move(e0)));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }

    BigRat norm() const {
        RatMatrix m = mult_matrix();
        size_t n = c_.size();
        // exact determinant by fraction-free clearing to integers
        BigInt den(1);
        for (const auto& row : m)
            for (const auto& x : row) den = BigInt::lcm(den, x.den());
        IntMatrix im(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) im(i, j) = (BigRat(den) * m[i][j]).num();
        BigRat d(im.det());
        BigRat scale = BigRat(BigInt(1), BigInt::pow(den, static_cast<unsigned long>(n)));
        return d * scale;
    }
    BigRat trace() const {
        BigRat t(0);
        RatMatrix m = mult_matrix();
        for (size_t i = 0; i < c_.size(); ++i) t += m[i][i];
        return t;
    }

    // Monic minimal polynomial; requires an integral element (the monic
    // minimal polynomial must have integer coefficients).
    IntPoly minpoly() const {
        size_t n = c_.size();
        // rows = coords of powers e^0, e^1, ...
        std::vector<std::vector<BigRat>> rows;
        FieldElement cur = FieldElement::from_rational(field_, BigRat(1));
        for (size_t k = 0; k <= n; ++k) {
            rows.push_back(cur.c_);
            // solve for dependency of the last row on previous ones
            size_t m = rows.size();
            if (m >= 2) {
                // Gaussian elimination on the first m-1 rows
                std::vector<std::vector<BigRat>> a(rows.begin(), rows.end() - 1);
                std::vector<BigRat> target = rows.back();
                std::vector<BigRat> solution(m - 1, BigRat(0));
                // solve a^T x = target in the least-structure way: augment
                std::vector<std::vector<BigRat>> aug(n, std::vector<BigRat>(m - 1 + 1, BigRat(0)));
                for (size_t i = 0; i < n; ++i) {
                    for (size_t r = 0; r + 1 < m; ++r) aug[i][r] = a[r][i];
                    aug[i][m - 1] = target[i];
                }
                // row reduce
                size_t rank = 0;
                std::vector<long> piv(m - 1, -1);
                for (size_t col = 0; col + 1 < m && rank < n; ++col) {
                    size_t p = rank;
                    while (p < n && aug[p][col].is_zero()) ++p;
                    if (p == n) continue;
                    std::swap(aug[p], aug[rank]);
                    BigRat d = aug[rank][col].inv();
                    for (size_t j = 0; j < m; ++j) aug[rank][j] *= d;
                    for (size_t i = 0; i < n; ++i) {
                        if (i == rank || aug[i][col].is_zero()) continue;
                        BigRat fct = aug[i][col];
                        for (size_t j = 0; j < m; ++j) aug[i][j] -= fct * aug[rank][j];
                    }
                    piv[col] = static_cast<long>(rank);
                    ++rank;
                }
                bool solvable = true;
                for (size_t i = rank; i < n; ++i)
                    if (!aug[i][m - 1].is_zero()) solvable = false;
                if (solvable) {
                    for (size_t col = 0; col + 1 < m; ++col)
                        if (piv[col] >= 0) solution[col] = aug[static_cast<size_t>(piv[col])][m - 1];
                    std::vector<BigRat> mp;
                    for (size_t i = 0; i + 1 < m; ++i) mp.push_back(-solution[i]);
                    mp.emplace_back(1);
                    // integrality check
                    std::vector<BigInt> out;
                    for (const auto& q : mp) {
                        if (!q.is_integer()) throw std::domain_error("minpoly: non-integral element");
                        out.push_back(q.num());
                    }
                    return IntPoly(std::move(out));
                }
            }
            cur = cur * *this;
        }
        throw std::logic_error("minpoly: no dependency found");
    }

    // Certified box for the image under the i-th embedding, radius <= eps.
    ComplexBox embed(size_t i, const BigRat& eps) const {
        if (i >= c_.size()) throw std::invalid_argument("embed: bad embedding index");
        BigRat scale(1);
        for (const auto& x : c_) {
            BigRat a = x.abs();
            if (a > scale) scale = a;
        }
        BigRat target = eps / (BigRat(4 * static_cast<long>(c_.size())) * (scale + BigRat(1)));
        for (int tries = 0; tries < 30; ++tries) {
            auto boxes = field_->roots_refined(target);
            ComplexBox z = boxes[i].box;
            ComplexBox acc = ComplexBox::point(BigRat(0), BigRat(0));
            for (size_t k = c_.size(); k-- > 0;) {
                acc = acc * z + ComplexBox::point(c_[k], BigRat(0));
            }
            if ((acc.re.width() + acc.im.width()) * BigRat(1, 2) <= eps) return acc;
            target = target * BigRat(1, 1024);
        }
        throw std::runtime_error("embed: failed to reach target radius");
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += c_[i].str();
        }
        return s + ")";
    }

private:
    void check(const FieldElement& o) const {
        if (!same_field(o)) throw std::invalid_argument("FieldElement: mixed-field operands");
    }
    FieldPtr field_;
    std::vector<BigRat> c_;
};

inline FieldElement elem_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement elem_inv(const FieldElement& a) { return a.inv(); }
inline IntPoly elem_minpoly(const FieldElement& a) { return a.minpoly(); }
inline BigRat elem_norm(const FieldElement& a) { return a.norm(); }
inline BigRat elem_trace(const FieldElement& a) { return a.trace(); }

// All roots of a monic integer polynomial g inside F, found by matching
// certified embedding values and verified exactly. den_bound bounds the
// power-basis denominators of candidates (integral elements of F).
inline std::vector<FieldElement> roots_in_field(const FieldPtr& F, const IntPoly& g,
                                                std::optional<BigInt> den_bound_opt = std::nullopt) {
    if (!g.monic() || g.degree() < 1) throw std::invalid_argument("roots_in_field: monic g required");
    int n = F->degree();
    std::vector<FieldElement> found;
    auto push_unique = [&](const FieldElement& e) {
        for (const auto& x : found)
            if (x == e) return;
        found.push_back(e);
    };

    if (g.degree() == 1) {
        push_unique(FieldElement::from_rational(F, BigRat(-g.coeff(0))));
        return found;
    }
    if (g.degree() > n) return found;

    BigInt den_bound = den_bound_opt.value_or(F->denominator_bound());

    // a root in F has each embedding value equal to a root of g, with the
    // assignment respecting complex conjugation and real embeddings
    for (unsigned k = 24;; k *= 2) {
        if (k > 1u << 12) throw std::runtime_error("roots_in_field: precision limit");
        BigRat eps(1, BigInt::pow(BigInt(2), k));
        auto fb = F->roots_refined(eps);
        std::vector<RootBox> gb;
        try {
            gb = isolate_roots(squarefree_part(g), eps);
        } catch (const std::invalid_argument&) {
            return found;
        }
        size_t gn = gb.size();
        // conjugate pairing of F's roots
        std::vector<long> conj_of(static_cast<size_t>(n), -1);
        for (int i = 0; i < n; ++i) {
            if (fb[static_cast<size_t>(i)].is_real) {
                conj_of[static_cast<size_t>(i)] = i;
                continue;
            }
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const auto& a = fb[static_cast<size_t>(i)].box;
                const auto& b = fb[static_cast<size_t>(j)].box;
                if (a.re.lo == b.re.lo && a.re.hi == b.re.hi && a.im.lo == -b.im.hi && a.im.hi == -b.im.lo)
                    conj_of[static_cast<size_t>(i)] = j;
            }
        }
        std::vector<long> gconj(gn, -1);
        for (size_t i = 0; i < gn; ++i) {
            if (gb[i].is_real) {
                gconj[i] = static_cast<long>(i);
                continue;
            }
            for (size_t j = 0; j < gn; ++j) {
                if (i == j) continue;
                const auto& a = gb[i].box;
                const auto& b = gb[j].box;
                if (a.re.lo == b.re.lo && a.re.hi == b.re.hi && a.im.lo == -b.im.hi && a.im.hi == -b.im.lo)
                    gconj[i] = static_cast<long>(j);
            }
        }
        bool pairing_ok = true;
        for (int i = 0; i < n; ++i)
            if (conj_of[static_cast<size_t>(i)] < 0) pairing_ok = false;
        for (size_t i = 0; i < gn; ++i)
            if (gconj[i] < 0) pairing_ok = false;
        if (!pairing_ok) continue;

        // enumerate equivariant assignments
        std::vector<size_t> assign(static_cast<size_t>(n), 0);
        std::vector<std::vector<size_t>> assignments;
        std::vector<long> fixed(static_cast<size_t>(n), -1);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                assignments.emplace_back(fixed.begin(), fixed.end());
                return;
            }
            if (fixed[static_cast<size_t>(i)] >= 0) {
                self(self, i + 1);
                return;
            }
            for (size_t t = 0; t < gn; ++t) {
                bool real_emb = fb[static_cast<size_t>(i)].is_real;
                if (real_emb && !gb[t].is_real) continue;
                fixed[static_cast<size_t>(i)] = static_cast<long>(t);
                long ci = conj_of[static_cast<size_t>(i)];
                long old = -1;
                bool consistent = true;
                if (ci != i) {
                    old = fixed[static_cast<size_t>(ci)];
                    long want = gconj[t];
                    if (old >= 0 && old != want) consistent = false;
                    if (old < 0) fixed[static_cast<size_t>(ci)] = want;
                }
                if (consistent) self(self, i + 1);
                fixed[static_cast<size_t>(i)] = -1;
                if (ci != i && old < 0) fixed[static_cast<size_t>(ci)] = -1;
            }
        };
        rec(rec, 0);

        bool need_refine = false;
        for (const auto& as : assignments) {
            // each g-root must occur n/deg(g) times for a genuine root whose
            // minimal polynomial is exactly g; allow smaller-degree g roots
            // too (counts then differ), so skip the count filter and let the
            // exact verification decide.
            // build the real linear system for the coordinates
            // unknowns: c_0..c_{n-1}; equations per embedding i:
            //   sum_j c_j * root_i^j = g-root_{as[i]}
            std::vector<std::vector<RatInterval>> rows;
            std::vector<RatInterval> rhs;
            for (int i = 0; i < n; ++i) {
                long ci = conj_of[static_cast<size_t>(i)];
                if (ci < i) continue;  // one equation per conjugate class
                // compute powers of the root box
                std::vector<ComplexBox> pw;
                ComplexBox z = fb[static_cast<size_t>(i)].box;
                ComplexBox cur = ComplexBox::point(BigRat(1), BigRat(0));
                for (int j = 0; j < n; ++j) {
                    pw.push_back(cur);
                    cur = cur * z;
                }
                std::vector<RatInterval> re_row, im_row;
                for (int j = 0; j < n; ++j) {
                    re_row.push_back(pw[static_cast<size_t>(j)].re);
                    im_row.push_back(pw[static_cast<size_t>(j)].im);
                }
                rows.push_back(re_row);
                rhs.push_back(gb[as[static_cast<size_t>(i)]].box.re);
                if (ci != i) {
                    rows.push_back(im_row);
                    rhs.push_back(gb[as[static_cast<size_t>(i)]].box.im);
                }
            }
            // interval Gaussian elimination
            size_t m = rows.size();
            if (m != static_cast<size_t>(n)) continue;
            bool singular = false;
            for (size_t col = 0; col < m && !singular; ++col) {
                size_t piv = col;
                while (piv < m && rows[piv][col].contains_zero()) ++piv;
                if (piv == m) {
                    singular = true;
                    break;
                }
                std::swap(rows[piv], rows[col]);
                std::swap(rhs[piv], rhs[col]);
                RatInterval d = rows[col][col];
                for (size_t i2 = 0; i2 < m; ++i2) {
                    if (i2 == col) continue;
                    if (rows[i2][col].contains_zero() && rows[i2][col].is_point()) continue;
                    RatInterval f2 = rows[i2][col] / d;
                    for (size_t j = col; j < m; ++j) rows[i2][j] = rows[i2][j] - f2 * rows[col][j];
                    rows[i2][col] = RatInterval::point(BigRat(0));
                    rhs[i2] = rhs[i2] - f2 * rhs[col];
                }
            }
            if (singular) {
                need_refine = true;
                continue;
            }
            std::vector<BigRat> cand;
            bool resolved = true;
            for (size_t i2 = 0; i2 < m; ++i2) {
                RatInterval sol = rhs[i2] / rows[i2][i2];
                // candidate = nearest multiple of 1/den_bound
                BigRat scaled_mid = sol.mid() * BigRat(den_bound);
                BigRat c = BigRat(scaled_mid.round(), den_bound);
                if (!sol.contains(c)) {
                    resolved = false;
                    break;
                }
                // uniqueness: width < 1/den_bound
                if (sol.width() * BigRat(den_bound) >= BigRat(1)) {
                    resolved = false;
                    need_refine = true;
                    break;
                }
                cand.push_back(c);
            }
            if (!resolved) continue;
            FieldElement beta(F, std::move(cand));
            // exact verification
            FieldElement acc = FieldElement::from_rational(F, BigRat(g.coeff(g.degree())));
            for (int j = g.degree() - 1; j >= 0; --j) {
                acc = acc * beta + FieldElement::from_rational(F, BigRat(g.coeff(j)));
            }
            if (acc.is_zero()) push_unique(beta);
        }
        if (!need_refine) return found;
    }
}

// Automorphisms of F, as the images of the generator (roots of f in F).
inline std::vector<FieldElement> automorphism_images(const FieldPtr& F) {
    return roots_in_field(F, F->defining());
}

// Quadratic subfields of a quartic field, as canonical polynomials x^2 - m
// (m squarefree) with a reality flag, via rational roots of the resolvent
// cubic, verified by exhibiting a root inside F.
inline std::vector<std::pair<IntPoly, bool>> quadratic_subfields(const FieldPtr& F) {
    if (F->degree() != 4) throw std::invalid_argument("quadratic_subfields: quartic field required");
    const IntPoly& f = F->defining();
    BigInt b = f.coeff(3), c = f.coeff(2), d = f.coeff(1), e = f.coeff(0);
    IntPoly resolvent({-(b * b * e - BigInt(4) * c * e + d * d), b * d - BigInt(4) * e, -c, BigInt(1)});
    std::vector<std::pair<IntPoly, bool>> out;
    std::vector<BigInt> seen;
    for (const auto& z0 : rootdetail::integer_roots_monic(resolvent)) {
        // two candidate generators: a root pair's product, else its sum
        IntPoly cands[2] = {IntPoly({e, -z0, BigInt(1)}), IntPoly({c - z0, b, BigInt(1)})};
        for (const auto& g : cands) {
            BigInt disc = g.coeff(1) * g.coeff(1) - BigInt(4) * g.coeff(0);
            if (disc.is_zero() || disc.is_square()) continue;  // reducible or degenerate
            if (roots_in_field(F, g).empty()) continue;
            BigInt m = squarefree_kernel(disc);
            bool dup = false;
            for (const auto& s : seen)
                if (s == m) dup = true;
            if (dup) break;
            seen.push_back(m);
            out.emplace_back(IntPoly({-m, BigInt(0), BigInt(1)}), m.sign() > 0);
            break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first.coeff(0) < y.first.coeff(0); });
    return out;
}

inline bool has_real_quadratic_subfield(const FieldPtr& F) {
    for (const auto& [g, real] : quadratic_subfields(F))
        if (real) return true;
    return false;
}

}  // namespace quartic
