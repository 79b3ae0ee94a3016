#pragma once

// q-polynomials f(x) = sum a_i x^{q^i} over F_{q^n} (coefficient vectors of
// length n), their Dickson matrices, and dense exact linear algebra over the
// field: rank, determinant, deletion minors, inverse.

#include <cassert>
#include <cstdint>
#include <vector>

#include "gf.hpp"

namespace scatlab {

struct QPoly {
    const Field* F = nullptr;
    std::vector<Elem> c; // length n

    QPoly() = default;
    explicit QPoly(const Field& field) : F(&field), c(field.n()) {}

    bool is_zero() const {
        for (Elem a : c)
            if (a.v != 0) return false;
        return true;
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.F == b.F && a.c == b.c; }
};

inline QPoly qpoly_zero(const Field& F) { return QPoly(F); }

inline QPoly qpoly_monomial(const Field& F, uint32_t i, Elem coeff) {
    QPoly f(F);
    f.c[i % F.n()] = coeff;
    return f;
}

inline QPoly qpoly_identity(const Field& F) { return qpoly_monomial(F, 0, F.one()); }

inline QPoly qpoly_add(const QPoly& f, const QPoly& g) {
    if (f.F != g.F) fail(Err::field_mismatch, "qpoly_add: different fields");
    QPoly h(*f.F);
    for (uint32_t i = 0; i < f.F->n(); ++i) h.c[i] = f.F->add(f.c[i], g.c[i]);
    return h;
}

inline QPoly qpoly_scale(Elem s, const QPoly& f) {
    QPoly h(*f.F);
    for (uint32_t i = 0; i < f.F->n(); ++i) h.c[i] = f.F->mul(s, f.c[i]);
    return h;
}

// f + m * id, the pencil the scatteredness and distance scans walk
inline QPoly qpoly_shift0(const QPoly& f, Elem m) {
    QPoly h = f;
    h.c[0] = f.F->add(h.c[0], m);
    return h;
}

inline Elem eval(const QPoly& f, Elem x) {
    const Field& F = *f.F;
    Elem acc = F.mul(f.c[0], x);
    Elem t = x;
    uint32_t top = 0;
    for (uint32_t i = 1; i < F.n(); ++i)
        if (f.c[i].v != 0) top = i;
    for (uint32_t i = 1; i <= top; ++i) {
        t = F.frobenius(t);
        if (f.c[i].v != 0) acc = F.add(acc, F.mul(f.c[i], t));
    }
    return acc;
}

// composition reduced mod x^{q^n} - x: c_k = sum_{i+j = k mod n} a_i b_j^{q^i}
inline QPoly compose(const QPoly& f, const QPoly& g) {
    if (f.F != g.F) fail(Err::field_mismatch, "compose: different fields");
    const Field& F = *f.F;
    const uint32_t n = F.n();
    QPoly h(F);
    for (uint32_t i = 0; i < n; ++i) {
        if (f.c[i].v == 0) continue;
        for (uint32_t j = 0; j < n; ++j) {
            if (g.c[j].v == 0) continue;
            uint32_t k = (i + j) % n;
            h.c[k] = F.add(h.c[k], F.mul(f.c[i], F.frobenius(g.c[j], i)));
        }
    }
    return h;
}

// adjoint: coefficient of x^{q^{(n-i) mod n}} is a_i^{q^{n-i}}
inline QPoly adjoint(const QPoly& f) {
    const Field& F = *f.F;
    const uint32_t n = F.n();
    QPoly h(F);
    for (uint32_t i = 0; i < n; ++i) h.c[(n - i) % n] = F.frobenius(f.c[i], n - i);
    return h;
}

class Mat {
public:
    Mat() = default;
    Mat(const Field& F, uint32_t n) : F_(&F), n_(n), a_(size_t(n) * n) {}

    const Field& field() const { return *F_; }
    uint32_t dim() const { return n_; }
    Elem& at(uint32_t i, uint32_t j) { return a_[size_t(i) * n_ + j]; }
    Elem at(uint32_t i, uint32_t j) const { return a_[size_t(i) * n_ + j]; }

    friend bool operator==(const Mat& x, const Mat& y) { return x.F_ == y.F_ && x.n_ == y.n_ && x.a_ == y.a_; }

    static Mat identity(const Field& F, uint32_t n) {
        Mat m(F, n);
        for (uint32_t i = 0; i < n; ++i) m.at(i, i) = F.one();
        return m;
    }

private:
    const Field* F_ = nullptr;
    uint32_t n_ = 0;
    std::vector<Elem> a_;
};

inline Mat mat_mul(const Mat& x, const Mat& y) {
    const Field& F = x.field();
    const uint32_t n = x.dim();
    Mat z(F, n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t k = 0; k < n; ++k) {
            Elem xik = x.at(i, k);
            if (xik.v == 0) continue;
            for (uint32_t j = 0; j < n; ++j) z.at(i, j) = F.add(z.at(i, j), F.mul(xik, y.at(k, j)));
        }
    return z;
}

// Gaussian elimination with first-nonzero pivoting; exact arithmetic so no
// stability concerns.  Returns (rank, det); det is zero unless full rank.
inline std::pair<uint32_t, Elem> rank_det(Mat m) {
    const Field& F = m.field();
    const uint32_t n = m.dim();
    uint32_t rank = 0;
    Elem det = F.one();
    bool flip = false;
    for (uint32_t col = 0; col < n && rank < n; ++col) {
        uint32_t piv = rank;
        while (piv < n && m.at(piv, col).v == 0) ++piv;
        if (piv == n) {
            det = F.zero();
            continue;
        }
        if (piv != rank) {
            for (uint32_t j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
            flip = !flip;
        }
        Elem pval = m.at(rank, col);
        det = F.mul(det, pval);
        Elem pinv = F.inv(pval);
        for (uint32_t i = rank + 1; i < n; ++i) {
            Elem factor = m.at(i, col);
            if (factor.v == 0) continue;
            factor = F.mul(factor, pinv);
            m.at(i, col) = F.zero();
            for (uint32_t j = col + 1; j < n; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(rank, j)));
        }
        ++rank;
    }
    if (rank < n) det = F.zero();
    else if (flip) det = F.neg(det);
    return {rank, det};
}

inline uint32_t rank(const Mat& m) { return rank_det(m).first; }
inline Elem det(const Mat& m) { return rank_det(m).second; }

// determinant after deleting row i and column j, both 1-indexed
inline Elem deletion_minor(const Mat& m, uint32_t i, uint32_t j) {
    const uint32_t n = m.dim();
    Mat sub(m.field(), n - 1);
    for (uint32_t r = 0, rr = 0; r < n; ++r) {
        if (r == i - 1) continue;
        for (uint32_t c = 0, cc = 0; c < n; ++c) {
            if (c == j - 1) continue;
            sub.at(rr, cc) = m.at(r, c);
            ++cc;
        }
        ++rr;
    }
    return det(sub);
}

inline std::optional<Mat> inverse(const Mat& m) {
    const Field& F = m.field();
    const uint32_t n = m.dim();
    Mat a = m;
    Mat inv = Mat::identity(F, n);
    for (uint32_t col = 0; col < n; ++col) {
        uint32_t piv = col;
        while (piv < n && a.at(piv, col).v == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (uint32_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Elem pinv = F.inv(a.at(col, col));
        for (uint32_t j = 0; j < n; ++j) {
            a.at(col, j) = F.mul(a.at(col, j), pinv);
            inv.at(col, j) = F.mul(inv.at(col, j), pinv);
        }
        for (uint32_t i = 0; i < n; ++i) {
            if (i == col) continue;
            Elem factor = a.at(i, col);
            if (factor.v == 0) continue;
            for (uint32_t j = 0; j < n; ++j) {
                a.at(i, j) = F.sub(a.at(i, j), F.mul(factor, a.at(col, j)));
                inv.at(i, j) = F.sub(inv.at(i, j), F.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

// Dickson (q-circulant) matrix: entry(i,j) = a_{(j-i) mod n}^{q^i}; its rank
// equals the rank of f as an F_q-linear map
inline Mat dickson(const QPoly& f) {
    const Field& F = *f.F;
    const uint32_t n = F.n();
    Mat m(F, n);
    for (uint32_t j = 0; j < n; ++j) m.at(0, j) = f.c[j];
    for (uint32_t i = 1; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) m.at(i, j) = F.frobenius(m.at(i - 1, (j + n - 1) % n));
    return m;
}

// rank of the Dickson matrix whose first row is `row0`; `work` is reused
// n*n scratch.  This is the kernel of every exhaustive m-scan.
inline uint32_t dickson_rank_row(const Field& F, const Elem* row0, std::vector<Elem>& work) {
    const uint32_t n = F.n();
    work.resize(size_t(n) * n);
    for (uint32_t j = 0; j < n; ++j) work[j] = row0[j];
    for (uint32_t i = 1; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            work[size_t(i) * n + j] = F.frobenius(work[size_t(i - 1) * n + (j + n - 1) % n]);

    uint32_t rank = 0;
    for (uint32_t col = 0; col < n && rank < n; ++col) {
        uint32_t piv = rank;
        while (piv < n && work[size_t(piv) * n + col].v == 0) ++piv;
        if (piv == n) continue;
        if (piv != rank)
            for (uint32_t j = col; j < n; ++j) std::swap(work[size_t(piv) * n + j], work[size_t(rank) * n + j]);
        Elem pinv = F.inv(work[size_t(rank) * n + col]);
        for (uint32_t i = rank + 1; i < n; ++i) {
            Elem factor = work[size_t(i) * n + col];
            if (factor.v == 0) continue;
            factor = F.mul(factor, pinv);
            work[size_t(i) * n + col] = F.zero();
            for (uint32_t j = col + 1; j < n; ++j)
                work[size_t(i) * n + j] = F.sub(work[size_t(i) * n + j], F.mul(factor, work[size_t(rank) * n + j]));
        }
        ++rank;
    }
    return rank;
}

// rank of dickson(f + m*id)
inline uint32_t dickson_rank_shift0(const QPoly& f, Elem m, std::vector<Elem>& work) {
    const Field& F = *f.F;
    assert(F.n() <= 32);
    Elem row[32];
    for (uint32_t j = 0; j < F.n(); ++j) row[j] = f.c[j];
    row[0] = F.add(row[0], m);
    return dickson_rank_row(F, row, work);
}

inline uint32_t kernel_dim(const QPoly& f) {
    std::vector<Elem> scratch;
    return f.F->n() - dickson_rank_shift0(f, f.F->zero(), scratch);
}

// independent route: count zeros by full enumeration; #ker = q^dim
inline uint32_t kernel_dim_exhaustive(const QPoly& f) {
    const Field& F = *f.F;
    uint64_t count = 0;
    for (uint64_t i = 0; i < F.size(); ++i)
        if (eval(f, F.element(i)).v == 0) ++count;
    uint32_t dim = 0;
    uint64_t pw = 1;
    while (pw < count) {
        pw *= F.q();
        ++dim;
    }
    assert(pw == count && "kernel size must be a power of q");
    return dim;
}

// inverse of an invertible q-polynomial via its Dickson matrix (composition
// corresponds to matrix product, so the inverse map is read off D^{-1})
inline std::optional<QPoly> qpoly_inverse(const QPoly& f) {
    auto di = inverse(dickson(f));
    if (!di) return std::nullopt;
    QPoly h(*f.F);
    for (uint32_t j = 0; j < f.F->n(); ++j) h.c[j] = di->at(0, j);
    return h;
}

} // namespace scatlab
