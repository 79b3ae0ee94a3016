#pragma once

// Rank-metric codes C_f = {x -> a f(x) + b x : a,b in F_{q^n}} attached to
// q-polynomials: minimum distance by the projective (a:b)-class scan, the
// MRD test, the matrix representation over F_q, the adjoint code, and the
// left idealiser (middle nucleus).

#include <map>

#include "linset.hpp"

namespace scatlab {

struct RankCode {
    const Field* F = nullptr;
    QPoly f;
    uint32_t n() const { return F->n(); }
    uint64_t q() const { return F->q(); }
    uint64_t card() const { // |C| = q^{2n}: the 2n maps g^k f, g^k id are independent
        uint64_t c = 1;
        for (uint32_t i = 0; i < 2 * n(); ++i) c *= q();
        return c;
    }
};

inline RankCode code_from(const QPoly& f) {
    if (!f.F) fail(Err::bad_parameter, "code_from: empty polynomial");
    bool scalar_only = true;
    for (uint32_t i = 1; i < f.F->n(); ++i)
        if (f.c[i].v != 0) scalar_only = false;
    if (scalar_only) fail(Err::degenerate_code, "code_from: f must not be a scalar multiple of the identity");
    return {f.F, f};
}

// rank multiset over the q^n + 1 projective classes of codewords:
// rank(f + m*id) for every m, plus rank(id) = n for the class (0:1)
inline std::map<uint32_t, uint64_t> rank_spectrum(const RankCode& c, unsigned threads = 0) {
    const Field& F = *c.F;
    std::vector<std::map<uint32_t, uint64_t>> accs;
    parallel_chunks<std::map<uint32_t, uint64_t>>(
        0, F.size(), threads,
        [&](uint64_t lo, uint64_t hi, std::map<uint32_t, uint64_t>& acc) {
            std::vector<Elem> work;
            for (uint64_t i = lo; i < hi; ++i) ++acc[dickson_rank_shift0(c.f, F.element(i), work)];
        },
        accs);
    std::map<uint32_t, uint64_t> spec;
    for (auto& acc : accs)
        for (auto& [r, cnt] : acc) spec[r] += cnt;
    ++spec[F.n()]; // the identity class
    return spec;
}

// rank scaling under F_{q^n}-multiples makes the projective scan exact
inline uint32_t min_distance(const RankCode& c, unsigned threads = 0) {
    auto spec = rank_spectrum(c, threads);
    return spec.begin()->first;
}

// Singleton: |C| <= q^{n(n-d+1)}; with |C| = q^{2n} equality is d = n-1
inline bool is_mrd(const RankCode& c, unsigned threads = 0) {
    return min_distance(c, threads) == c.n() - 1;
}

inline std::vector<Elem> power_basis(const Field& F) {
    std::vector<Elem> b;
    Elem t = F.element(F.p());
    for (uint32_t k = 0; k < F.n(); ++k) b.push_back(F.pow(t, k));
    return b;
}

// coordinates over F_q through the Moore system: row r of the matrix is
// (b_k^{q^r}), invertible exactly when the basis is F_q-independent
class FqCoords {
public:
    FqCoords(const Field& F, std::span<const Elem> basis) : F_(&F), n_(F.n()) {
        Mat moore(F, n_);
        for (uint32_t r = 0; r < n_; ++r)
            for (uint32_t k = 0; k < n_; ++k) moore.at(r, k) = F.frobenius(basis[k], r);
        auto inv = inverse(moore);
        if (!inv) fail(Err::dependent_basis, "basis is not F_q-independent");
        minv_ = std::move(*inv);
    }

    std::vector<Elem> coords(Elem y) const {
        const Field& F = *F_;
        std::vector<Elem> rhs(n_), out(n_);
        for (uint32_t r = 0; r < n_; ++r) {
            rhs[r] = y;
            y = F.frobenius(y);
        }
        for (uint32_t i = 0; i < n_; ++i) {
            Elem acc = F.zero();
            for (uint32_t r = 0; r < n_; ++r) acc = F.add(acc, F.mul(minv_.at(i, r), rhs[r]));
            out[i] = acc;
        }
        return out;
    }

private:
    const Field* F_;
    uint32_t n_;
    Mat minv_;
};

// matrix of f over F_q w.r.t. the given basis: column i holds the
// coordinates of f(b_i), so composition maps to matrix product
inline Mat matrix_rep(const QPoly& f, std::span<const Elem> basis) {
    const Field& F = *f.F;
    const uint32_t n = F.n();
    FqCoords co(F, basis);
    Mat m(F, n);
    for (uint32_t i = 0; i < n; ++i) {
        auto col = co.coords(eval(f, basis[i]));
        for (uint32_t j = 0; j < n; ++j) {
            assert(F.in_subfield(col[j], F.e()));
            m.at(j, i) = col[j];
        }
    }
    return m;
}

inline RankCode adjoint_code(const RankCode& c) { return code_from(adjoint(c.f)); }

// membership h in C_f, i.e. h = a f + b id for some a, b in F_{q^n}
inline bool code_member(const RankCode& c, const QPoly& h) {
    const Field& F = *c.F;
    const uint32_t n = F.n();
    Elem a = F.zero();
    bool have_a = false;
    for (uint32_t i = 1; i < n; ++i) {
        if (c.f.c[i].v != 0) {
            if (!have_a) {
                a = F.div(h.c[i], c.f.c[i]);
                have_a = true;
            } else if (h.c[i] != F.mul(a, c.f.c[i]))
                return false;
        } else if (h.c[i].v != 0)
            return false;
    }
    return have_a; // b := h_0 - a f_0 always exists
}

enum class IdealiserKind { scalars, full_code };

struct IdealiserReport {
    IdealiserKind kind = IdealiserKind::scalars;
    uint64_t order = 0; // q^n for the scalar field, q^{2n} for the whole code
};

// Left idealiser {A : A compose C in C}.  Since id lies in C, any such A is
// itself a codeword a f + b id, and closing under composition with f reduces
// the question to whether a*(f o f) stays in span{f, id}: if f o f is
// outside the span the idealiser is exactly the scalar maps, otherwise the
// whole code.  Cross-checked against brute force in the tests.
inline IdealiserReport left_idealiser(const RankCode& c) {
    const Field& F = *c.F;
    QPoly ff = compose(c.f, c.f);
    IdealiserReport rep;
    bool member = code_member(c, ff);
    rep.kind = member ? IdealiserKind::full_code : IdealiserKind::scalars;
    uint64_t ord = 1;
    uint32_t dims = member ? 2 * F.n() : F.n();
    for (uint32_t i = 0; i < dims; ++i) ord *= F.q();
    rep.order = ord;
    return rep;
}

} // namespace scatlab
