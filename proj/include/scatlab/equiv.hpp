#pragma once

// Equivalence machinery for the defining subspaces U_f: scalar (lambda-)
// equivalence, GL(2,q^n) stabilizers, and the Gamma-L(2,q^n) equivalence
// search.  The searches enumerate (A,B) and force (C,D) from a 2x2 solve at
// two independent points of U_f, which cuts the space from q^{4n} to
// |Aut| * q^{2n} and makes q = 5, n = 6 feasible.

#include <numeric>
#include <set>

#include "linset.hpp"

namespace scatlab {

struct LinearMap { // (x,y) -> (a x + b y, c x + d y)
    Elem a, b, c, d;
    friend constexpr bool operator==(const LinearMap&, const LinearMap&) = default;
    friend constexpr auto operator<=>(const LinearMap&, const LinearMap&) = default;
};

struct SemilinearMap { // applied after coordinate-wise x -> x^{p^j}
    LinearMap m;
    uint32_t j = 0;
};

inline Elem map_det(const Field& F, const LinearMap& m) {
    return F.sub(F.mul(m.a, m.d), F.mul(m.b, m.c));
}

inline LinearMap map_mul(const Field& F, const LinearMap& x, const LinearMap& y) {
    return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
            F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

inline LinearMap map_inverse(const Field& F, const LinearMap& m) {
    Elem di = F.inv(map_det(F, m));
    return {F.mul(m.d, di), F.neg(F.mul(m.b, di)), F.neg(F.mul(m.c, di)), F.mul(m.a, di)};
}

inline std::pair<Elem, Elem> map_apply(const Field& F, const SemilinearMap& w, Elem x, Elem y) {
    Elem u = F.frobenius_p(x, w.j), v = F.frobenius_p(y, w.j);
    return {F.add(F.mul(w.m.a, u), F.mul(w.m.b, v)), F.add(F.mul(w.m.c, u), F.mul(w.m.d, v))};
}

// exact witness verification: the map must be invertible and send an
// F_q-basis of U_f into U_h
inline bool maps_subspace(const QPoly& f, const QPoly& h, const SemilinearMap& w) {
    const Field& F = *f.F;
    if (map_det(F, w.m).v == 0) return false;
    Elem t = F.element(F.p());
    for (uint32_t k = 0; k < F.n(); ++k) {
        Elem x = F.pow(t, k);
        auto [u, v] = map_apply(F, w, x, eval(f, x));
        if (eval(h, u) != v) return false;
    }
    return true;
}

// lambda with lambda*U_f = U_h, i.e. h_i = f_i lambda^{1-q^i} for all i;
// solved from the first nonzero coefficient through the discrete-log
// congruence, then verified on the full vector
inline std::optional<Elem> scalar_equivalence(const QPoly& f, const QPoly& h) {
    if (f.F != h.F) fail(Err::field_mismatch, "scalar_equivalence: different fields");
    if (f.is_zero() || h.is_zero()) fail(Err::zero_map, "scalar_equivalence needs nonzero maps");
    const Field& F = *f.F;
    const uint32_t n = F.n();

    for (uint32_t i = 0; i < n; ++i)
        if ((f.c[i].v == 0) != (h.c[i].v == 0)) return std::nullopt;

    auto check_all = [&](Elem lam) {
        for (uint32_t i = 0; i < n; ++i) {
            Elem scale = F.div(lam, F.frobenius(lam, i)); // lambda^{1-q^i}
            if (h.c[i] != F.mul(f.c[i], scale)) return false;
        }
        return true;
    };

    uint32_t i0 = 0;
    for (uint32_t i = 1; i < n; ++i)
        if (f.c[i].v != 0) {
            i0 = i;
            break;
        }
    if (i0 == 0) return f.c[0] == h.c[0] ? std::optional<Elem>(F.one()) : std::nullopt;

    Elem target = F.div(f.c[i0], h.c[i0]); // lambda^{q^{i0}-1}
    auto tlog = F.dlog(target);
    if (!tlog) { // no tables: exhaustive lambda scan in exponent order
        for (uint64_t k = 0; k < F.group_order(); ++k) {
            Elem lam = F.gpow(k);
            if (check_all(lam)) return lam;
        }
        return std::nullopt;
    }

    uint64_t R = F.group_order();
    uint64_t d = 1;
    for (uint32_t i = 0; i < i0; ++i) d *= F.q();
    d -= 1; // q^{i0} - 1 < R
    uint64_t g0 = std::gcd(d, R);
    if (*tlog % g0 != 0) return std::nullopt;
    uint64_t dd = d / g0, RR = R / g0, tt = *tlog / g0;
    // modular inverse of dd mod RR
    int64_t t_ = 0, nt = 1, r_ = int64_t(RR), nr = int64_t(dd % RR);
    while (nr != 0) {
        int64_t qq = r_ / nr;
        std::swap(t_ -= qq * nt, nt);
        std::swap(r_ -= qq * nr, nr);
    }
    if (t_ < 0) t_ += int64_t(RR);
    uint64_t x0 = tt % RR * uint64_t(t_) % RR;
    for (uint64_t k = 0; k < g0; ++k) {
        Elem lam = F.gpow(x0 + k * RR);
        if (check_all(lam)) return lam;
    }
    return std::nullopt;
}

// number of scalar-equivalence classes among defining subspaces of one and
// the same linear set; a certified lower bound on how many inequivalent
// defining subspaces the set admits
inline uint32_t scalar_class_count(const std::vector<QPoly>& fs) {
    if (fs.empty()) fail(Err::bad_parameter, "scalar_class_count: empty list");
    for (size_t i = 1; i < fs.size(); ++i)
        if (!contains_direct(fs[0], fs[i]) || !contains_direct(fs[i], fs[0]))
            fail(Err::not_same_linear_set, "scalar_class_count: inputs define different linear sets");
    std::vector<const QPoly*> reps;
    for (const QPoly& f : fs) {
        bool fresh = true;
        for (const QPoly* r : reps)
            if (scalar_equivalence(f, *r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(&f);
    }
    return static_cast<uint32_t>(reps.size());
}

namespace detail {

// scan order over one coordinate: generator powers in increasing exponent,
// zero last
inline Elem scan_elem(const Field& F, uint64_t i) {
    return i < F.group_order() ? F.gpow(i) : F.zero();
}

// per-automorphism search context: the twisted polynomial fs = f^{sigma},
// two points of U_{fs} with independent vectors, the inverse of the 2x2
// solve matrix, and the fixed filter point
struct SearchCtx {
    QPoly fs;
    Elem u1, v1, u2, v2;
    Elem iv1, iv2, iu1, iu2; // rows of [u1 v1; u2 v2]^{-1} scaled entries
    Elem ur, vr;             // pseudorandom early-exit point
    std::vector<Elem> bx, bfx;
};

inline SearchCtx make_ctx(const QPoly& f, uint32_t j, uint64_t seed) {
    const Field& F = *f.F;
    SearchCtx c;
    c.fs = QPoly(F);
    for (uint32_t i = 0; i < F.n(); ++i) c.fs.c[i] = F.frobenius_p(f.c[i], j);

    bool scalar_only = true;
    for (uint32_t i = 1; i < F.n(); ++i)
        if (c.fs.c[i].v != 0) scalar_only = false;
    if (f.is_zero() || scalar_only) fail(Err::degenerate_subspace, "U_f does not span, search undefined");

    // solve points: x1 = 1, x2 = first power-basis element t^k whose vector
    // (x2, fs(x2)) is independent of (x1, fs(x1)); exists since fs is not a
    // scalar multiple of the identity
    c.u1 = F.one();
    c.v1 = eval(c.fs, c.u1);
    Elem detm = F.zero();
    Elem t = F.element(F.p());
    for (uint32_t k = 1; k < F.n() && detm.v == 0; ++k) {
        c.u2 = F.pow(t, k);
        c.v2 = eval(c.fs, c.u2);
        detm = F.sub(F.mul(c.u1, c.v2), F.mul(c.v1, c.u2));
    }
    if (detm.v == 0) fail(Err::degenerate_subspace, "no independent basis point");
    Elem di = F.inv(detm);
    c.iv1 = F.mul(c.v1, di);
    c.iv2 = F.mul(c.v2, di);
    c.iu1 = F.mul(c.u1, di);
    c.iu2 = F.mul(c.u2, di);

    SplitMix64 rng(seed ^ (uint64_t(j) << 32));
    do {
        c.ur = F.element(rng.below(F.size()));
    } while (c.ur.v == 0 || c.ur == c.u1 || c.ur == c.u2);
    c.vr = eval(c.fs, c.ur);

    for (uint32_t k = 0; k < F.n(); ++k) {
        c.bx.push_back(F.pow(t, k));
        c.bfx.push_back(eval(c.fs, c.bx.back()));
    }
    return c;
}

// candidate test at fixed (A,B): force (C,D), filter on the pseudorandom
// point, then verify on the basis and require invertibility.  Fills `out`
// with the accepted map.
inline bool test_candidate(const Field& F, const SearchCtx& c, const QPoly& h, Elem A, Elem B, LinearMap& out) {
    if (A.v == 0 && B.v == 0) return false;
    Elem s1 = F.add(F.mul(A, c.u1), F.mul(B, c.v1));
    Elem s2 = F.add(F.mul(A, c.u2), F.mul(B, c.v2));
    Elem w1 = eval(h, s1), w2 = eval(h, s2);
    Elem C = F.sub(F.mul(w1, c.iv2), F.mul(w2, c.iv1));
    Elem D = F.sub(F.mul(w2, c.iu1), F.mul(w1, c.iu2));

    Elem lhs = F.add(F.mul(C, c.ur), F.mul(D, c.vr));
    Elem rhs = eval(h, F.add(F.mul(A, c.ur), F.mul(B, c.vr)));
    if (lhs != rhs) return false;

    for (uint32_t k = 0; k < c.bx.size(); ++k) {
        Elem img = F.add(F.mul(C, c.bx[k]), F.mul(D, c.bfx[k]));
        if (img != eval(h, F.add(F.mul(A, c.bx[k]), F.mul(B, c.bfx[k])))) return false;
    }
    out = {A, B, C, D};
    return map_det(F, out).v != 0;
}

} // namespace detail

struct StabReport {
    uint64_t order = 0;
    std::vector<LinearMap> elements;   // sorted canonically
    std::vector<LinearMap> generators; // greedy minimal generating set
    bool linear_only = true;
};

// all elements of GL(2,q^n) stabilizing U_f, by full (A,B) enumeration
inline StabReport gl_stabilizer(const QPoly& f, unsigned threads = 0, uint64_t seed = 12345) {
    const Field& F = *f.F;
    detail::SearchCtx ctx = detail::make_ctx(f, 0, seed);
    const uint64_t Q = F.size();

    std::vector<std::vector<LinearMap>> accs;
    parallel_chunks<std::vector<LinearMap>>(
        0, Q * Q, threads,
        [&](uint64_t lo, uint64_t hi, std::vector<LinearMap>& acc) {
            for (uint64_t pos = lo; pos < hi; ++pos) {
                Elem A = detail::scan_elem(F, pos / Q);
                Elem B = detail::scan_elem(F, pos % Q);
                LinearMap m;
                if (detail::test_candidate(F, ctx, f, A, B, m)) acc.push_back(m);
            }
        },
        accs);

    StabReport rep;
    for (auto& acc : accs)
        for (auto& m : acc) rep.elements.push_back(m);
    std::sort(rep.elements.begin(), rep.elements.end()); // canonical order, thread-count independent
    rep.order = rep.elements.size();

    // greedy generating set: extend by the first element outside the closure,
    // regenerating the closure (BFS over generator products) each time
    const LinearMap id{F.one(), F.zero(), F.zero(), F.one()};
    std::set<LinearMap> closure{id};
    for (const LinearMap& m : rep.elements) {
        if (closure.count(m)) continue;
        rep.generators.push_back(m);
        closure = {id};
        std::vector<LinearMap> fresh{id};
        while (!fresh.empty()) {
            std::vector<LinearMap> next;
            for (const LinearMap& x : fresh)
                for (const LinearMap& g : rep.generators) {
                    LinearMap y = map_mul(F, x, g);
                    if (closure.insert(y).second) next.push_back(y);
                }
            fresh = std::move(next);
        }
        if (closure.size() == rep.order) break;
    }
    return rep;
}

enum class EquivMode { linear, semilinear };
enum class ScanStatus { found, exhausted_none, budget_exceeded };

struct SearchOptions {
    unsigned threads = 0;
    uint64_t budget = UINT64_MAX; // max candidates this run
    uint64_t start = 0;           // resume token
    uint64_t seed = 12345;
};

struct EquivResult {
    ScanStatus status = ScanStatus::exhausted_none;
    std::optional<SemilinearMap> witness;
    uint64_t total_space = 0;
    uint64_t scanned = 0;
    uint64_t next_token = 0; // resume point when budget_exceeded
};

// search for phi in GammaL(2,q^n) (or GL in linear mode) with phi(U_f) = U_h.
// A none-result is reported only when the whole (sigma, A, B) space was
// covered; budget-capped runs return a resumable token instead.
inline EquivResult gl_equivalence_search(const QPoly& f, const QPoly& h, EquivMode mode,
                                         SearchOptions opt = {}) {
    if (f.F != h.F) fail(Err::field_mismatch, "equivalence search: different fields");
    const Field& F = *f.F;
    const uint64_t Q = F.size();
    const uint32_t nauto = mode == EquivMode::linear ? 1 : F.en();

    std::vector<detail::SearchCtx> ctxs;
    for (uint32_t j = 0; j < nauto; ++j) ctxs.push_back(detail::make_ctx(f, j, opt.seed));
    (void)detail::make_ctx(h, 0, opt.seed); // h must span as well

    EquivResult res;
    res.total_space = uint64_t(nauto) * Q * Q;
    uint64_t begin = std::min(opt.start, res.total_space);
    uint64_t end = opt.budget > res.total_space - begin ? res.total_space : begin + opt.budget;

    auto hit = parallel_find_first(begin, end, opt.threads, [&](uint64_t pos) {
        uint64_t j = pos / (Q * Q), rem = pos % (Q * Q);
        Elem A = detail::scan_elem(F, rem / Q);
        Elem B = detail::scan_elem(F, rem % Q);
        LinearMap m;
        return detail::test_candidate(F, ctxs[j], h, A, B, m);
    });

    if (hit) {
        uint64_t j = *hit / (Q * Q), rem = *hit % (Q * Q);
        LinearMap m;
        detail::test_candidate(F, ctxs[j], h, detail::scan_elem(F, rem / Q), detail::scan_elem(F, rem % Q), m);
        res.witness = SemilinearMap{m, static_cast<uint32_t>(j)};
        res.status = ScanStatus::found;
        res.scanned = *hit - begin + 1;
        res.next_token = *hit + 1;
        if (!maps_subspace(f, h, *res.witness)) throw std::logic_error("equivalence witness failed verification");
        return res;
    }
    res.scanned = end - begin;
    res.next_token = end;
    res.status = end == res.total_space ? ScanStatus::exhausted_none : ScanStatus::budget_exceeded;
    return res;
}

} // namespace scatlab
