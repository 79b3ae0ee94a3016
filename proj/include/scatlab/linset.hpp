#pragma once

// Linear sets of PG(1,q^n) defined by U_f = {(x, f(x))}: point/weight
// computation, scatteredness, maximum field of linearity, the Dickson
// containment criterion and the coefficient conditions necessary for two
// q-polynomials to define the same set.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>

#include "linpoly.hpp"
#include "parallel.hpp"

namespace scatlab {

// <(0,1)> is the point at infinity, every other point <(1,m)> is its slope m
struct ProjPoint {
    bool inf = false;
    Elem m;
    friend constexpr bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

struct LinearSet {
    const Field* F = nullptr;
    std::vector<std::pair<ProjPoint, uint32_t>> points; // sorted, weight >= 1

    size_t size() const { return points.size(); }
    bool scattered() const {
        for (const auto& [pt, w] : points)
            if (w != 1) return false;
        return true;
    }
    std::map<uint32_t, uint64_t> weight_histogram() const {
        std::map<uint32_t, uint64_t> h;
        for (const auto& [pt, w] : points) ++h[w];
        return h;
    }
};

namespace detail {

inline uint32_t exact_log_q(uint64_t count, uint64_t q) {
    uint32_t w = 0;
    uint64_t pw = 1;
    while (pw < count) {
        pw *= q;
        ++w;
    }
    if (pw != count) fail(Err::bad_parameter, "point fibre size is not a power of q");
    return w;
}

inline LinearSet bucket_to_set(const Field& F, const std::vector<uint32_t>& slope_count, uint64_t inf_count) {
    LinearSet L;
    L.F = &F;
    uint64_t covered = 0;
    if (inf_count > 0) {
        uint32_t w = exact_log_q(inf_count + 1, F.q());
        L.points.push_back({ProjPoint{true, {}}, w});
        covered += inf_count;
    }
    for (uint64_t m = 0; m < F.size(); ++m) {
        if (slope_count[m] == 0) continue;
        uint32_t w = exact_log_q(slope_count[m] + 1, F.q());
        L.points.push_back({ProjPoint{false, F.element(m)}, w});
        covered += slope_count[m];
    }
    if (covered != F.group_order()) fail(Err::bad_parameter, "vectors do not fill a rank-n subspace");
    return L;
}

} // namespace detail

inline LinearSet linear_set(const QPoly& f) {
    const Field& F = *f.F;
    std::vector<uint32_t> count(F.size(), 0);
    for (uint64_t i = 1; i < F.size(); ++i) {
        Elem x = F.element(i);
        ++count[F.div(eval(f, x), x).v];
    }
    return detail::bucket_to_set(F, count, 0);
}

// general entry point for subspaces not in U_f form; takes the nonzero
// vectors of U and may produce the point at infinity
inline LinearSet linear_set_from_vectors(const Field& F, std::span<const std::pair<Elem, Elem>> vectors) {
    std::vector<uint32_t> count(F.size(), 0);
    uint64_t inf_count = 0;
    for (const auto& [x, y] : vectors) {
        if (x.v == 0 && y.v == 0) fail(Err::bad_parameter, "zero vector in subspace list");
        if (x.v == 0) ++inf_count;
        else ++count[F.div(y, x).v];
    }
    return detail::bucket_to_set(F, count, inf_count);
}

struct ScatteredResult {
    bool scattered = false;
    std::optional<Elem> witness; // slope with weight >= 2
};

// U_f is scattered iff ker(f - m*id) has dimension <= 1 for every m.  The
// Dickson-rank scan is the primary route; the direct preimage histogram is
// recomputed as an independent check and the two must agree.
inline ScatteredResult is_scattered(const QPoly& f, unsigned threads = 0) {
    const Field& F = *f.F;
    const uint32_t n = F.n();

    auto hit = parallel_find_first(0, F.size(), threads, [&](uint64_t i) {
        thread_local std::vector<Elem> work;
        Elem m = F.neg(F.element(i)); // kernel of f - m*id
        return dickson_rank_shift0(f, m, work) <= n - 2;
    });

    ScatteredResult res;
    res.scattered = !hit.has_value();
    if (hit) res.witness = F.element(*hit);

    LinearSet L = linear_set(f);
    std::optional<Elem> direct_witness;
    for (const auto& [pt, w] : L.points)
        if (w >= 2) {
            direct_witness = pt.m;
            break;
        }
    if (res.scattered != !direct_witness.has_value() ||
        (res.witness.has_value() && direct_witness.has_value() && *res.witness != *direct_witness))
        throw std::logic_error("scattered: rank scan and preimage histogram disagree");
    return res;
}

// largest t | n with lambda*U_f = U_f for all lambda in F_{q^t}; checked
// exhaustively over subfield scalars and cross-checked against
// t = gcd(n, gcd{ i : a_i != 0 })
inline uint32_t max_linearity(const QPoly& f) {
    const Field& F = *f.F;
    const uint32_t n = F.n();
    if (f.is_zero()) fail(Err::zero_map, "max_linearity of the zero map");

    uint32_t g = 0;
    for (uint32_t i = 0; i < n; ++i)
        if (f.c[i].v != 0) g = std::gcd(g, i);
    uint32_t formula = std::gcd(n, g);

    auto stable = [&](uint32_t t) {
        for (Elem lam : F.subfield_elements(t * F.e())) {
            if (lam.v == 0) continue;
            for (uint32_t k = 0; k < n; ++k) {
                Elem bx = F.pow(F.element(F.p()), k); // power basis t^k
                if (eval(f, F.mul(lam, bx)) != F.mul(lam, eval(f, bx))) return false;
            }
        }
        return true;
    };

    uint32_t best = 1;
    for (uint32_t t = n; t >= 1; --t) {
        if (n % t != 0) continue;
        if (stable(t)) {
            best = t;
            break;
        }
    }
    if (best != formula) throw std::logic_error("max_linearity: scan and gcd formula disagree");
    return best;
}

inline std::vector<bool> slope_set(const QPoly& f) {
    const Field& F = *f.F;
    std::vector<bool> s(F.size(), false);
    for (uint64_t i = 1; i < F.size(); ++i) {
        Elem x = F.element(i);
        s[F.div(eval(f, x), x).v] = true;
    }
    return s;
}

// direct slope-set inclusion {f(x)/x} subset of {g(y)/y}
inline bool contains_direct(const QPoly& f, const QPoly& g) {
    if (f.F != g.F) fail(Err::field_mismatch, "contains_direct: different fields");
    const Field& F = *f.F;
    std::vector<bool> gs = slope_set(g);
    for (uint64_t i = 1; i < F.size(); ++i) {
        Elem x = F.element(i);
        if (!gs[F.div(eval(f, x), x).v]) return false;
    }
    return true;
}

// containment via the Dickson criterion: L_f is contained in L_g iff for
// every x the q-polynomial F(Y) = f(x)Y - x g(Y) is singular.  Pointwise
// vanishing over the whole field is the divisibility by x^{q^n} - x.
inline bool contains_dickson(const QPoly& f, const QPoly& g, unsigned threads = 0) {
    if (f.F != g.F) fail(Err::field_mismatch, "contains_dickson: different fields");
    const Field& F = *f.F;
    const uint32_t n = F.n();
    auto hit = parallel_find_first(0, F.size(), threads, [&](uint64_t i) {
        thread_local std::vector<Elem> work;
        Elem x = F.element(i);
        Elem row[32];
        Elem fx = eval(f, x);
        row[0] = F.sub(fx, F.mul(x, g.c[0]));
        for (uint32_t k = 1; k < n; ++k) row[k] = F.neg(F.mul(x, g.c[k]));
        return dickson_rank_row(F, row, work) == n; // nonzero determinant
    });
    return !hit.has_value();
}

// coefficient conditions that must hold whenever L_f = L_g: equal constant
// terms, equal products a_k a_{n-k}^{q^k}, and the matching three-term sums
// for k = 2..n-1.  Necessary only, so callers use it as a fast filter.
inline bool equal_set_necessary(const QPoly& f, const QPoly& g) {
    if (f.F != g.F) fail(Err::field_mismatch, "equal_set_necessary: different fields");
    const Field& F = *f.F;
    const uint32_t n = F.n();
    auto a = [&](uint32_t i) { return f.c[i % n]; };
    auto b = [&](uint32_t i) { return g.c[i % n]; };

    if (a(0) != b(0)) return false;
    for (uint32_t k = 1; k < n; ++k)
        if (F.mul(a(k), F.frobenius(a(n - k), k)) != F.mul(b(k), F.frobenius(b(n - k), k))) return false;
    for (uint32_t k = 2; k < n; ++k) {
        auto triple = [&](auto cf) {
            Elem t1 = F.mul(cf(1), F.mul(F.frobenius(cf(k - 1), 1), F.frobenius(cf(n - k), k)));
            Elem t2 = F.mul(cf(k), F.mul(F.frobenius(cf(n - 1), 1), F.frobenius(cf(n - k + 1), k)));
            return F.add(t1, t2);
        };
        if (triple(a) != triple(b)) return false;
    }
    return true;
}

} // namespace scatlab
