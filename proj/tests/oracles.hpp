#pragma once

// Independent oracles used by the tests only.  These deliberately avoid the
// library's arithmetic paths: naive dense polynomials over F_p, irreducibility
// by trial division, multiplicative order by factoring.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracles {

using Poly = std::vector<uint32_t>; // little-endian over F_p

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

// remainder of a by monic b
inline Poly rem(Poly a, const Poly& b, uint32_t p) {
    trim(a);
    while (a.size() >= b.size()) {
        uint32_t lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + (p - lead) * b[j]) % p;
        trim(a);
    }
    return a;
}

// divisibility trial against every monic polynomial of degree 1..deg/2
inline bool irreducible_by_trial_division(const Poly& f, uint32_t p) {
    const size_t d = f.size() - 1;
    if (d == 0) return false;
    for (size_t dd = 1; 2 * dd <= d; ++dd) {
        uint64_t count = 1;
        for (size_t i = 0; i < dd; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly g(dd + 1, 0);
            g[dd] = 1;
            uint64_t v = idx;
            for (size_t i = 0; i < dd; ++i) {
                g[i] = v % p;
                v /= p;
            }
            if (rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

// lexicographically smallest monic irreducible of degree d over F_p,
// coefficients ordered low-to-high degree
inline Poly smallest_irreducible(uint32_t p, uint32_t d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 1; idx < count; ++idx) {
        Poly f(d + 1, 0);
        f[d] = 1;
        uint64_t v = idx;
        for (uint32_t i = 0; i < d; ++i) {
            f[i] = v % p;
            v /= p;
        }
        if (irreducible_by_trial_division(f, p)) return f;
    }
    return {};
}

inline std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    if (v > 1) out.push_back(v);
    return out;
}

// exact multiplicative order from the factored group order
template <typename PowFn>
inline uint64_t multiplicative_order(uint64_t group_order, PowFn&& pow_is_one) {
    uint64_t ord = group_order;
    for (uint64_t f : prime_factors(group_order))
        while (ord % f == 0 && pow_is_one(ord / f)) ord /= f;
    return ord;
}

} // namespace oracles
