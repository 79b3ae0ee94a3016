#pragma once

// Exact arithmetic in F_{q^n}, q = p^e, represented as F_p[t]/(mu(t)) with
// deg mu = e*n.  Elements are canonical indices packing the coordinate
// vector over F_p in base p (little-endian).  For fields up to the table
// budget, multiplication runs on discrete-log tables and addition on Zech
// logarithms; larger fields fall back to coordinate (schoolbook) arithmetic.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace scatlab {

struct Elem {
    uint32_t v = 0;
    friend constexpr bool operator==(const Elem&, const Elem&) = default;
    friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

struct FieldOptions {
    uint64_t table_budget = uint64_t{1} << 22; // build lookup tables up to this size
    uint64_t max_elements = uint64_t{1} << 26; // hard cap on q^n
};

struct FieldParams {
    uint32_t p = 0;
    uint32_t e = 0;
    uint32_t n = 0;
    std::vector<uint32_t> mu; // c0..c_{en}, monic
};

namespace detail {

// dense little-endian polynomials over F_p, used for modulus search and
// schoolbook element arithmetic
using PPoly = std::vector<uint32_t>;

inline void ppoly_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline uint32_t mod_inverse(uint32_t a, uint32_t p) {
    // extended Euclid on machine ints; p prime, a != 0 mod p
    int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t qq = r / new_r;
        std::swap(t -= qq * new_t, new_t);
        std::swap(r -= qq * new_r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

inline PPoly ppoly_mulmod(const PPoly& a, const PPoly& b, const PPoly& mu, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += uint64_t(a[i]) * b[j];
    }
    PPoly c(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<uint32_t>(acc[i] % p);
    // reduce mod the monic polynomial mu
    const size_t d = mu.size() - 1;
    for (size_t i = c.size(); i-- > d;) {
        uint32_t lead = c[i];
        if (lead == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < d; ++j) {
            uint64_t t = uint64_t(lead) * mu[j] % p;
            uint32_t& dst = c[i - d + j];
            dst = static_cast<uint32_t>((dst + p - t) % p);
        }
    }
    c.resize(d);
    ppoly_trim(c);
    return c;
}

inline PPoly ppoly_powp_mod(PPoly t, const PPoly& mu, uint32_t p) {
    // t(x)^p mod mu by square-and-multiply on the exponent p
    PPoly result{1};
    uint32_t k = p;
    while (k) {
        if (k & 1) result = ppoly_mulmod(result, t, mu, p);
        k >>= 1;
        if (k) t = ppoly_mulmod(t, t, mu, p);
    }
    return result;
}

inline PPoly ppoly_mod(PPoly a, const PPoly& m, uint32_t p) {
    ppoly_trim(a);
    const size_t d = m.size() - 1;
    const uint32_t lead_inv = mod_inverse(m.back(), p);
    while (a.size() > d) {
        uint32_t lead = static_cast<uint32_t>(uint64_t(a.back()) * lead_inv % p);
        size_t shift = a.size() - 1 - d;
        if (lead != 0) {
            for (size_t j = 0; j <= d; ++j) {
                uint64_t t = uint64_t(lead) * m[j] % p;
                uint32_t& dst = a[shift + j];
                dst = static_cast<uint32_t>((dst + p - t) % p);
            }
        }
        a.pop_back();
        ppoly_trim(a);
        if (a.size() <= d) break;
    }
    ppoly_trim(a);
    return a;
}

inline PPoly ppoly_gcd(PPoly a, PPoly b, uint32_t p) {
    ppoly_trim(a);
    ppoly_trim(b);
    while (!b.empty()) {
        PPoly r = ppoly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: f (monic, degree d) is irreducible over F_p iff
// x^{p^d} = x mod f and gcd(x^{p^{d/r}} - x, f) = 1 for every prime r | d.
inline bool is_irreducible(const PPoly& f, uint32_t p) {
    const size_t d = f.size() - 1;
    if (d == 0) return false;
    if (f[0] == 0) return d == 1; // divisible by x

    std::vector<size_t> checkpoints; // d/r for prime r | d
    size_t m = d;
    for (size_t r = 2; r * r <= m; ++r)
        if (m % r == 0) {
            checkpoints.push_back(d / r);
            while (m % r == 0) m /= r;
        }
    if (m > 1) checkpoints.push_back(d / m);

    PPoly t{0, 1}; // x
    for (size_t k = 1; k <= d; ++k) {
        t = ppoly_powp_mod(std::move(t), f, p);
        if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
            PPoly diff = t;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = (diff[1] + p - 1) % p;
            ppoly_trim(diff);
            PPoly g = ppoly_gcd(f, diff, p);
            if (!(g.size() == 1)) return false;
        }
    }
    // t == x^{p^d} mod f must equal x
    PPoly x{0, 1};
    ppoly_trim(t);
    return t == x;
}

inline bool is_prime_u32(uint32_t v) {
    if (v < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
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

} // namespace detail

class Field {
public:
    static constexpr uint32_t kNoLog = UINT32_MAX;

    Field(uint32_t p, uint32_t e, uint32_t n,
          std::optional<std::vector<uint32_t>> modulus = std::nullopt,
          FieldOptions opt = {})
        : p_(p), e_(e), n_(n), en_(e * n) {
        if (!detail::is_prime_u32(p)) fail(Err::non_prime, "p = " + std::to_string(p) + " is not prime");
        if (e == 0 || n == 0) fail(Err::bad_parameter, "e and n must be positive");

        q_ = 1;
        for (uint32_t i = 0; i < e_; ++i) q_ *= p_;
        size_ = 1;
        for (uint32_t i = 0; i < en_; ++i) {
            if (size_ > opt.max_elements / p_) fail(Err::size_limit, "q^n exceeds configured element cap");
            size_ *= p_;
        }
        order_ = size_ - 1;

        if (modulus) {
            mu_ = std::move(*modulus);
            if (mu_.size() != en_ + 1 || mu_.back() != 1)
                fail(Err::bad_parameter, "modulus must be monic of degree e*n");
            for (uint32_t c : mu_)
                if (c >= p_) fail(Err::bad_parameter, "modulus coefficient out of range");
            if (!detail::is_irreducible(mu_, p_)) fail(Err::reducible, "modulus is reducible over F_p");
        } else {
            mu_ = smallest_irreducible();
        }

        order_factors_ = detail::prime_factors(order_);
        find_generator();
        if (size_ <= opt.table_budget) build_tables();
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    uint32_t p() const noexcept { return p_; }
    uint32_t e() const noexcept { return e_; }
    uint32_t n() const noexcept { return n_; }
    uint32_t en() const noexcept { return en_; }
    uint64_t q() const noexcept { return q_; }
    uint64_t size() const noexcept { return size_; }
    uint64_t group_order() const noexcept { return order_; }
    bool has_tables() const noexcept { return has_tables_; }
    const std::vector<uint32_t>& modulus() const noexcept { return mu_; }
    FieldParams params() const { return {p_, e_, n_, mu_}; }

    Elem zero() const noexcept { return {}; }
    Elem one() const noexcept { return {1}; }
    Elem generator() const noexcept { return gen_; }
    Elem element(uint64_t index) const { return {static_cast<uint32_t>(index)}; }

    Elem from_coords(std::span<const uint32_t> coords) const {
        uint64_t idx = 0;
        for (size_t i = coords.size(); i-- > 0;) idx = idx * p_ + coords[i] % p_;
        return {static_cast<uint32_t>(idx)};
    }
    std::vector<uint32_t> coords(Elem a) const {
        std::vector<uint32_t> out(en_);
        uint32_t v = a.v;
        for (uint32_t i = 0; i < en_; ++i) {
            out[i] = v % p_;
            v /= p_;
        }
        return out;
    }
    Elem from_int(uint64_t c) const { return {static_cast<uint32_t>(c % p_)}; }

    // --- multiplicative structure ---

    Elem gpow(uint64_t k) const {
        if (has_tables_) return {exp_[k % order_]};
        return pow_schoolbook(gen_, k % order_);
    }
    std::optional<uint64_t> dlog(Elem a) const {
        if (a.v == 0) return std::nullopt;
        if (has_tables_) return log_[a.v];
        // no-table fields: linear scan (rarely used, desk fields have tables)
        Elem t = one();
        for (uint64_t k = 0; k < order_; ++k) {
            if (t == a) return k;
            t = mul_schoolbook(t, gen_);
        }
        return std::nullopt;
    }

    // --- arithmetic ---

    Elem add(Elem a, Elem b) const {
        if (has_tables_) {
            if (a.v == 0) return b;
            if (b.v == 0) return a;
            uint32_t la = log_[a.v], lb = log_[b.v];
            uint32_t d = lb >= la ? lb - la : lb + static_cast<uint32_t>(order_) - la;
            uint32_t z = zech_[d];
            if (z == kNoLog) return {};
            return {exp_[la + z]};
        }
        return add_coords(a, b);
    }
    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        if (has_tables_) {
            if (a.v == 0) return a;
            return {exp_[log_[a.v] + static_cast<uint32_t>(order_ / 2)]};
        }
        return neg_coords(a);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (has_tables_) {
            if (a.v == 0 || b.v == 0) return {};
            return {exp_[log_[a.v] + log_[b.v]]};
        }
        return mul_schoolbook(a, b);
    }
    Elem inv(Elem a) const {
        if (a.v == 0) fail(Err::division_by_zero, "inverse of zero");
        if (has_tables_) return {exp_[static_cast<uint32_t>(order_) - log_[a.v]]};
        return pow_schoolbook(a, order_ - 1);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    // 0^0 = 1 by convention; nonzero bases reduce the exponent mod q^n - 1
    Elem pow(Elem a, uint64_t k) const {
        if (a.v == 0) return k == 0 ? one() : zero();
        uint64_t r = k % order_;
        if (has_tables_) return {exp_[uint64_t(log_[a.v]) * r % order_]};
        return pow_schoolbook(a, r);
    }

    Elem mul_schoolbook(Elem a, Elem b) const {
        detail::PPoly pa = to_ppoly(a), pb = to_ppoly(b);
        return from_ppoly(detail::ppoly_mulmod(pa, pb, mu_, p_));
    }

    // --- Frobenius, norms, subfields ---

    Elem frobenius(Elem a, uint32_t i = 1) const { // a^{q^i}
        i %= n_;
        if (has_tables_) {
            for (uint32_t k = 0; k < i; ++k) a = {frob_q_[a.v]};
            return a;
        }
        return frobenius_no_tables(a, i);
    }
    Elem frobenius_p(Elem a, uint32_t j = 1) const { // a^{p^j}
        j %= en_;
        if (has_tables_) {
            for (uint32_t k = 0; k < j; ++k) a = {frob_p_[a.v]};
            return a;
        }
        for (uint32_t k = 0; k < j; ++k) a = pow_schoolbook(a, p_);
        return a;
    }

    Elem norm(Elem a, uint32_t h) const { // N_{q^n/q^h}
        if (h == 0 || n_ % h != 0) fail(Err::not_a_divisor, "norm: h must divide n");
        uint64_t qh = 1;
        for (uint32_t i = 0; i < h * e_; ++i) qh *= p_;
        return pow(a, order_ / (qh - 1));
    }

    bool in_subfield(Elem a, uint32_t h) const { // fixed by x -> x^{p^h}
        if (h == 0 || en_ % h != 0) fail(Err::not_a_divisor, "in_subfield: h must divide e*n");
        return frobenius_p(a, h) == a;
    }

    std::vector<Elem> subfield_elements(uint32_t h) const { // F_{p^h}
        if (h == 0 || en_ % h != 0) fail(Err::not_a_divisor, "subfield_elements: h must divide e*n");
        uint64_t sub = 1;
        for (uint32_t i = 0; i < h; ++i) sub *= p_;
        uint64_t stride = order_ / (sub - 1);
        std::vector<Elem> out;
        out.reserve(sub);
        out.push_back(zero());
        for (uint64_t k = 0; k < sub - 1; ++k) out.push_back(gpow(k * stride));
        std::sort(out.begin(), out.end());
        return out;
    }

    // all roots of x^2 + c1 x + c0, scanned over F_q when both coefficients
    // lie there (the subfield case is the one the constructions use)
    std::vector<Elem> quadratic_roots(Elem c1, Elem c0) const {
        std::vector<Elem> roots;
        auto test = [&](Elem x) {
            Elem val = add(mul(x, add(x, c1)), c0); // x(x+c1)+c0
            if (val.v == 0) roots.push_back(x);
        };
        if (in_subfield(c1, e_) && in_subfield(c0, e_)) {
            for (Elem x : subfield_elements(e_)) test(x);
        } else {
            for (uint64_t i = 0; i < size_; ++i) test(element(i));
        }
        return roots;
    }

private:
    uint32_t p_, e_, n_, en_;
    uint64_t q_ = 0, size_ = 0, order_ = 0;
    std::vector<uint32_t> mu_;
    std::vector<uint64_t> order_factors_;
    Elem gen_;
    bool has_tables_ = false;
    std::vector<uint32_t> exp_;    // size 2*order_, exp_[k] = index of g^k
    std::vector<uint32_t> log_;    // size size_, log_[0] = kNoLog
    std::vector<uint32_t> zech_;   // zech_[k] = log(1 + g^k), kNoLog when zero
    std::vector<uint32_t> frob_q_; // x -> x^q
    std::vector<uint32_t> frob_p_; // x -> x^p

    detail::PPoly to_ppoly(Elem a) const {
        detail::PPoly out;
        uint32_t v = a.v;
        while (v) {
            out.push_back(v % p_);
            v /= p_;
        }
        return out;
    }
    Elem from_ppoly(const detail::PPoly& c) const {
        uint64_t idx = 0;
        for (size_t i = c.size(); i-- > 0;) idx = idx * p_ + c[i];
        return {static_cast<uint32_t>(idx)};
    }

    Elem add_coords(Elem a, Elem b) const {
        uint64_t idx = 0, mul = 1, va = a.v, vb = b.v;
        for (uint32_t i = 0; i < en_; ++i) {
            idx += (va % p_ + vb % p_) % p_ * mul;
            va /= p_;
            vb /= p_;
            mul *= p_;
        }
        return {static_cast<uint32_t>(idx)};
    }
    Elem neg_coords(Elem a) const {
        uint64_t idx = 0, mul = 1, va = a.v;
        for (uint32_t i = 0; i < en_; ++i) {
            uint32_t d = va % p_;
            idx += (d == 0 ? 0 : p_ - d) * mul;
            va /= p_;
            mul *= p_;
        }
        return {static_cast<uint32_t>(idx)};
    }

    Elem pow_schoolbook(Elem a, uint64_t k) const {
        Elem r = one();
        while (k) {
            if (k & 1) r = mul_schoolbook(r, a);
            k >>= 1;
            if (k) a = mul_schoolbook(a, a);
        }
        return r;
    }

    Elem frobenius_no_tables(Elem a, uint32_t i) const {
        for (uint32_t k = 0; k < i * e_; ++k) a = pow_schoolbook(a, p_);
        return a;
    }

    std::vector<uint32_t> smallest_irreducible() const {
        // lexicographically smallest monic irreducible, coefficients ordered
        // low-to-high degree; scan order is the packed index of (c0..c_{en-1})
        std::vector<uint32_t> cand(en_ + 1, 0);
        cand[en_] = 1;
        for (uint64_t idx = 1; idx < size_; ++idx) {
            uint64_t v = idx;
            for (uint32_t i = 0; i < en_; ++i) {
                cand[i] = static_cast<uint32_t>(v % p_);
                v /= p_;
            }
            if (detail::is_irreducible(cand, p_)) return cand;
        }
        fail(Err::reducible, "no irreducible polynomial found"); // cannot happen
    }

    void find_generator() {
        if (order_ == 1) { // F_2: the unit group is trivial
            gen_ = one();
            return;
        }
        for (uint64_t c = 2; c < size_; ++c) {
            Elem a{static_cast<uint32_t>(c)};
            bool ok = true;
            for (uint64_t f : order_factors_)
                if (pow_schoolbook(a, order_ / f) == one()) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen_ = a;
                return;
            }
        }
        fail(Err::bad_parameter, "no generator found"); // cannot happen
    }

    void build_tables() {
        exp_.assign(2 * order_, 0);
        log_.assign(size_, kNoLog);
        Elem t = one();
        for (uint64_t k = 0; k < order_; ++k) {
            exp_[k] = t.v;
            if (log_[t.v] != kNoLog) fail(Err::bad_parameter, "generator order defect");
            log_[t.v] = static_cast<uint32_t>(k);
            t = mul_schoolbook(t, gen_);
        }
        if (t != one()) fail(Err::bad_parameter, "generator order defect");
        for (uint64_t k = 0; k < order_; ++k) exp_[order_ + k] = exp_[k];

        zech_.assign(order_, kNoLog);
        for (uint64_t k = 0; k < order_; ++k) {
            Elem s = add_coords(one(), Elem{exp_[k]});
            zech_[k] = s.v == 0 ? kNoLog : log_[s.v];
        }

        frob_q_.assign(size_, 0);
        frob_p_.assign(size_, 0);
        uint64_t qm = q_ % order_, pm = p_ % order_;
        for (uint64_t v = 1; v < size_; ++v) {
            frob_q_[v] = exp_[log_[v] * qm % order_];
            frob_p_[v] = exp_[log_[v] * pm % order_];
        }
        has_tables_ = true;
    }
};

} // namespace scatlab
