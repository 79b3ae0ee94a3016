#pragma once

// Constructors and validators for the known families of (candidate) maximum
// scattered subspaces of F_{q^n} x F_{q^n}, plus the shifted Dickson matrix
// and closed-form minors used for the trinomial family on n = 6.

#include <numeric>

#include "linset.hpp"

namespace scatlab {

enum class FamilyTag { pr, lp, cmpz, tri };

inline const char* family_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::pr: return "pr";
        case FamilyTag::lp: return "lp";
        case FamilyTag::cmpz: return "cmpz";
        case FamilyTag::tri: return "tri";
    }
    return "?";
}

struct FamilySpec {
    FamilyTag tag = FamilyTag::pr;
    uint32_t s = 1;
    Elem b;     // tri
    Elem delta; // lp, cmpz
};

// x^{q^s}, gcd(s,n) = 1
inline QPoly make_pseudoregulus(const Field& F, uint32_t s) {
    if (s < 1 || s >= F.n() || std::gcd(s, F.n()) != 1)
        fail(Err::gcd_violation, "pseudoregulus: need 1 <= s <= n-1 with gcd(s,n) = 1");
    return qpoly_monomial(F, s, F.one());
}

// delta x^{q^s} + x^{q^{n-s}}, N_{q^n/q}(delta) not in {0,1}
inline QPoly make_lp(const Field& F, uint32_t s, Elem delta) {
    if (F.n() < 4) fail(Err::bad_degree, "lp family needs n >= 4");
    if (s < 1 || s >= F.n() || std::gcd(s, F.n()) != 1)
        fail(Err::gcd_violation, "lp: need gcd(s,n) = 1");
    Elem nv = F.norm(delta, 1);
    if (nv.v == 0 || nv == F.one()) fail(Err::norm_condition, "lp: N_{q^n/q}(delta) must avoid {0,1}");
    QPoly f = qpoly_monomial(F, s, delta);
    f.c[F.n() - s] = F.add(f.c[F.n() - s], F.one());
    return f;
}

// delta x^{q^s} + x^{q^{s+n/2}}, n in {6,8}, N_{q^n/q^{n/2}}(delta) not in
// {0,1}.  The norm condition is necessary, not sufficient: callers confirm
// scatteredness with is_scattered.
inline QPoly make_cmpz(const Field& F, uint32_t s, Elem delta) {
    const uint32_t n = F.n();
    if (n != 6 && n != 8) fail(Err::bad_degree, "cmpz family needs n in {6,8}");
    if (s < 1 || s >= n || std::gcd(s, n / 2) != 1) fail(Err::gcd_violation, "cmpz: need gcd(s,n/2) = 1");
    Elem nv = F.norm(delta, n / 2);
    if (nv.v == 0 || nv == F.one()) fail(Err::norm_condition, "cmpz: N_{q^n/q^{n/2}}(delta) must avoid {0,1}");
    QPoly f = qpoly_monomial(F, s, delta);
    uint32_t k = (s + n / 2) % n;
    f.c[k] = F.add(f.c[k], F.one());
    return f;
}

// x^q + x^{q^3} + b x^{q^5} on n = 6, q odd, q = 0,+-1 mod 5, b^2 + b = 1
// (which forces b into F_q)
inline QPoly make_trinomial(const Field& F, Elem b) {
    if (F.n() != 6) fail(Err::bad_degree, "trinomial family needs n = 6");
    if (F.p() == 2) fail(Err::bad_residue, "trinomial family needs q odd");
    uint64_t r5 = F.q() % 5;
    if (r5 != 0 && r5 != 1 && r5 != 4) fail(Err::bad_residue, "trinomial family needs q = 0,+-1 mod 5");
    if (F.add(F.mul(b, b), b) != F.one()) fail(Err::bad_parameter, "trinomial: b^2 + b = 1 required");
    if (!F.in_subfield(b, F.e())) fail(Err::bad_parameter, "trinomial: b must lie in F_q");
    QPoly f = qpoly_monomial(F, 1, F.one());
    f.c[3] = F.one();
    f.c[5] = b;
    return f;
}

// the admissible trinomial parameters, i.e. the roots of b^2 + b - 1
inline std::vector<Elem> trinomial_b_roots(const Field& F) {
    return F.quadratic_roots(F.one(), F.neg(F.one()));
}

// deterministic default parameters: powers of the generator in increasing
// exponent, first one passing the family conditions
inline Elem first_lp_delta(const Field& F) {
    for (uint64_t k = 1; k < F.group_order(); ++k) {
        Elem d = F.gpow(k);
        Elem nv = F.norm(d, 1);
        if (nv.v != 0 && nv != F.one()) return d;
    }
    fail(Err::norm_condition, "no lp delta exists");
}

inline Elem first_cmpz_delta(const Field& F, uint32_t s, unsigned threads = 0) {
    for (uint64_t k = 1; k < F.group_order(); ++k) {
        Elem d = F.gpow(k);
        Elem nv = F.norm(d, F.n() / 2);
        if (nv.v == 0 || nv == F.one()) continue;
        if (is_scattered(make_cmpz(F, s, d), threads).scattered) return d;
    }
    fail(Err::norm_condition, "no scattered cmpz delta found");
}

// Dickson matrix of m*x + x^q + x^{q^3} + b*x^{q^5}, the pencil whose rank
// floor drives the trinomial scatteredness proof
inline Mat trinomial_dickson(const Field& F, Elem m, Elem b) {
    if (F.n() != 6) fail(Err::bad_degree, "trinomial pencil needs n = 6");
    QPoly r(F);
    r.c[0] = m;
    r.c[1] = F.one();
    r.c[3] = F.one();
    r.c[5] = b;
    return dickson(r);
}

// closed forms of the deletion minors (row 6, columns 3 and 4) of the pencil
// matrix above; they match the direct cofactors up to one global sign fixed
// by trinomial_minor_sign
inline std::pair<Elem, Elem> trinomial_minor_formulas(const Field& F, Elem m, Elem b) {
    if (F.n() != 6) fail(Err::bad_degree, "trinomial minors need n = 6");
    const Elem one = F.one();
    const Elem two = F.from_int(2), three = F.from_int(3);
    const Elem bm1 = F.sub(b, one), onemb = F.sub(one, b);
    const uint64_t q = F.q();

    Elem n3 = F.norm(m, 3);                       // m^{1+q^3}
    Elem n3q = F.mul(F.frobenius(m), F.frobenius(m, 4)); // (m^q)^{1+q^3}
    Elem m63 = F.sub(two, F.mul(three, b));
    m63 = F.add(m63, F.mul(bm1, F.add(n3, n3q)));
    m63 = F.add(m63, F.pow(n3, q + 1));
    Elem diff = F.sub(F.mul(m, F.frobenius(m)), F.mul(F.frobenius(m, 3), F.frobenius(m, 4)));
    m63 = F.add(m63, F.mul(onemb, diff));

    Elem mq2 = F.frobenius(m, 2), mq4 = F.frobenius(m, 4);
    Elem m64 = F.mul(F.sub(two, F.mul(three, b)), F.add(m, mq2));
    m64 = F.add(m64, F.mul(onemb, mq4));
    Elem m1q = F.mul(m, F.frobenius(m)); // m^{1+q}
    m64 = F.add(m64, F.mul(m1q, mq2));
    m64 = F.add(m64, F.mul(b, F.add(F.mul(m1q, mq4), F.mul(F.frobenius(m), F.mul(mq2, mq4)))));
    return {m63, m64};
}

// +1 or -1: calibrated once against the direct cofactor at m = 0, where the
// first closed form reduces to 2 - 3b
inline int trinomial_minor_sign(const Field& F, Elem b) {
    Elem direct = deletion_minor(trinomial_dickson(F, F.zero(), b), 6, 3);
    Elem formula = F.sub(F.from_int(2), F.mul(F.from_int(3), b));
    if (direct == formula) return 1;
    if (direct == F.neg(formula)) return -1;
    fail(Err::bad_parameter, "minor formulas do not match the direct cofactor at m = 0");
}

} // namespace scatlab
