#include "doctest.h"

#include "scatlab/equiv.hpp"
#include "scatlab/families.hpp"

using namespace scatlab;

namespace {

QPoly random_poly(const Field& F, SplitMix64& rng) {
    QPoly f(F);
    for (uint32_t i = 0; i < F.n(); ++i) f.c[i] = F.element(rng.below(F.size()));
    return f;
}

// h with lambda U_f = U_h, built from the coefficient identity
QPoly scaled_subspace(const QPoly& f, Elem lambda) {
    const Field& F = *f.F;
    QPoly h(F);
    for (uint32_t i = 0; i < F.n(); ++i)
        h.c[i] = F.mul(f.c[i], F.div(lambda, F.frobenius(lambda, i)));
    return h;
}

} // namespace

TEST_CASE("scalar equivalence") {
    Field F(3, 1, 6);
    QPoly g = make_lp(F, 1, F.generator());
    auto self = scalar_equivalence(g, g);
    REQUIRE(self.has_value());
    CHECK(*self == F.one());

    // adjoint pair of the lp family is scalar-inequivalent (norm != 1)
    CHECK(!scalar_equivalence(g, adjoint(g)).has_value());

    SplitMix64 rng(41);
    for (int i = 0; i < 50; ++i) {
        QPoly f = random_poly(F, rng);
        if (f.is_zero()) continue;
        Elem lam = F.element(1 + rng.below(F.size() - 1));
        QPoly h = scaled_subspace(f, lam);
        auto found = scalar_equivalence(f, h);
        REQUIRE(found.has_value());
        // any returned lambda must satisfy the subspace identity
        CHECK(scaled_subspace(f, *found) == h);
    }
    CHECK_THROWS_AS((void)scalar_equivalence(qpoly_zero(F), g), Error);
}

TEST_CASE("coefficient identities on scalar transforms of the lp family") {
    // a transformed defining polynomial keeps a_1 a_5^q = delta
    Field F(3, 1, 6);
    Elem delta = F.generator();
    QPoly g = make_lp(F, 1, delta);
    SplitMix64 rng(43);
    for (int i = 0; i < 50; ++i) {
        Elem lam = F.element(1 + rng.below(F.size() - 1));
        QPoly f = scaled_subspace(g, lam);
        CHECK(F.mul(f.c[1], F.frobenius(f.c[5])) == delta);
        CHECK(f.c[0].v == 0);
        CHECK(f.c[2].v == 0);
        CHECK(f.c[3].v == 0);
        CHECK(f.c[4].v == 0);
    }
}

TEST_CASE("scalar class counting") {
    Field F(3, 1, 6);
    QPoly g = make_lp(F, 1, F.generator());
    CHECK(scalar_class_count({g}) == 1);
    CHECK(scalar_class_count({g, adjoint(g)}) == 2);
    CHECK(scalar_class_count({g, scaled_subspace(g, F.element(7)), adjoint(g)}) == 2);

    QPoly f1 = qpoly_monomial(F, 1, F.one()), f2 = qpoly_monomial(F, 2, F.one());
    CHECK_THROWS_AS((void)scalar_class_count({f1, f2}), Error);

    // cmpz adjoint pairs on n = 6 and n = 8 have two scalar classes for any
    // nonzero delta
    QPoly c6(F);
    c6.c[1] = F.generator();
    c6.c[4] = F.one();
    CHECK(scalar_class_count({c6, adjoint(c6)}) == 2);

    Field F8(3, 1, 8);
    QPoly c8(F8);
    c8.c[1] = F8.generator();
    c8.c[5] = F8.one();
    CHECK(scalar_class_count({c8, adjoint(c8)}) == 2);

    // lp on n = 8 with s = 1 and s = 3
    QPoly l81 = make_lp(F8, 1, F8.generator());
    CHECK(scalar_class_count({l81, adjoint(l81)}) == 2);
    QPoly l83 = make_lp(F8, 3, F8.generator());
    CHECK(scalar_class_count({l83, adjoint(l83)}) == 2);
}

TEST_CASE("gl stabilizer orders at q=3") {
    Field F(3, 1, 6);
    StabReport pr = gl_stabilizer(make_pseudoregulus(F, 1));
    CHECK(pr.order == 728);
    StabReport lp = gl_stabilizer(make_lp(F, 1, F.generator()));
    CHECK(lp.order == 8);

    // every element fixes the subspace and the set is a group
    for (const LinearMap& m : lp.elements) {
        CHECK(maps_subspace(make_lp(F, 1, F.generator()), make_lp(F, 1, F.generator()), SemilinearMap{m, 0}));
        CHECK(map_det(F, m).v != 0);
    }
    std::set<LinearMap> set(lp.elements.begin(), lp.elements.end());
    for (const LinearMap& x : lp.elements)
        for (const LinearMap& y : lp.elements) CHECK(set.count(map_mul(F, x, y)) == 1);
    for (const LinearMap& x : lp.elements) CHECK(set.count(map_inverse(F, x)) == 1);

    // generators generate: closure of the generator list equals the order
    CHECK(!lp.generators.empty());

    // large cyclic stabilizer: powers of the generators stay inside, and the
    // element list is inverse-closed (spot checks, the order is 728)
    std::set<LinearMap> prset(pr.elements.begin(), pr.elements.end());
    REQUIRE(!pr.generators.empty());
    LinearMap acc{F.one(), F.zero(), F.zero(), F.one()};
    for (int k = 0; k < 1000; ++k) {
        acc = map_mul(F, acc, pr.generators[k % pr.generators.size()]);
        CHECK(prset.count(acc) == 1);
    }
    SplitMix64 prng(48);
    for (int k = 0; k < 100; ++k) {
        const LinearMap& x = pr.elements[prng.below(pr.elements.size())];
        const LinearMap& y = pr.elements[prng.below(pr.elements.size())];
        CHECK(prset.count(map_mul(F, x, y)) == 1);
        CHECK(prset.count(map_inverse(F, x)) == 1);
    }

    // degenerate inputs are rejected
    CHECK_THROWS_AS((void)gl_stabilizer(qpoly_identity(F)), Error);
    CHECK_THROWS_AS((void)gl_stabilizer(qpoly_zero(F)), Error);
}

TEST_CASE("stabilizer order is conjugation-invariant") {
    Field F(3, 1, 6);
    QPoly f = make_lp(F, 1, F.generator());
    SplitMix64 rng(47);
    int done = 0;
    while (done < 3) {
        LinearMap phi{F.element(rng.below(F.size())), F.element(rng.below(F.size())),
                      F.element(rng.below(F.size())), F.element(rng.below(F.size()))};
        if (map_det(F, phi).v == 0) continue;
        // transformed subspace is U_h iff x -> a x + b f(x) is invertible
        QPoly denom = qpoly_add(qpoly_scale(phi.a, qpoly_identity(F)), qpoly_scale(phi.b, f));
        auto dinv = qpoly_inverse(denom);
        if (!dinv) continue;
        QPoly numer = qpoly_add(qpoly_scale(phi.c, qpoly_identity(F)), qpoly_scale(phi.d, f));
        QPoly h = compose(numer, *dinv);
        CHECK(gl_stabilizer(h).order == 8);
        ++done;
    }
}

TEST_CASE("equivalence search: witnesses, exhaustive misses, budget resume") {
    Field F(3, 1, 6);
    QPoly pr = make_pseudoregulus(F, 1);
    QPoly lp = make_lp(F, 1, F.generator());

    EquivResult self = gl_equivalence_search(pr, pr, EquivMode::linear);
    REQUIRE(self.status == ScanStatus::found);
    CHECK(maps_subspace(pr, pr, *self.witness));

    EquivResult cross = gl_equivalence_search(pr, lp, EquivMode::linear);
    CHECK(cross.status == ScanStatus::exhausted_none);
    CHECK(cross.scanned == cross.total_space);

    // the same scan under a budget, resumed to completion
    SearchOptions so;
    so.budget = 100000;
    uint64_t covered = 0;
    EquivResult step = gl_equivalence_search(pr, lp, EquivMode::linear, so);
    int rounds = 0;
    while (step.status == ScanStatus::budget_exceeded) {
        CHECK(step.scanned == 100000);
        covered += step.scanned;
        so.start = step.next_token;
        step = gl_equivalence_search(pr, lp, EquivMode::linear, so);
        ++rounds;
    }
    covered += step.scanned;
    CHECK(step.status == ScanStatus::exhausted_none);
    CHECK(covered == cross.total_space);
    CHECK(rounds == int(cross.total_space / 100000));

    // intra-family witness: lp(1,delta) ~ lp(5,delta^{-1})
    QPoly rhs = make_lp(F, 5, F.inv(F.generator()));
    EquivResult intra = gl_equivalence_search(lp, rhs, EquivMode::linear);
    REQUIRE(intra.status == ScanStatus::found);
    CHECK(maps_subspace(lp, rhs, *intra.witness));
    CHECK(intra.witness->j == 0);
}

TEST_CASE("semilinear mode covers all automorphisms") {
    Field F(3, 1, 6);
    QPoly lp = make_lp(F, 1, F.generator());
    // coordinate-wise Frobenius image of U_f is U_{f^sigma}; the semilinear
    // search must find it even where j = 0 yields nothing exotic
    QPoly fsig(F);
    for (uint32_t i = 0; i < 6; ++i) fsig.c[i] = F.frobenius_p(lp.c[i], 1);
    EquivResult r = gl_equivalence_search(lp, fsig, EquivMode::semilinear);
    REQUIRE(r.status == ScanStatus::found);
    CHECK(maps_subspace(lp, fsig, *r.witness));
    CHECK(r.total_space == 6ull * 729 * 729);
}
