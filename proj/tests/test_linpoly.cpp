#include "doctest.h"

#include "scatlab/linpoly.hpp"
#include "scatlab/parallel.hpp"

using namespace scatlab;

namespace {

QPoly random_poly(const Field& F, SplitMix64& rng) {
    QPoly f(F);
    for (uint32_t i = 0; i < F.n(); ++i) f.c[i] = F.element(rng.below(F.size()));
    return f;
}

} // namespace

TEST_CASE("evaluation") {
    Field F(3, 1, 6);
    QPoly xq = qpoly_monomial(F, 1, F.one());
    for (Elem c : F.subfield_elements(1)) CHECK(eval(xq, c) == c);
    CHECK(eval(qpoly_zero(F), F.element(5)).v == 0);

    QPoly trace(F);
    for (uint32_t i = 0; i < F.n(); ++i) trace.c[i] = F.one();
    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Elem x = F.element(rng.below(F.size()));
        CHECK(F.in_subfield(eval(trace, x), F.e()));
    }
}

TEST_CASE("evaluation is F_q-linear") {
    Field F(2, 2, 6); // q = 4 exercises e > 1
    SplitMix64 rng(12);
    auto fq = F.subfield_elements(F.e());
    for (int i = 0; i < 50; ++i) {
        QPoly f = random_poly(F, rng);
        Elem x = F.element(rng.below(F.size())), y = F.element(rng.below(F.size()));
        CHECK(eval(f, F.add(x, y)) == F.add(eval(f, x), eval(f, y)));
        Elem c = fq[rng.below(fq.size())];
        CHECK(eval(f, F.mul(c, x)) == F.mul(c, eval(f, x)));
    }
}

TEST_CASE("composition") {
    Field F(3, 1, 6);
    QPoly xq = qpoly_monomial(F, 1, F.one());
    CHECK(compose(xq, xq) == qpoly_monomial(F, 2, F.one()));
    QPoly x3 = qpoly_monomial(F, 3, F.one());
    CHECK(compose(x3, x3) == qpoly_identity(F)); // q^6 = q^0

    SplitMix64 rng(13);
    for (int i = 0; i < 50; ++i) {
        QPoly f = random_poly(F, rng), g = random_poly(F, rng), h = random_poly(F, rng);
        CHECK(compose(f, qpoly_identity(F)) == f);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        Elem x = F.element(rng.below(F.size()));
        CHECK(eval(compose(f, g), x) == eval(f, eval(g, x)));
        CHECK(adjoint(compose(f, g)) == compose(adjoint(g), adjoint(f)));
    }
}

TEST_CASE("adjoint matches the displayed closed forms") {
    Field F(3, 1, 6);
    Elem delta = F.generator();
    QPoly g(F);
    g.c[1] = delta;
    g.c[5] = F.one();
    QPoly gh = adjoint(g);
    QPoly expect(F);
    expect.c[5] = F.frobenius(delta, 5);
    expect.c[1] = F.one();
    CHECK(gh == expect);

    Field F5(5, 1, 6);
    Elem b = F5.from_int(2);
    QPoly tri(F5);
    tri.c[1] = F5.one();
    tri.c[3] = F5.one();
    tri.c[5] = b;
    QPoly th = adjoint(tri);
    QPoly texpect(F5);
    texpect.c[1] = F5.frobenius(b); // b^q (= b here, b in F_q)
    texpect.c[3] = F5.one();
    texpect.c[5] = F5.one();
    CHECK(th == texpect);

    SplitMix64 rng(14);
    for (int i = 0; i < 100; ++i) {
        QPoly f = random_poly(F, rng);
        CHECK(adjoint(adjoint(f)) == f);
    }
}

TEST_CASE("dickson matrix layout") {
    Field F(3, 1, 6);
    CHECK(dickson(qpoly_identity(F)) == Mat::identity(F, 6));
    Mat D = dickson(qpoly_monomial(F, 1, F.one()));
    for (uint32_t i = 0; i < 6; ++i)
        for (uint32_t j = 0; j < 6; ++j) CHECK((D.at(i, j).v != 0) == (j == (i + 1) % 6));
}

TEST_CASE("dickson matrices multiply like compositions") {
    Field F(3, 1, 6);
    SplitMix64 rng(15);
    for (int i = 0; i < 30; ++i) {
        QPoly f = random_poly(F, rng), g = random_poly(F, rng);
        CHECK(dickson(compose(f, g)) == mat_mul(dickson(f), dickson(g)));
    }
}

TEST_CASE("rank, determinant, kernel") {
    Field F(3, 1, 6);
    CHECK(rank(Mat::identity(F, 6)) == 6);

    Mat twin(F, 3);
    for (uint32_t j = 0; j < 3; ++j) {
        twin.at(0, j) = F.element(j + 1);
        twin.at(1, j) = F.element(j + 1);
        twin.at(2, j) = F.element(2 * j + 1);
    }
    CHECK(det(twin).v == 0);

    CHECK(kernel_dim(qpoly_zero(F)) == 6);
    CHECK(kernel_dim(qpoly_identity(F)) == 0);
    QPoly fermat = qpoly_monomial(F, 1, F.one()); // x^q - x
    fermat.c[0] = F.neg(F.one());
    CHECK(kernel_dim(fermat) == 1);

    SplitMix64 rng(16);
    for (int i = 0; i < 200; ++i) {
        QPoly f = random_poly(F, rng);
        Mat D = dickson(f);
        auto [r, d] = rank_det(D);
        CHECK(r == 6 - kernel_dim_exhaustive(f)); // independent enumeration oracle
        CHECK((d.v != 0) == (r == 6));
    }
}

TEST_CASE("deletion minor indexing") {
    Field F(5, 1, 6);
    Mat m(F, 2);
    m.at(0, 0) = F.element(1);
    m.at(0, 1) = F.element(2);
    m.at(1, 0) = F.element(3);
    m.at(1, 1) = F.element(4);
    CHECK(deletion_minor(m, 1, 1) == F.element(4));
    CHECK(deletion_minor(m, 2, 1) == F.element(2));
    CHECK(deletion_minor(m, 1, 2) == F.element(3));
}

TEST_CASE("inverse and q-polynomial inverse") {
    Field F(3, 1, 6);
    SplitMix64 rng(18);
    int invertible = 0;
    for (int i = 0; i < 60 || invertible < 10; ++i) {
        QPoly f = random_poly(F, rng);
        auto fi = qpoly_inverse(f);
        if (!fi) {
            CHECK(kernel_dim(f) > 0);
            continue;
        }
        ++invertible;
        CHECK(compose(f, *fi) == qpoly_identity(F));
        CHECK(compose(*fi, f) == qpoly_identity(F));
        Mat D = dickson(f);
        auto Di = inverse(D);
        REQUIRE(Di.has_value());
        CHECK(mat_mul(D, *Di) == Mat::identity(F, 6));
    }
}
