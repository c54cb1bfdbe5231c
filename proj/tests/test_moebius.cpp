#include <doctest.h>

#include "fuchskit/moebius.hpp"
#include "helpers.hpp"

using namespace fuchskit;
using fuchskit::testing::I;
using fuchskit::testing::randomConjugator;

TEST_CASE("compose: identity, inverse, explicit product") {
    MoebiusElement m = randomConjugator(*[] {
        static std::mt19937_64 rng(7);
        return &rng;
    }());
    CHECK(compose(MoebiusElement::identity(), m).distTo(m) < 1e-12);
    CHECK(compose(m, m.inverse()).distTo(MoebiusElement::identity()) < 1e-12);

    // diag(i,-i) * [[0,i],[i,0]] = [[0,-1],[1,0]]
    MoebiusElement d(I(), 0.0, 0.0, -I());
    MoebiusElement s(0.0, I(), I(), 0.0);
    MoebiusElement expected(0.0, Cplx(-1.0), Cplx(1.0), 0.0);
    CHECK((d * s).distTo(expected) < 1e-12);
}

TEST_CASE("compose: associativity and determinant drift over long chains") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);

    // bounded chain (unitary elements): det stays 1 absolutely
    MoebiusElement acc = MoebiusElement::identity();
    int detFailures = 0;
    for (int i = 0; i < 10000; ++i) {
        Cplx a(u(rng), u(rng)), b(u(rng), u(rng));
        double n = std::sqrt(absSq(a) + absSq(b));
        if (n < 0.1) continue;
        MoebiusElement m(a / n, b / n, -std::conj(b) / n, std::conj(a) / n);
        acc = acc * m;
        if (std::abs(acc.det() - Cplx(1.0)) >= 1e-12) ++detFailures;
    }
    CHECK(detFailures == 0);

    // unbounded chains grow exponentially (det evaluation overflows once the
    // entries pass ~1e154); det accuracy is relative to the squared entry
    // scale, and the chain restarts before the overflow regime
    MoebiusElement wild = MoebiusElement::identity();
    for (int i = 0; i < 10000; ++i) {
        wild = wild * randomConjugator(rng);
        double scale = wild.maxEntryAbs();
        REQUIRE(std::abs(wild.det() - Cplx(1.0)) < 1e-12 * (1.0 + scale * scale));
        if (scale > 1e60) wild = MoebiusElement::identity();
    }

    // associativity on random triples
    for (int i = 0; i < 100; ++i) {
        MoebiusElement a = randomConjugator(rng), b = randomConjugator(rng),
                       c = randomConjugator(rng);
        CHECK(((a * b) * c).distTo(a * (b * c)) < 1e-12);
    }
}

TEST_CASE("classify: the three kinds") {
    CHECK(classify(MoebiusElement::identity()).kind == ElementKind::Trivial);
    CHECK(classify(MoebiusElement::identity().negated()).kind == ElementKind::Trivial);

    auto parab = classify(MoebiusElement::parabolicTranslation(Cplx(1.0)));
    CHECK(parab.kind == ElementKind::Parabolic);
    CHECK(std::abs(parab.translationLength - Cplx(1.0)) < 1e-12);

    auto ell = classify(MoebiusElement::diagonal(std::polar(1.0, kPi / 3.0)));
    CHECK(ell.kind == ElementKind::NonParabolic);
    CHECK(std::abs(ell.alpha - Cplx(1.0 / 3.0)) < 1e-12);
}

TEST_CASE("classify: conjugation invariance over random conjugators") {
    std::mt19937_64 rng(23);
    MoebiusElement seed = MoebiusElement::diagonal(std::polar(1.0, kPi / 3.0));
    for (int i = 0; i < 1000; ++i) {
        MoebiusElement c = randomConjugator(rng);
        auto cls = classify(c * seed * c.inverse());
        REQUIRE(cls.kind == ElementKind::NonParabolic);
        REQUIRE(std::abs(cls.alpha - Cplx(1.0 / 3.0)) < 1e-8);
    }
}

TEST_CASE("classify: alpha of the inverse is the normalized negative") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 50; ++i) {
        MoebiusElement c = randomConjugator(rng);
        Cplx alpha(0.3, 0.11);
        MoebiusElement m = c * MoebiusElement::diagonal(std::exp(Cplx(0.0, kPi) * alpha)) * c.inverse();
        auto cls = classify(m);
        auto clsInv = classify(m.inverse());
        REQUIRE(cls.kind == ElementKind::NonParabolic);
        REQUIRE(clsInv.kind == ElementKind::NonParabolic);
        CHECK(std::abs(clsInv.alpha - normalizeAlphaRepresentative(-cls.alpha)) < 1e-9);
    }
}

TEST_CASE("classify: near-parabolic diagonal is flagged ill-conditioned") {
    double e = 1e-6;
    MoebiusElement nearPar(Cplx(1.0 + e), 0.0, 0.0, Cplx(1.0 / (1.0 + e)));
    CHECK_THROWS_WITH_AS((void)classify(nearPar, 1e-9), doctest::Contains("tighten"), Error);
}

TEST_CASE("normalizeAlphaRepresentative picks the lexicographic minimum") {
    CHECK(std::abs(normalizeAlphaRepresentative(Cplx(1.0 / 3.0)) - Cplx(1.0 / 3.0)) < 1e-15);
    CHECK(std::abs(normalizeAlphaRepresentative(Cplx(-1.0 / 3.0)) - Cplx(1.0 / 3.0)) < 1e-15);
    CHECK(std::abs(normalizeAlphaRepresentative(Cplx(7.0 / 3.0)) - Cplx(1.0 / 3.0)) < 1e-15);
    // Re tie at 1/2: smaller imaginary part wins
    Cplx z = normalizeAlphaRepresentative(Cplx(0.5, 0.25));
    CHECK(std::abs(z - Cplx(0.5, -0.25)) < 1e-15);
}

TEST_CASE("normalFormConjugator: diagonal, parabolic, loxodromic") {
    SUBCASE("already diagonal") {
        MoebiusElement m = MoebiusElement::diagonal(Cplx(2.0, 0.3));
        auto nf = normalFormConjugator(m);
        MoebiusElement n = nf.conjugator * m * nf.conjugator.inverse();
        CHECK(std::abs(n.b) < 1e-9);
        CHECK(std::abs(n.c) < 1e-9);
        // multiplier at 0 matches the class representative
        Cplx mult = n.a / n.d;
        CHECK(std::abs(mult - std::exp(Cplx(0.0, kTwoPi) * nf.cls.alpha)) < 1e-9);
    }
    SUBCASE("lower-triangular parabolic goes upper-triangular") {
        MoebiusElement m(Cplx(1.0), 0.0, Cplx(1.0), Cplx(1.0));
        auto nf = normalFormConjugator(m);
        MoebiusElement n = nf.conjugator * m * nf.conjugator.inverse();
        CHECK(nf.cls.kind == ElementKind::Parabolic);
        CHECK(std::abs(n.c) < 1e-9);
        CHECK(n.pslDistTo(MoebiusElement::parabolicTranslation(n.b / n.a)) < 1e-9);
    }
    SUBCASE("random loxodromic: fixed points to 0 and infinity") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            MoebiusElement c = randomConjugator(rng);
            MoebiusElement m = c * MoebiusElement::diagonal(Cplx(1.7, 0.4)) * c.inverse();
            auto nf = normalFormConjugator(m);
            MoebiusElement n = nf.conjugator * m * nf.conjugator.inverse();
            REQUIRE(std::abs(n.b) < 1e-9);
            REQUIRE(std::abs(n.c) < 1e-9);
        }
    }
    SUBCASE("trivial element is rejected") {
        CHECK_THROWS_AS((void)normalFormConjugator(MoebiusElement::identity()), Error);
    }
}

TEST_CASE("fixedPoints: diagonal, parabolic, rotation") {
    auto dia = fixedPoints(MoebiusElement::diagonal(Cplx(2.0)));
    REQUIRE(dia.size() == 2);
    CHECK(dia[0].projDistTo(SpherePoint::fromAffine(Cplx(0.0))) < 1e-12);
    CHECK(dia[1].projDistTo(SpherePoint::infinity()) < 1e-12);

    auto par = fixedPoints(MoebiusElement::parabolicTranslation(Cplx(1.0)));
    REQUIRE(par.size() == 1);
    CHECK(par[0].projDistTo(SpherePoint::infinity()) < 1e-12);

    // [[0,1],[-1,0]] fixes +-i
    auto rot = fixedPoints(MoebiusElement(0.0, Cplx(1.0), Cplx(-1.0), 0.0));
    REQUIRE(rot.size() == 2);
    CHECK(rot[0].projDistTo(SpherePoint::fromAffine(-I())) < 1e-9);
    CHECK(rot[1].projDistTo(SpherePoint::fromAffine(I())) < 1e-9);
}

TEST_CASE("fixedPoints are fixed by apply") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        MoebiusElement m = randomConjugator(rng);
        if (m.isIdentityUpToSign(1e-6)) continue;
        MonodromyClass cls;
        try {
            cls = classify(m);
        } catch (const Error&) {
            continue; // skip accidental near-parabolic draws
        }
        for (const auto& p : fixedPoints(m))
            CHECK(m.apply(p).projDistTo(p) < 1e-9);
    }
}
