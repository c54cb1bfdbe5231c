#include <doctest.h>

#include <random>

#include "fuchskit/schwarzian.hpp"
#include "helpers.hpp"

using namespace fuchskit;
using namespace fuchskit::testing;

TEST_CASE("schwarzianNumeric: homographies are annihilated") {
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 400; ++i) {
        Cplx z(u(rng), u(rng));
        auto f = randomMoebiusMapAt(z, rng);
        CHECK(std::abs(schwarzianNumeric(f, z)) < 1e-8);
    }
}

TEST_CASE("schwarzianNumeric: closed forms of z^2 and z^{1/2}") {
    auto sq = [](Cplx z) { return z * z; };
    CHECK(std::abs(schwarzianNumeric(sq, Cplx(0.5)) - Cplx(-6.0)) < 1e-7);

    auto root = [](Cplx z) { return std::sqrt(z); };
    CHECK(std::abs(schwarzianNumeric(root, Cplx(1.0)) - Cplx(3.0 / 8.0)) < 1e-7);
}

TEST_CASE("schwarzianNumeric agrees with (1-a^2)/(2z^2) on a ring") {
    const Cplx alphas[] = {Cplx(0.5), Cplx(2.0), Cplx(1.5),
                           Cplx(2.5, 0.3), Cplx(0.7, -0.2), Cplx(3.0)};
    for (Cplx a : alphas) {
        for (int k = 0; k < 8; ++k) {
            double r = 0.3 + 0.4 * (k / 7.0);
            Cplx z = std::polar(r, 0.4 + 0.7 * k);
            auto f = [&](Cplx w) { return std::pow(w, a); };
            Cplx expected = localLeadingCoefficient(a) / (z * z);
            CAPTURE(a.real());
            CAPTURE(k);
            CHECK(std::abs(schwarzianNumeric(f, z) - expected) < 1e-5 * std::abs(expected));
        }
    }
}

TEST_CASE("schwarzianNumeric: Moebius invariance (cocycle)") {
    std::mt19937_64 rng(89);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    auto f = [](Cplx z) { return std::exp(z); };
    for (int i = 0; i < 50; ++i) {
        Cplx z(u(rng), u(rng));
        auto post = randomMoebiusMapAt(std::exp(z), rng);
        auto g = [&](Cplx w) { return post(std::exp(w)); };
        Cplx sf = schwarzianNumeric(f, z);
        Cplx sg = schwarzianNumeric(g, z);
        CHECK(std::abs(sf - sg) < 1e-5 * (1.0 + std::abs(sf)));
    }
}

TEST_CASE("schwarzianNumeric: error conditions") {
    auto constant = [](Cplx) { return Cplx(1.0); };
    CHECK_THROWS_AS((void)schwarzianNumeric(constant, Cplx(0.3)), Error);
    auto f = [](Cplx z) { return z * z; };
    CHECK_THROWS_AS((void)schwarzianNumeric(f, Cplx(0.5), 1e-300), Error);
}

TEST_CASE("localLeadingCoefficient") {
    CHECK(std::abs(localLeadingCoefficient(Cplx(1.0))) < 1e-15);
    CHECK(std::abs(localLeadingCoefficient(Cplx(2.0)) - Cplx(-1.5)) < 1e-15);
    CHECK(std::abs(localLeadingCoefficient(Cplx(0.5)) - Cplx(3.0 / 8.0)) < 1e-15);
}

TEST_CASE("triangleDifferential: coefficients and sample value") {
    auto qd = triangleDifferential(Cplx(0.5), Cplx(0.5), Cplx(0.5));
    CHECK(std::abs(qd.coeff0() - Cplx(3.0 / 8.0)) < 1e-15);
    CHECK(std::abs(qd.coeff1() - Cplx(3.0 / 8.0)) < 1e-15);
    CHECK(std::abs(qd.coeffMixed() - Cplx(3.0 / 8.0)) < 1e-15);
    // 3/32 + 3/8 - 3/16: the mixed term carries 1/(z(1-z)), negative at z = 2
    CHECK(std::abs(qd(Cplx(2.0)) - Cplx(9.0 / 32.0)) < 1e-15);

    auto flat = triangleDifferential(Cplx(1.0), Cplx(1.0), Cplx(1.0));
    CHECK(std::abs(flat.coeff0()) < 1e-15);
    CHECK(std::abs(flat.coeff1()) < 1e-15);
    CHECK(std::abs(flat.coeffMixed()) < 1e-15);
    CHECK(std::abs(flat(Cplx(0.3, 0.4))) < 1e-15);
}

TEST_CASE("relationCheck: literal integrality of the exponent sum") {
    CHECK(relationCheck(Cplx(1.0 / 3.0), Cplx(1.0 / 3.0), Cplx(1.0 / 3.0)));
    CHECK_FALSE(relationCheck(Cplx(0.5), Cplx(0.5), Cplx(0.5)));
    CHECK(relationCheck(Cplx(0.0), Cplx(0.0), Cplx(0.0)));
    CHECK_FALSE(relationCheck(Cplx(0.5, 0.1), Cplx(0.25), Cplx(0.25)));
}

TEST_CASE("odeMonodromy: flat differential gives trivial loops") {
    auto flat = triangleDifferential(Cplx(1.0), Cplx(1.0), Cplx(1.0));
    for (Loop loop : {Loop::Around0, Loop::Around1, Loop::AroundInf}) {
        auto m = odeMonodromy(flat, loop, Cplx(0.0, 2.0), 20000);
        CHECK(m.pslDistTo(MoebiusElement::identity()) < 1e-6);
    }
}

TEST_CASE("odeMonodromy: local traces and the loop relation") {
    auto qd = triangleDifferential(Cplx(1.0 / 3.0), Cplx(1.0 / 3.0), Cplx(1.0 / 3.0));
    auto m0 = odeMonodromy(qd, Loop::Around0, Cplx(0.0, 2.0), 40000);
    auto m1 = odeMonodromy(qd, Loop::Around1, Cplx(0.0, 2.0), 40000);
    auto mInf = odeMonodromy(qd, Loop::AroundInf, Cplx(0.0, 2.0), 40000);

    // trace^2 = 4 cos^2(pi/3) = 1
    CHECK(std::abs(m0.trace() * m0.trace() - Cplx(1.0)) < 1e-4);
    CHECK(std::abs(m1.trace() * m1.trace() - Cplx(1.0)) < 1e-4);

    auto prod = m0 * m1 * mInf;
    double residual = std::min(prod.distTo(MoebiusElement::identity()),
                               prod.distTo(MoebiusElement::identity().negated()));
    CHECK(residual < 1e-4);
}

TEST_CASE("odeMonodromy: guards") {
    auto qd = triangleDifferential(Cplx(0.5), Cplx(0.5), Cplx(0.5));
    CHECK_THROWS_AS((void)odeMonodromy(qd, Loop::Around0, Cplx(0.0, 2.0), 100), Error);
    CHECK_THROWS_AS((void)odeMonodromy(qd, Loop::Around0, Cplx(0.1, 0.0), 20000), Error);
}
