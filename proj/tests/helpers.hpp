#pragma once

// Shared test fixtures: deterministic random elements and the small zoo of
// exact matrices the suites keep coming back to.

#include <functional>
#include <random>

#include "fuchskit/moebius.hpp"
#include "fuchskit/surface_rep.hpp"

namespace fuchskit::testing {

inline Cplx I() { return Cplx(0.0, 1.0); }

// bounded random SL2 conjugators: entries in the unit square, rejected when
// the normalized matrix gets large (keeps conditioning sane)
inline MoebiusElement randomConjugator(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Cplx a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng)), d(u(rng), u(rng));
        if (std::abs(a * d - b * c) < 0.1) continue;
        MoebiusElement m(a, b, c, d);
        if (m.maxEntryAbs() <= 4.0) return m;
    }
}

inline MoebiusElement randomElement(std::mt19937_64& rng) { return randomConjugator(rng); }

// Random Moebius map in canonical position at z: f(z) = 0 and f'(z) = A with
// the pole at distance >= 1/qBound, composed with a random affine map. Every
// Moebius map is affine-equivalent to one of these, and the Schwarzian is
// exactly affine-invariant, so the family is fully generic for Schwarzian
// tests while keeping the stencil comfortably inside the analyticity disk.
inline std::function<Cplx(Cplx)> randomMoebiusMapAt(Cplx z, std::mt19937_64& rng,
                                                    double qBound = 0.2) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Cplx q(qBound * u(rng), qBound * u(rng));
    Cplx a(1.0 + 0.5 * u(rng), 0.5 * u(rng));
    Cplx b(u(rng), u(rng));
    return [z, q, a, b](Cplx w) {
        Cplx t = w - z;
        return a * (t / (Cplx(1.0) - q * t)) + b;
    };
}

inline MoebiusElement ellipticOfAlpha(Cplx alpha) {
    return MoebiusElement::diagonal(std::exp(Cplx(0.0, kPi) * alpha));
}

// the three trace-zero cusp matrices of the dihedral sphere example
inline std::vector<MoebiusElement> dihedralCusps() {
    MoebiusElement c0(I(), 0.0, 0.0, -I());
    MoebiusElement c1(0.0, I(), I(), 0.0);
    MoebiusElement c2 = (c0 * c1).inverse();
    return {c0, c1, c2};
}

inline SurfaceRepresentation dihedralSphereRep() {
    return SurfaceRepresentation({0, 3}, dihedralCusps());
}

// torus representation with commutator -Id
inline SurfaceRepresentation torusMinusIdRep() {
    MoebiusElement A(I(), 0.0, 0.0, -I());
    MoebiusElement B(0.0, Cplx(1.0), Cplx(-1.0), 0.0);
    return SurfaceRepresentation({1, 0}, {A, B});
}

} // namespace fuchskit::testing
