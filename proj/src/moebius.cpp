#include "fuchskit/moebius.hpp"

#include <algorithm>
#include <cmath>

namespace fuchskit {

SpherePoint::SpherePoint(Cplx numerator, Cplx denominator) : z0(numerator), z1(denominator) {
    if (!isFiniteC(z0) || !isFiniteC(z1))
        fail(ErrorKind::InvalidInput, "SpherePoint: non-finite homogeneous coordinates");
    double m = std::max(std::abs(z0), std::abs(z1));
    if (m == 0.0)
        fail(ErrorKind::InvalidInput, "SpherePoint: (0 : 0) is not a point");
    z0 /= m;
    z1 /= m;
}

MoebiusElement::MoebiusElement(Cplx a_, Cplx b_, Cplx c_, Cplx d_) : a(a_), b(b_), c(c_), d(d_) {
    if (!isFiniteC(a) || !isFiniteC(b) || !isFiniteC(c) || !isFiniteC(d))
        fail(ErrorKind::InvalidInput, "MoebiusElement: non-finite entries");
    Cplx det0 = a * d - b * c;
    if (std::abs(det0) < 1e-12)
        fail(ErrorKind::InvalidInput, "MoebiusElement: determinant too close to zero");
    Cplx s = std::sqrt(det0); // principal branch; keeps the sign of near-SL2 inputs
    a /= s;
    b /= s;
    c /= s;
    d /= s;
}

MoebiusElement MoebiusElement::diagonal(Cplx lambda) {
    return MoebiusElement(lambda, Cplx(0.0), Cplx(0.0), Cplx(1.0) / lambda);
}

MoebiusElement MoebiusElement::parabolicTranslation(Cplx t) {
    return MoebiusElement(Cplx(1.0), t, Cplx(0.0), Cplx(1.0));
}

MoebiusElement MoebiusElement::inverse() const {
    MoebiusElement r;
    r.a = d;
    r.b = -b;
    r.c = -c;
    r.d = a;
    return r;
}

MoebiusElement MoebiusElement::negated() const {
    MoebiusElement r;
    r.a = -a;
    r.b = -b;
    r.c = -c;
    r.d = -d;
    return r;
}

SpherePoint MoebiusElement::apply(const SpherePoint& p) const {
    return SpherePoint(a * p.z0 + b * p.z1, c * p.z0 + d * p.z1);
}

double MoebiusElement::maxEntryAbs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
}

double MoebiusElement::distTo(const MoebiusElement& m) const {
    return std::max(std::max(std::abs(a - m.a), std::abs(b - m.b)),
                    std::max(std::abs(c - m.c), std::abs(d - m.d)));
}

double MoebiusElement::pslDistTo(const MoebiusElement& m) const {
    return std::min(distTo(m), distTo(m.negated()));
}

bool MoebiusElement::isIdentityUpToSign(double tol) const {
    return pslDistTo(MoebiusElement::identity()) <= tol;
}

MoebiusElement compose(const MoebiusElement& m1, const MoebiusElement& m2) {
    MoebiusElement r;
    r.a = m1.a * m2.a + m1.b * m2.c;
    r.b = m1.a * m2.b + m1.b * m2.d;
    r.c = m1.c * m2.a + m1.d * m2.c;
    r.d = m1.c * m2.b + m1.d * m2.d;
    // renormalize drift without touching the sign: det is ~1, so the
    // principal square root is ~1. Once the entries reach ~1e8 the computed
    // det is pure cancellation noise; dividing by it would corrupt the
    // product, so the correction only applies when the drift is credible.
    Cplx det = r.det();
    if (std::abs(det - Cplx(1.0)) < 0.125) {
        Cplx s = std::sqrt(det);
        r.a /= s;
        r.b /= s;
        r.c /= s;
        r.d /= s;
    }
    return r;
}

Cplx normalizeAlphaRepresentative(Cplx raw) {
    auto intoUnit = [](Cplx z) {
        double re = z.real() - std::floor(z.real());
        if (re >= 1.0) re -= 1.0; // floor edge for re just below an integer
        return Cplx(re, z.imag());
    };
    Cplx c1 = intoUnit(raw);
    Cplx c2 = intoUnit(-raw);
    // ties in Re (the sign-swap fixed loci Re = 0 and Re = 1/2) are decided
    // by the smaller imaginary part, with a small band so roundoff cannot
    // flip the choice between conjugate representatives
    if (std::abs(c1.real() - c2.real()) <= 1e-9) return c1.imag() <= c2.imag() ? c1 : c2;
    return c1.real() < c2.real() ? c1 : c2;
}

namespace {

// Kernel direction of (M - lambda I), the larger of the two algebraic
// candidates.
SpherePoint eigenDirection(const MoebiusElement& m, Cplx lambda) {
    Cplx x1 = m.b, y1 = lambda - m.a;
    Cplx x2 = lambda - m.d, y2 = m.c;
    double n1 = absSq(x1) + absSq(y1);
    double n2 = absSq(x2) + absSq(y2);
    if (n1 == 0.0 && n2 == 0.0)
        fail(ErrorKind::TrivialElement, "eigenDirection: scalar matrix");
    return n1 >= n2 ? SpherePoint(x1, y1) : SpherePoint(x2, y2);
}

// Conjugator with rows orthogonal to the given directions: sends vZero to 0
// and vInf to infinity.
MoebiusElement conjugatorSending(const SpherePoint& vZero, const SpherePoint& vInf) {
    return MoebiusElement(vZero.z1, -vZero.z0, vInf.z1, -vInf.z0);
}

struct ParabolicForm {
    MoebiusElement conjugator;
    Cplx translation;
    double residual; // departure from the unipotent form, beyond translation
};

ParabolicForm parabolicNormalForm(const MoebiusElement& m, double tol) {
    double sign = m.trace().real() >= 0.0 ? 1.0 : -1.0;
    MoebiusElement ms = sign > 0 ? m : m.negated();
    double scale = 1.0 + m.maxEntryAbs();

    MoebiusElement conj = MoebiusElement::identity();
    if (std::abs(ms.c) > tol * scale) {
        SpherePoint fixed = eigenDirection(ms, Cplx(1.0));
        // second row kills the fixed direction (sends it to infinity);
        // first row is any independent companion
        conj = MoebiusElement(std::conj(fixed.z0), std::conj(fixed.z1), fixed.z1, -fixed.z0);
    }
    MoebiusElement n = conj * ms * conj.inverse();
    ParabolicForm out;
    out.conjugator = conj;
    out.translation = n.b;
    out.residual = std::abs(n.c) + std::abs(n.a - Cplx(1.0)) + std::abs(n.d - Cplx(1.0));
    return out;
}

} // namespace

MonodromyClass classify(const MoebiusElement& m, double tol) {
    if (m.isIdentityUpToSign(tol)) return MonodromyClass::trivial();

    Cplx tr = m.trace();
    Cplx disc = tr * tr - Cplx(4.0);
    if (std::abs(disc) <= tol) {
        ParabolicForm pf = parabolicNormalForm(m, tol);
        double scale = 1.0 + m.maxEntryAbs();
        if (pf.residual > 1e3 * tol * scale)
            fail(ErrorKind::IllConditioned,
                 "classify: trace^2 is within tol of 4 but the element has two "
                 "distinct eigendirections; tighten tol");
        if (std::abs(pf.translation) <= 10.0 * tol * scale)
            fail(ErrorKind::IllConditioned,
                 "classify: parabolic normal form degenerates to the identity; tighten tol");
        return MonodromyClass::parabolic(pf.translation);
    }

    Cplx lambda = (tr + std::sqrt(disc)) / 2.0;
    Cplx multiplier = lambda * lambda;
    Cplx rawAlpha = std::log(multiplier) / Cplx(0.0, kTwoPi);
    return MonodromyClass::nonParabolic(normalizeAlphaRepresentative(rawAlpha));
}

NormalForm normalFormConjugator(const MoebiusElement& m, double tol) {
    if (m.isIdentityUpToSign(tol))
        fail(ErrorKind::TrivialElement, "normalFormConjugator: element is +-Id");

    MonodromyClass cls = classify(m, tol);
    if (cls.kind == ElementKind::Parabolic) {
        ParabolicForm pf = parabolicNormalForm(m, tol);
        return NormalForm{pf.conjugator, cls};
    }

    Cplx tr = m.trace();
    Cplx disc = tr * tr - Cplx(4.0);
    Cplx lambda = (tr + std::sqrt(disc)) / 2.0;
    Cplx lambdaInv = Cplx(1.0) / lambda;

    // order the eigenvectors so the multiplier at the fixed point 0 of the
    // diagonal form is e^{2 pi i alpha} with the canonical alpha
    Cplx target = std::exp(Cplx(0.0, kTwoPi) * cls.alpha);
    Cplx muTop = lambda * lambda; // multiplier at 0 when lambda sits top-left
    Cplx vTopLambda = std::abs(muTop - target) <= std::abs(Cplx(1.0) / muTop - target)
                          ? lambda
                          : lambdaInv;
    Cplx vBotLambda = Cplx(1.0) / vTopLambda;

    SpherePoint vInf = eigenDirection(m, vTopLambda);
    SpherePoint vZero = eigenDirection(m, vBotLambda);
    return NormalForm{conjugatorSending(vZero, vInf), cls};
}

std::vector<SpherePoint> fixedPoints(const MoebiusElement& m, double tol) {
    if (m.isIdentityUpToSign(tol))
        fail(ErrorKind::TrivialElement, "fixedPoints: element is +-Id");

    MonodromyClass cls = classify(m, tol);
    if (cls.kind == ElementKind::Parabolic) {
        double sign = m.trace().real() >= 0.0 ? 1.0 : -1.0;
        MoebiusElement ms = sign > 0 ? m : m.negated();
        return {eigenDirection(ms, Cplx(1.0))};
    }

    Cplx tr = m.trace();
    Cplx disc = tr * tr - Cplx(4.0);
    Cplx lambda = (tr + std::sqrt(disc)) / 2.0;
    std::vector<SpherePoint> pts{eigenDirection(m, lambda),
                                 eigenDirection(m, Cplx(1.0) / lambda)};
    std::sort(pts.begin(), pts.end(), [tol](const SpherePoint& p, const SpherePoint& q) {
        bool pInf = p.isInfinity(tol), qInf = q.isInfinity(tol);
        if (pInf != qInf) return qInf; // finite first
        if (pInf && qInf) return false;
        Cplx pa = p.affine(), qa = q.affine();
        if (pa.real() != qa.real()) return pa.real() < qa.real();
        return pa.imag() < qa.imag();
    });
    return pts;
}

} // namespace fuchskit
