#pragma once

// Sign-tracked SL2(C) matrices acting on CP^1 as Moebius transformations,
// with classification of the underlying PSL2(C) conjugacy class
// (trivial / parabolic / non-parabolic) and fixed-point machinery.
//
// An element stores one explicit SL2(C) lift of its PSL2(C) class {+-M};
// the sign is meaningful only where a lift is requested explicitly
// (relation products, minimal lifts).

#include <vector>

#include "fuchskit/errors.hpp"
#include "fuchskit/numeric.hpp"

namespace fuchskit {

// Point of CP^1 in homogeneous coordinates (z0 : z1), not both zero,
// normalized to unit max-modulus. All operations respect scale equivalence.
struct SpherePoint {
    Cplx z0{0.0, 0.0};
    Cplx z1{1.0, 0.0};

    SpherePoint() = default;
    SpherePoint(Cplx numerator, Cplx denominator);

    static SpherePoint fromAffine(Cplx w) { return SpherePoint(w, Cplx(1.0)); }
    static SpherePoint infinity() { return SpherePoint(Cplx(1.0), Cplx(0.0)); }

    bool isInfinity(double tol = kDefaultTol) const { return std::abs(z1) <= tol; }

    // Affine value z0/z1; infinite for points near (1:0).
    Cplx affine() const { return z0 / z1; }

    // |z0 w1 - z1 w0|: zero iff projectively equal; bounded by the
    // max-modulus normalization, so directly comparable against tolerances.
    double projDistTo(const SpherePoint& other) const {
        return std::abs(z0 * other.z1 - z1 * other.z0);
    }
};

class MoebiusElement {
public:
    Cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    MoebiusElement() = default;

    // Normalizes the determinant to 1 (principal square root); rejects
    // non-finite entries and |det| ~ 0.
    MoebiusElement(Cplx a_, Cplx b_, Cplx c_, Cplx d_);

    static MoebiusElement identity() { return MoebiusElement(); }
    static MoebiusElement diagonal(Cplx lambda);              // diag(lambda, 1/lambda)
    static MoebiusElement parabolicTranslation(Cplx t);       // [[1,t],[0,1]]

    Cplx trace() const { return a + d; }
    Cplx det() const { return a * d - b * c; }

    MoebiusElement inverse() const;
    MoebiusElement negated() const;

    // Convenience for finite inputs away from the pole; use apply() for
    // projective safety.
    Cplx applyAffine(Cplx w) const { return (a * w + b) / (c * w + d); }
    SpherePoint apply(const SpherePoint& p) const;

    double maxEntryAbs() const;
    double distTo(const MoebiusElement& m) const;      // max entry distance in SL2
    double pslDistTo(const MoebiusElement& m) const;   // min over the two lifts
    bool isIdentityUpToSign(double tol = kDefaultTol) const;
};

MoebiusElement compose(const MoebiusElement& m1, const MoebiusElement& m2);

inline MoebiusElement operator*(const MoebiusElement& m1, const MoebiusElement& m2) {
    return compose(m1, m2);
}

enum class ElementKind { Trivial, Parabolic, NonParabolic };

// Conjugacy class of a PSL2(C) element. For NonParabolic the multiplier is
// e^{2 pi i alpha}; alpha is stored as the canonical representative with
// 0 <= Re alpha < 1, lexicographically minimal in (Re, Im) among the
// mod-Z and sign-swap equivalents. For Parabolic the normal form is
// w -> w + translationLength (all nonzero lengths are conjugate).
struct MonodromyClass {
    ElementKind kind = ElementKind::Trivial;
    Cplx alpha{0.0};
    Cplx translationLength{0.0};

    static MonodromyClass trivial() { return MonodromyClass{}; }
    static MonodromyClass parabolic(Cplx t) {
        return MonodromyClass{ElementKind::Parabolic, Cplx(0.0), t};
    }
    static MonodromyClass nonParabolic(Cplx alpha) {
        return MonodromyClass{ElementKind::NonParabolic, alpha, Cplx(0.0)};
    }
};

// Canonical representative of {+-alpha + Z}: real part in [0,1), ties in
// Re broken by the smaller imaginary part.
Cplx normalizeAlphaRepresentative(Cplx raw);

// Trivial iff m = +-Id within tol; Parabolic iff trace^2 = 4 within tol and
// not trivial; otherwise NonParabolic with alpha = log(lambda^2)/(2 pi i).
// Throws IllConditioned when the parabolic trace test passes but the element
// has no stable single eigendirection (caller should tighten tol).
MonodromyClass classify(const MoebiusElement& m, double tol = kDefaultTol);

struct NormalForm {
    MoebiusElement conjugator; // C with C m C^-1 in normal form
    MonodromyClass cls;
};

// C m C^-1 is diagonal (non-parabolic, multiplier at the fixed point 0 equal
// to e^{2 pi i alpha} with the canonical alpha) or upper-triangular unipotent
// up to sign (parabolic). Throws TrivialElement for +-Id.
NormalForm normalFormConjugator(const MoebiusElement& m, double tol = kDefaultTol);

// Eigenvector directions on CP^1; length 1 iff parabolic. Finite points are
// sorted by (Re, Im) of the affine value, infinity last. Throws
// TrivialElement for +-Id.
std::vector<SpherePoint> fixedPoints(const MoebiusElement& m, double tol = kDefaultTol);

} // namespace fuchskit
