#pragma once

// Schwarzian derivative numerics, the quadratic differential of the
// three-punctured sphere, the integrality check on exponent sums, and an
// ODE monodromy oracle for the associated second-order linear equation
// u'' + (S/2) u = 0 (the Schwarzian of a ratio of its solutions is S).

#include <functional>

#include "fuchskit/moebius.hpp"

namespace fuchskit {

using AnalyticFn = std::function<Cplx(Cplx)>;

// Central finite-difference estimate of (f''/f')' - (1/2)(f''/f')^2 with
// two-level Richardson extrapolation. step = 0 selects the documented rule
// h = 8e-3 * (1 + |z|), which balances the h^4 truncation residue against
// the eps/h^3 roundoff of the third-derivative stencil; f must be analytic
// on the stencil reach |w - z| <= 2h. Throws DerivativeVanishes when
// f'(z) ~ 0 and StepUnderflow when the step cannot be resolved at double
// precision.
Cplx schwarzianNumeric(const AnalyticFn& f, Cplx z, double step = 0.0);

// (1 - alpha^2)/2, the double-pole coefficient of the Schwarzian of z^alpha.
Cplx localLeadingCoefficient(Cplx alpha);

// S(z) = (1-a0^2)/(2 z^2) + (1-a1^2)/(2 (z-1)^2)
//        + (1 - a0^2 - a1^2 + aInf^2)/(2 z (1-z)),
// the unique projective structure on the three-punctured sphere with charts
// z^{a_i} at the cusps. The mixed term carries the classical sign: expanding
// S(1/u)/u^4 at u = 0 gives the double-pole coefficient (1-aInf^2)/2, so the
// exponent at infinity comes out right (the opposite sign would put
// 2*a0^2 + 2*a1^2 - aInf^2 - 2 under the square root instead).
struct QuadraticDifferential3 {
    Cplx alpha0, alpha1, alphaInf;

    Cplx coeff0() const { return (Cplx(1.0) - alpha0 * alpha0) / 2.0; }
    Cplx coeff1() const { return (Cplx(1.0) - alpha1 * alpha1) / 2.0; }
    Cplx coeffMixed() const {
        return (Cplx(1.0) - alpha0 * alpha0 - alpha1 * alpha1 + alphaInf * alphaInf) / 2.0;
    }

    Cplx operator()(Cplx z) const {
        return coeff0() / (z * z) + coeff1() / ((z - 1.0) * (z - 1.0)) +
               coeffMixed() / (z * (Cplx(1.0) - z));
    }
};

QuadraticDifferential3 triangleDifferential(Cplx a0, Cplx a1, Cplx aInf);

// Literal integrality test a0 + a1 + aInf in Z (within tol). The PSL2
// relation of actual monodromies can disagree with this reading for
// non-commuting local monodromies; cmdSchwarzian reports both.
bool relationCheck(Cplx a0, Cplx a1, Cplx aInf, double tol = kDefaultTol);

enum class Loop { Around0, Around1, AroundInf };

// Monodromy of u'' + (S/2) u = 0 along the frozen loop geometry: circles of
// radius 1/4 around 0 and 1, |z| = 4 around infinity, tethered radially to
// the common base point. Non-integer alpha_i give |trace| = |2 cos(pi a_i)|,
// and with the default base point the loops compose as
// around0 * around1 * aroundInf = +-Id.
MoebiusElement odeMonodromy(const QuadraticDifferential3& qd, Loop loop,
                            Cplx basePoint = Cplx(0.0, 2.0), long steps = 100000);

} // namespace fuchskit
