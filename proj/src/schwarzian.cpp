#include "fuchskit/schwarzian.hpp"

#include <cmath>
#include <vector>

#include "rk45.hpp"

namespace fuchskit {

namespace {

// one second-order central estimate of the Schwarzian at step h
Cplx schwarzianStencil(const AnalyticFn& f, Cplx z, double h, double* fScale) {
    Cplx fp2 = f(z + 2.0 * h), fp1 = f(z + h), fm1 = f(z - h), fm2 = f(z - 2.0 * h);
    double scale = std::max(std::max(std::abs(fp1), std::abs(fm1)),
                            std::max(std::abs(fp2), std::abs(fm2)));
    if (fScale) *fScale = std::max(*fScale, scale);
    Cplx f0 = f(z);
    Cplx d1 = (fp1 - fm1) / (2.0 * h);
    Cplx d2 = (fp1 - 2.0 * f0 + fm1) / (h * h);
    Cplx d3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
    if (std::abs(d1) < 1e-12 + 1e-8 * scale)
        fail(ErrorKind::DerivativeVanishes, "schwarzianNumeric: f'(z) vanishes");
    Cplx g = d2 / d1;
    return d3 / d1 - 1.5 * g * g;
}

} // namespace

Cplx schwarzianNumeric(const AnalyticFn& f, Cplx z, double step) {
    double h = step > 0.0 ? step : 8e-3 * (1.0 + std::abs(z));
    if (h < 64.0 * 2.2e-16 * (1.0 + std::abs(z)))
        fail(ErrorKind::StepUnderflow, "schwarzianNumeric: step below double resolution");
    double fScale = 0.0;
    Cplx s1 = schwarzianStencil(f, z, h, &fScale);
    Cplx s2 = schwarzianStencil(f, z, h / 2.0, &fScale);
    Cplx out = (4.0 * s2 - s1) / 3.0;
    if (!isFiniteC(out))
        fail(ErrorKind::DerivativeVanishes, "schwarzianNumeric: stencil produced non-finite value");
    return out;
}

Cplx localLeadingCoefficient(Cplx alpha) { return (Cplx(1.0) - alpha * alpha) / 2.0; }

QuadraticDifferential3 triangleDifferential(Cplx a0, Cplx a1, Cplx aInf) {
    return QuadraticDifferential3{a0, a1, aInf};
}

bool relationCheck(Cplx a0, Cplx a1, Cplx aInf, double tol) {
    return nearIntegerC(a0 + a1 + aInf, tol);
}

namespace {

struct PathSegment {
    // z(t) on t in [0,1] plus derivative; either a line or a circular arc
    bool isArc = false;
    Cplx from{0.0}, to{0.0};          // line
    Cplx center{0.0};                 // arc
    double radius = 0.0, angle0 = 0.0, sweep = 0.0;

    Cplx at(double t) const {
        if (!isArc) return from + t * (to - from);
        return center + std::polar(radius, angle0 + t * sweep);
    }
    Cplx derivative(double t) const {
        if (!isArc) return to - from;
        return iTimes(std::polar(radius, angle0 + t * sweep)) * sweep;
    }
    double length() const { return isArc ? radius * std::abs(sweep) : std::abs(to - from); }

    static PathSegment line(Cplx a, Cplx b) {
        PathSegment s;
        s.from = a;
        s.to = b;
        return s;
    }
    static PathSegment arc(Cplx center, double radius, double angle0, double sweep) {
        PathSegment s;
        s.isArc = true;
        s.center = center;
        s.radius = radius;
        s.angle0 = angle0;
        s.sweep = sweep;
        return s;
    }
};

std::vector<PathSegment> loopPath(Loop loop, Cplx base) {
    std::vector<PathSegment> segs;
    if (loop == Loop::AroundInf) {
        Cplx exit = 4.0 * base / std::abs(base);
        segs.push_back(PathSegment::line(base, exit));
        // negatively oriented in z = positively oriented around infinity
        segs.push_back(PathSegment::arc(Cplx(0.0), 4.0, std::arg(base), -kTwoPi));
        segs.push_back(PathSegment::line(exit, base));
        return segs;
    }
    Cplx center = loop == Loop::Around0 ? Cplx(0.0) : Cplx(1.0);
    Cplx dir = (base - center) / std::abs(base - center);
    Cplx entry = center + 0.25 * dir;
    segs.push_back(PathSegment::line(base, entry));
    segs.push_back(PathSegment::arc(center, 0.25, std::arg(dir), kTwoPi));
    segs.push_back(PathSegment::line(entry, base));
    return segs;
}

void checkPathClear(const std::vector<PathSegment>& segs) {
    for (const auto& s : segs) {
        for (int i = 0; i <= 256; ++i) {
            Cplx z = s.at(i / 256.0);
            if (std::abs(z) < 0.2 || std::abs(z - Cplx(1.0)) < 0.2)
                fail(ErrorKind::SingularOnPath,
                     "odeMonodromy: integration path passes too close to a singular point");
        }
    }
}

} // namespace

MoebiusElement odeMonodromy(const QuadraticDifferential3& qd, Loop loop, Cplx basePoint,
                            long steps) {
    if (steps < 10000)
        fail(ErrorKind::TooFewSteps, "odeMonodromy: need at least 10^4 steps");
    if (std::abs(basePoint) < 0.3 || std::abs(basePoint - Cplx(1.0)) < 0.3 ||
        std::abs(basePoint) > 3.5)
        fail(ErrorKind::SingularOnPath, "odeMonodromy: base point too close to the singular set");

    std::vector<PathSegment> segs = loopPath(loop, basePoint);
    checkPathClear(segs);

    double totalLength = 0.0;
    for (const auto& s : segs) totalLength += s.length();

    // fundamental system: columns (u, u') starting from the identity
    std::array<Cplx, 4> y{Cplx(1.0), Cplx(0.0), Cplx(0.0), Cplx(1.0)};
    for (const auto& seg : segs) {
        long n = std::max<long>(16, static_cast<long>(steps * seg.length() / totalLength));
        auto rhs = [&](double t, const std::array<Cplx, 4>& v) -> std::array<Cplx, 4> {
            Cplx z = seg.at(t);
            Cplx dz = seg.derivative(t);
            Cplx h = qd(z) / 2.0;
            return {v[1] * dz, -h * v[0] * dz, v[3] * dz, -h * v[2] * dz};
        };
        y = detail::integrateAdaptive(rhs, 0.0, 1.0, y, n);
    }

    // continuation sends the ratio u1/u2 through the transpose of the
    // fundamental matrix: w -> (u1(1) w + p1(1)) / (u2(1) w + p2(1))
    return MoebiusElement(y[0], y[1], y[2], y[3]);
}

} // namespace fuchskit
