#include "fuchskit/devgeo.hpp"

#include <array>
#include <cmath>

namespace fuchskit {

DegreeResult chartDegree(const ChartModel& chart) {
    switch (chart.kind) {
    case ChartKind::Power: {
        double re = chart.exponent.real();
        if (re < 0.0)
            fail(ErrorKind::UnsupportedExponent,
                 "chartDegree: negative real part; reduce by the inversion w -> 1/w first");
        if (re == 0.0) return DegreeResult::annulusCase();
        return DegreeResult::finite(static_cast<int>(snappedCeil(re)));
    }
    case ChartKind::ParabolicLog:
        // log z and log z + 1/z are injective on the punctured disk
        return DegreeResult::finite(chart.index <= 1 ? 1 : chart.index);
    case ChartKind::BranchedCover:
        return DegreeResult::finite(chart.index);
    }
    fail(ErrorKind::InvalidInput, "chartDegree: unreachable");
}

int countPreimagesNumeric(Cplx alpha, Cplx target, int kBound) {
    if (std::abs(target) == 0.0)
        fail(ErrorKind::InvalidInput, "countPreimagesNumeric: target must be nonzero");
    double a = alpha.real();
    if (a == 0.0)
        fail(ErrorKind::DegenerateStrip, "countPreimagesNumeric: Re alpha = 0 (annulus case)");
    if (a < 0.0)
        fail(ErrorKind::UnsupportedExponent, "countPreimagesNumeric: Re alpha must be > 0");

    // x_k lies in the strip iff 0 <= Im(alpha x_k) < 2 pi Re alpha, and
    // alpha x_k = Log target + 2 pi i k
    double theta = std::arg(target);
    int count = 0;
    for (int k = -kBound; k <= kBound; ++k) {
        double v = theta + kTwoPi * static_cast<double>(k);
        if (v >= 0.0 && v < kTwoPi * a) ++count;
    }
    return count;
}

int maxPreimagesOnGrid(Cplx alpha, int nGrid, int kBound) {
    int best = 0;
    for (int i = 0; i < nGrid; ++i) {
        double r = 0.05 + 0.9 * (static_cast<double>(i) + 0.5) / nGrid;
        for (int j = 0; j < nGrid; ++j) {
            double phi = -kPi + kTwoPi * (static_cast<double>(j) + 0.5) / nGrid;
            best = std::max(best, countPreimagesNumeric(alpha, std::polar(r, phi), kBound));
        }
    }
    return best;
}

StripDecomposition stripDecomposition(Cplx alpha) {
    if (std::abs(alpha) == 0.0)
        fail(ErrorKind::ZeroAlpha, "stripDecomposition: alpha must be nonzero");
    double a = alpha.real(), b = alpha.imag();
    StripDecomposition out;
    if (a == 0.0) {
        // annulus case: vertical boundary lines, horizontal translation
        out.annulus = true;
        out.direction = Cplx(b > 0 ? 1.0 : -1.0, 0.0);
        out.spacing = kTwoPi / std::abs(b);
        out.halfPlane = "v > 0";
        return out;
    }
    // boundary lines b u + a v = 2 pi l; consecutive lines differ by the
    // translation 2 pi i / alpha, of length 2 pi / |alpha|
    Cplx step = Cplx(0.0, kTwoPi) / alpha;
    out.direction = step / std::abs(step);
    out.spacing = kTwoPi / std::abs(alpha);
    out.halfPlane = "a*u - b*v < 0";
    return out;
}

std::vector<std::array<double, 6>> stripLineRows(Cplx alpha, int lineCount) {
    StripDecomposition d = stripDecomposition(alpha);
    std::vector<std::array<double, 6>> rows;
    rows.reserve(lineCount);
    for (int l = 0; l < lineCount; ++l) {
        Cplx anchor, along;
        if (d.annulus) {
            anchor = Cplx(-d.spacing * l * (alpha.imag() > 0 ? 1.0 : -1.0), 0.0);
            along = Cplx(0.0, 1.0);
        } else {
            // anchor on the line Im(alpha x) = 2 pi l
            anchor = Cplx(0.0, kTwoPi * l) / alpha;
            along = std::conj(alpha) / std::abs(alpha);
        }
        rows.push_back({static_cast<double>(l), anchor.real(), anchor.imag(), along.real(),
                        along.imag(), d.spacing});
    }
    return rows;
}

bool hasTwins(const ChartModel& chart) {
    switch (chart.kind) {
    case ChartKind::Power: return chart.exponent.real() > 1.0;
    case ChartKind::ParabolicLog: return chart.index >= 2;
    case ChartKind::BranchedCover: return chart.index >= 2;
    }
    return false;
}

bool ActionPair::degenerate(double tol) const {
    if (std::abs(deck) == 0.0 || std::abs(equiv) == 0.0) return true;
    Cplx alpha = deck / equiv;
    return std::abs(alpha.imag()) <= tol && alpha.real() <= tol;
}

Cplx pairToAlpha(const ActionPair& pair) {
    if (std::abs(pair.deck) == 0.0 || std::abs(pair.equiv) == 0.0)
        fail(ErrorKind::ZeroVector, "pairToAlpha: both action vectors must be nonzero");
    return pair.deck / pair.equiv;
}

NormalizedParabolicChart normalizeParabolicChart(Cplx a, Cplx b, int n, Cplx c) {
    if (std::abs(a) == 0.0)
        fail(ErrorKind::InvalidInput, "normalizeParabolicChart: log coefficient must be nonzero");
    if (n < 1)
        fail(ErrorKind::InvalidInput, "normalizeParabolicChart: pole order must be >= 1");
    (void)c; // removed by the affine post-composition w -> (w - c)/a
    if (std::abs(b) == 0.0)
        return NormalizedParabolicChart{ChartModel::parabolicLog(0), Cplx(1.0)};
    Cplx lambda = std::pow(b / a, Cplx(1.0 / n));
    return NormalizedParabolicChart{ChartModel::parabolicLog(n), lambda};
}

} // namespace fuchskit
