#pragma once

// Geometry of local developing maps: the degree of a chart germ on the
// punctured disk, a preimage-counting oracle on the universal cover, strip
// decompositions of e^{alpha x}, twin existence, and the two-vector action
// pairs classifying z^alpha structures.

#include <array>
#include <vector>

#include "fuchskit/chart.hpp"
#include "fuchskit/errors.hpp"
#include "fuchskit/numeric.hpp"

namespace fuchskit {

struct DegreeResult {
    bool annulus = false; // Re alpha = 0: torus picture, no degree assigned
    int degree = 0;

    static DegreeResult finite(int d) { return DegreeResult{false, d}; }
    static DegreeResult annulusCase() { return DegreeResult{true, 0}; }
};

// Maximum number of preimages on a fundamental domain:
// Power(alpha) -> ceil(Re alpha) for Re alpha > 0 (annulus flag at Re = 0,
// UnsupportedExponent below); ParabolicLog(0/1) -> 1 (injective models);
// ParabolicLog(n >= 2) -> n; BranchedCover(n) -> n.
DegreeResult chartDegree(const ChartModel& chart);

// Counts integers k with x_k = (Log target + 2 pi i k)/alpha in the frozen
// fundamental strip 0 <= Im(alpha x) < 2 pi Re alpha (half-open at the top),
// scanning |k| <= kBound. The grid maximum over targets equals
// chartDegree(Power(alpha)).
int countPreimagesNumeric(Cplx alpha, Cplx target, int kBound = 1000);

// Grid maximum of the preimage count over nGrid x nGrid targets in the
// punctured disk (the oracle side of the degree computation).
int maxPreimagesOnGrid(Cplx alpha, int nGrid = 32, int kBound = 1000);

struct StripDecomposition {
    bool annulus = false;
    Cplx direction{0.0, 1.0}; // unit vector between consecutive boundary lines
    double spacing = 0.0;     // 2 pi / |alpha|  (2 pi / |b| in the annulus case)
    const char* halfPlane = ""; // descriptor of the decomposed half-plane
};

// Equidistant strip decomposition of the half-plane a u - b v < 0 for
// alpha = a + i b (the half-plane v > 0 when Re alpha = 0).
StripDecomposition stripDecomposition(Cplx alpha);

// CSV rows of the boundary-line data (line index, anchor, along-line
// direction, spacing), for external plotting.
std::vector<std::array<double, 6>> stripLineRows(Cplx alpha, int lineCount);

// Twin curves exist iff the chart is at least 2-to-1 on a fundamental
// domain: Power with Re alpha > 1, ParabolicLog(n >= 2), BranchedCover(n >= 2).
bool hasTwins(const ChartModel& chart);

// Deck-translation vector and monodromy-equivariance vector acting on the
// universal cover; (2 pi i, 2 pi i / alpha) represents the structure z^alpha.
struct ActionPair {
    Cplx deck{0.0};
    Cplx equiv{0.0};

    // alpha real <= 0 has no z^alpha structure behind it
    bool degenerate(double tol = kDefaultTol) const;
};

// Complex-linear normalization sending deck to 2 pi i; returns
// alpha = deck / equiv.
Cplx pairToAlpha(const ActionPair& pair);

struct NormalizedParabolicChart {
    ChartModel chart;
    Cplx lambda{1.0}; // rescaling z -> lambda z used by the normalization
};

// Normalizes a*log z + b*z^{-n} + c to log z + z^{-n} via post-composition
// with w -> (w - c)/a and pre-composition with z -> lambda z, lambda^n = b/a;
// b = 0 yields the plain logarithm chart.
NormalizedParabolicChart normalizeParabolicChart(Cplx a, Cplx b, int n, Cplx c);

} // namespace fuchskit
