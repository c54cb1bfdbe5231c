#pragma once

// Germs of projective charts at a point: z^alpha (Power), log z + z^{-n}
// (ParabolicLog, n = 0 meaning a plain logarithm), and branched coverings
// z^n (BranchedCover).
//
// Power exponents are stored canonically: the inversion w -> 1/w negates the
// exponent, so we keep Re > 0, breaking Re = 0 ties towards Im >= 0. The
// decomposition exponent = alpha0 + n_p with 0 < Re alpha0 <= 1 and
// n_p in Z is then well defined; n_p is the branching order of the chart.

#include "fuchskit/errors.hpp"
#include "fuchskit/numeric.hpp"

namespace fuchskit {

enum class ChartKind { Power, ParabolicLog, BranchedCover };

struct ChartModel {
    ChartKind kind = ChartKind::BranchedCover;
    Cplx exponent{1.0}; // Power only, canonical representative
    int index = 1;      // ParabolicLog: n >= 0; BranchedCover: n >= 1

    static ChartModel power(Cplx rawExponent) {
        if (!isFiniteC(rawExponent) || std::abs(rawExponent) == 0.0)
            fail(ErrorKind::InvalidInput, "ChartModel: power exponent must be finite and nonzero");
        Cplx e = rawExponent;
        if (e.real() < 0.0 || (e.real() == 0.0 && e.imag() < 0.0)) e = -e;
        return ChartModel{ChartKind::Power, e, 0};
    }

    static ChartModel parabolicLog(int n) {
        if (n < 0) fail(ErrorKind::InvalidInput, "ChartModel: parabolic index must be >= 0");
        return ChartModel{ChartKind::ParabolicLog, Cplx(0.0), n};
    }

    static ChartModel branchedCover(int n) {
        if (n < 1) fail(ErrorKind::InvalidInput, "ChartModel: cover order must be >= 1");
        return ChartModel{ChartKind::BranchedCover, Cplx(0.0), n};
    }

    // n_p of the decomposition; BranchedCover(n) is z^{1 + (n-1)}.
    int branchingOrder() const {
        switch (kind) {
        case ChartKind::Power: return static_cast<int>(snappedCeil(exponent.real())) - 1;
        case ChartKind::ParabolicLog: return index;
        case ChartKind::BranchedCover: return index - 1;
        }
        return 0;
    }

    // alpha0 with exponent = alpha0 + n_p, 0 < Re alpha0 <= 1 (Power only).
    Cplx alphaZero() const { return exponent - Cplx(static_cast<double>(branchingOrder())); }

    bool operator==(const ChartModel& o) const {
        if (kind != o.kind) return false;
        if (kind == ChartKind::Power) return exponent == o.exponent;
        return index == o.index;
    }
};

} // namespace fuchskit
