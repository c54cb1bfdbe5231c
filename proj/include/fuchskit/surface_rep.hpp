#pragma once

// Surface-group presentations of finite-type surfaces and their PSL2(C)
// representations: relation validation, SL2(C) lifting with explicit sign
// choices, and per-cusp local monodromy extraction.
//
// The relation word is [a1,b1]...[ag,bg] c1...ck with [a,b] = a b a^-1 b^-1,
// and generator images are stored in the frozen order a1..ag, b1..bg, c1..ck.

#include <string>
#include <vector>

#include "fuchskit/moebius.hpp"

namespace fuchskit {

struct SurfacePresentation {
    int genus = 0;
    int cuspCount = 0;

    int generatorCount() const { return 2 * genus + cuspCount; }
    std::string generatorLabel(int index) const;
};

struct SurfaceRepresentation {
    SurfacePresentation presentation;
    std::vector<MoebiusElement> images; // a1..ag, b1..bg, c1..ck

    SurfaceRepresentation() = default;
    SurfaceRepresentation(SurfacePresentation pres, std::vector<MoebiusElement> imgs);

    const MoebiusElement& handleA(int i) const { return images[i]; }
    const MoebiusElement& handleB(int i) const { return images[presentation.genus + i]; }
    const MoebiusElement& cusp(int j) const { return images[2 * presentation.genus + j]; }
};

// One sign per generator, same order as the images.
struct LiftChoice {
    std::vector<int> signs;

    static LiftChoice allPlus(const SurfacePresentation& pres) {
        return LiftChoice{std::vector<int>(pres.generatorCount(), 1)};
    }
    int cuspSign(const SurfacePresentation& pres, int j) const {
        return signs[2 * pres.genus + j];
    }
};

struct CuspSummary {
    std::vector<MonodromyClass> perCusp;
    int k0 = 0; // cusps with non-trivial local monodromy
};

// SL2 product of the relation word under the given signs.
MoebiusElement relationProduct(const SurfaceRepresentation& rep, const LiftChoice& choice);

// Sign s with the default-lift relation product equal to s*Id within tol;
// throws RelationViolated when the product is not +-Id (not a PSL2
// representation).
int validateRelation(const SurfaceRepresentation& rep, double tol = kDefaultTol);

// Sign of the SL2 relation product under the chosen lifts. Handle signs
// cancel inside the commutators, so the result depends on the cusp signs
// only.
int liftSign(const SurfaceRepresentation& rep, const LiftChoice& choice,
             double tol = kDefaultTol);

CuspSummary localMonodromies(const SurfaceRepresentation& rep, double tol = kDefaultTol);

// Per-cusp signs selecting the lift induced by the minimal local models:
// eigenvalues {e^{i pi alpha}, e^{-i pi alpha}} with the canonical alpha
// (non-parabolic; the two lifts tie exactly when alpha = 1/2, resolved to
// +1), trace +2 (parabolic), +1 by convention (trivial). Handle generators
// always get +1.
LiftChoice minimalLift(const SurfaceRepresentation& rep, double tol = kDefaultTol);

// Convenience predicate (plumbing): detects representations whose image
// fixes a point or a pair of points on CP^1.
bool isElementary(const SurfaceRepresentation& rep, double tol = kDefaultTol);

} // namespace fuchskit
