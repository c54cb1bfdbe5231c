#pragma once

// Parity machinery for branching orders: the self-intersection/tangency
// formula, Stiefel-Whitney parity through minimal lifts, branching-order
// parity, the odd-branching criterion and the resulting lower bound for the
// minimal branching order d(rho). Only the parity bound is computable; the
// exact d(rho) is not claimed.

#include <string>
#include <utility>
#include <vector>

#include "fuchskit/surface_rep.hpp"

namespace fuchskit {

enum class Parity { Even, Odd };

inline Parity parityOfInt(long n) { return (n % 2 + 2) % 2 == 0 ? Parity::Even : Parity::Odd; }
inline Parity paritySum(Parity p, Parity q) { return p == q ? Parity::Even : Parity::Odd; }

struct CompactificationInvariants {
    int genus = 0;
    int chi = 2; // 2 - 2g
    int k0 = 0;
    Parity w2 = Parity::Even;

    static CompactificationInvariants make(int genus, int k0, Parity w2) {
        return CompactificationInvariants{genus, 2 - 2 * genus, k0, w2};
    }
};

// Finite ledger of branching orders n_p per marked point.
struct StructureLedger {
    std::vector<std::pair<std::string, int>> perPoint;
    long eSigma = 0;

    static StructureLedger fromPoints(std::vector<std::pair<std::string, int>> points) {
        StructureLedger l;
        l.perPoint = std::move(points);
        for (const auto& [label, np] : l.perPoint) l.eSigma += np;
        return l;
    }
};

// Self-intersection of the section: tang + chi - k0.
int selfIntersection(int tang, int chi, int k0);

// Even iff the representation lifts to SL2(C) with the minimal-model cusp
// lifts, i.e. liftSign(rep, minimalLift(rep)) = +1.
Parity w2Parity(const SurfaceRepresentation& rep, double tol = kDefaultTol);

// Parity of e(sigma), determined by w2 + k0 mod 2.
Parity branchingParity(const SurfaceRepresentation& rep, double tol = kDefaultTol);

// True iff every realization carries odd total branching order:
// (w2 even and k0 odd) or (w2 odd and k0 even).
bool theoremOddCheck(const SurfaceRepresentation& rep, double tol = kDefaultTol);

// 1 or 2 for the two odd-branching cases, 0 when neither applies.
int theoremCase(const SurfaceRepresentation& rep, double tol = kDefaultTol);

// Parity-only lower bound for the minimal branching order: 1 when odd
// branching is forced, 0 otherwise.
int dLowerBound(const SurfaceRepresentation& rep, double tol = kDefaultTol);

// e(sigma) = w2 + k0 mod 2?
bool ledgerParityCheck(const StructureLedger& ledger, const CompactificationInvariants& inv);

} // namespace fuchskit
