#include "fuchskit/invariants.hpp"

namespace fuchskit {

int selfIntersection(int tang, int chi, int k0) {
    if (tang < 0) fail(ErrorKind::InvalidInput, "selfIntersection: tangency must be >= 0");
    if (k0 < 0) fail(ErrorKind::InvalidInput, "selfIntersection: k0 must be >= 0");
    return tang + chi - k0;
}

Parity w2Parity(const SurfaceRepresentation& rep, double tol) {
    return liftSign(rep, minimalLift(rep, tol), tol) == 1 ? Parity::Even : Parity::Odd;
}

Parity branchingParity(const SurfaceRepresentation& rep, double tol) {
    Parity w2 = w2Parity(rep, tol);
    int k0 = localMonodromies(rep, tol).k0;
    return paritySum(w2, parityOfInt(k0));
}

bool theoremOddCheck(const SurfaceRepresentation& rep, double tol) {
    return theoremCase(rep, tol) != 0;
}

int theoremCase(const SurfaceRepresentation& rep, double tol) {
    Parity w2 = w2Parity(rep, tol);
    bool k0Odd = parityOfInt(localMonodromies(rep, tol).k0) == Parity::Odd;
    if (w2 == Parity::Even && k0Odd) return 1;
    if (w2 == Parity::Odd && !k0Odd) return 2;
    return 0;
}

int dLowerBound(const SurfaceRepresentation& rep, double tol) {
    return theoremOddCheck(rep, tol) ? 1 : 0;
}

bool ledgerParityCheck(const StructureLedger& ledger, const CompactificationInvariants& inv) {
    Parity expected = paritySum(inv.w2, parityOfInt(inv.k0));
    return parityOfInt(ledger.eSigma) == expected;
}

} // namespace fuchskit
