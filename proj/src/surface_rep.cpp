#include "fuchskit/surface_rep.hpp"

#include <cmath>

namespace fuchskit {

std::string SurfacePresentation::generatorLabel(int index) const {
    if (index < genus) return "a" + std::to_string(index + 1);
    if (index < 2 * genus) return "b" + std::to_string(index - genus + 1);
    return "c" + std::to_string(index - 2 * genus + 1);
}

SurfaceRepresentation::SurfaceRepresentation(SurfacePresentation pres,
                                             std::vector<MoebiusElement> imgs)
    : presentation(pres), images(std::move(imgs)) {
    if (presentation.genus < 0 || presentation.cuspCount < 0)
        fail(ErrorKind::InvalidInput, "SurfaceRepresentation: negative genus or cusp count");
    if (static_cast<int>(images.size()) != presentation.generatorCount())
        fail(ErrorKind::InvalidInput,
             "SurfaceRepresentation: expected " + std::to_string(presentation.generatorCount()) +
                 " generator images, got " + std::to_string(images.size()));
}

MoebiusElement relationProduct(const SurfaceRepresentation& rep, const LiftChoice& choice) {
    const auto& pres = rep.presentation;
    if (static_cast<int>(choice.signs.size()) != pres.generatorCount())
        fail(ErrorKind::InvalidInput, "LiftChoice: sign count does not match presentation");

    auto signed_ = [&](int idx) {
        return choice.signs[idx] >= 0 ? rep.images[idx] : rep.images[idx].negated();
    };

    MoebiusElement prod = MoebiusElement::identity();
    for (int i = 0; i < pres.genus; ++i) {
        MoebiusElement A = signed_(i);
        MoebiusElement B = signed_(pres.genus + i);
        prod = prod * A * B * A.inverse() * B.inverse();
    }
    for (int j = 0; j < pres.cuspCount; ++j)
        prod = prod * signed_(2 * pres.genus + j);
    return prod;
}

int validateRelation(const SurfaceRepresentation& rep, double tol) {
    return liftSign(rep, LiftChoice::allPlus(rep.presentation), tol);
}

int liftSign(const SurfaceRepresentation& rep, const LiftChoice& choice, double tol) {
    MoebiusElement prod = relationProduct(rep, choice);
    MoebiusElement id = MoebiusElement::identity();
    double dPlus = prod.distTo(id);
    double dMinus = prod.distTo(id.negated());
    // products of a few unit-determinant matrices keep roundoff well below
    // any sensible tol; scale it with the word length anyway
    double slack = tol * (1.0 + rep.presentation.generatorCount());
    if (std::min(dPlus, dMinus) > slack)
        fail(ErrorKind::RelationViolated,
             "relation product is not +-Id: not a PSL2(C) representation");
    return dPlus <= dMinus ? 1 : -1;
}

CuspSummary localMonodromies(const SurfaceRepresentation& rep, double tol) {
    CuspSummary out;
    out.perCusp.reserve(rep.presentation.cuspCount);
    for (int j = 0; j < rep.presentation.cuspCount; ++j) {
        MonodromyClass cls = classify(rep.cusp(j), tol);
        if (cls.kind != ElementKind::Trivial) ++out.k0;
        out.perCusp.push_back(cls);
    }
    return out;
}

LiftChoice minimalLift(const SurfaceRepresentation& rep, double tol) {
    const auto& pres = rep.presentation;
    LiftChoice choice = LiftChoice::allPlus(pres);
    for (int j = 0; j < pres.cuspCount; ++j) {
        const MoebiusElement& cj = rep.cusp(j);
        MonodromyClass cls = classify(cj, tol);
        int& sign = choice.signs[2 * pres.genus + j];
        switch (cls.kind) {
        case ElementKind::Trivial:
            sign = 1; // both lifts realize the minimal model; fixed by convention
            break;
        case ElementKind::Parabolic:
            sign = cj.trace().real() >= 0.0 ? 1 : -1; // trace +2
            break;
        case ElementKind::NonParabolic: {
            // trace of the minimal lift is 2 cos(pi alpha); at alpha = 1/2
            // both lifts have trace 0 and we keep the stored one
            Cplx target = 2.0 * std::cos(kPi * cls.alpha);
            Cplx tr = cj.trace();
            double dPlus = std::abs(tr - target);
            double dMinus = std::abs(-tr - target);
            sign = dPlus <= dMinus ? 1 : -1;
            break;
        }
        }
    }
    return choice;
}

bool isElementary(const SurfaceRepresentation& rep, double tol) {
    std::vector<const MoebiusElement*> nonTrivial;
    for (const auto& m : rep.images)
        if (!m.isIdentityUpToSign(tol)) nonTrivial.push_back(&m);
    if (nonTrivial.empty()) return true; // trivial representation

    // candidate invariant sets: fixed points of the first non-trivial image
    std::vector<SpherePoint> candidates = fixedPoints(*nonTrivial.front(), tol);

    // common fixed point on the sphere?
    for (const auto& p : candidates) {
        bool commonlyFixed = true;
        for (const auto* m : nonTrivial)
            if (m->apply(p).projDistTo(p) > 1e3 * tol) { commonlyFixed = false; break; }
        if (commonlyFixed) return true;
    }

    // invariant pair {p, q} (each generator fixes or swaps)?
    if (candidates.size() == 2) {
        bool invariantPair = true;
        for (const auto* m : nonTrivial) {
            SpherePoint ip = m->apply(candidates[0]);
            SpherePoint iq = m->apply(candidates[1]);
            bool keeps = ip.projDistTo(candidates[0]) <= 1e3 * tol &&
                         iq.projDistTo(candidates[1]) <= 1e3 * tol;
            bool swaps = ip.projDistTo(candidates[1]) <= 1e3 * tol &&
                         iq.projDistTo(candidates[0]) <= 1e3 * tol;
            if (!keeps && !swaps) { invariantPair = false; break; }
        }
        if (invariantPair) return true;
    }
    return false;
}

} // namespace fuchskit
