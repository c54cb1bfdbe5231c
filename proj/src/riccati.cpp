#include "fuchskit/riccati.hpp"

#include <cmath>
#include <sstream>

#include "rk45.hpp"

namespace fuchskit {

LocalModel LocalModel::nonParabolic(Cplx alpha) {
    if (!isFiniteC(alpha))
        fail(ErrorKind::InvalidInput, "LocalModel: non-finite alpha");
    if (nearIntegerC(alpha, 1e-12))
        fail(ErrorKind::InvalidInput,
             "LocalModel: integer alpha belongs to the trivial-power family");
    return LocalModel{ModelKind::NonParabolic, alpha, 0};
}

LocalModel LocalModel::parabolic(int familyIndex) {
    if (familyIndex < 0)
        fail(ErrorKind::InvalidInput, "LocalModel: parabolic family index must be >= 0");
    return LocalModel{ModelKind::Parabolic, Cplx(0.0), familyIndex};
}

LocalModel LocalModel::trivialPower(int m) {
    if (m < 0) fail(ErrorKind::InvalidInput, "LocalModel: trivial power must be >= 0");
    return LocalModel{ModelKind::TrivialPower, Cplx(0.0), m};
}

namespace {

std::string cplxToString(Cplx z) {
    std::ostringstream os;
    if (z.imag() == 0.0) {
        os << z.real();
    } else {
        os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
    }
    return os.str();
}

} // namespace

std::string LocalModel::oneForm() const {
    switch (kind) {
    case ModelKind::NonParabolic:
        return cplxToString(alpha) + "*w dz - z dw";
    case ModelKind::Parabolic:
        if (index == 0) return "dz - z dw";
        return "(" + std::to_string(index) + "*w + z^" + std::to_string(index) + ") dz - z dw";
    case ModelKind::TrivialPower:
        if (index == 0) return "dw";
        return std::to_string(index) + "*w dz - z dw";
    }
    return {};
}

std::string LocalModel::firstIntegral() const {
    switch (kind) {
    case ModelKind::NonParabolic:
        return "z^" + cplxToString(alpha) + " / w";
    case ModelKind::Parabolic:
        if (index == 0) return "log z - w";
        return "log z - w (index " + std::to_string(index) + " family)";
    case ModelKind::TrivialPower:
        if (index == 0) return "w";
        return "z^" + std::to_string(index) + " / w";
    }
    return {};
}

LocalModel minimalModel(const MonodromyClass& cls) {
    switch (cls.kind) {
    case ElementKind::NonParabolic:
        return LocalModel::nonParabolic(normalizeAlphaRepresentative(cls.alpha));
    case ElementKind::Parabolic:
        return LocalModel::parabolic(0);
    case ElementKind::Trivial:
        return LocalModel::trivialPower(0);
    }
    return LocalModel::trivialPower(0);
}

int invariantFiberCount(const std::vector<LocalModel>& models) {
    int n = 0;
    for (const auto& m : models)
        if (m.hasInvariantFiber()) ++n;
    return n;
}

SectionGerm SectionGerm::zero(int order, PowerSeries unit) {
    if (order < 1) fail(ErrorKind::InvalidInput, "SectionGerm: zero order must be >= 1");
    if (std::abs(unit.valueAtZero()) == 0.0)
        fail(ErrorKind::InvalidInput, "SectionGerm: unit must not vanish at 0");
    return SectionGerm{SectionValue::Zero, order, std::move(unit)};
}

SectionGerm SectionGerm::finite(PowerSeries unit) {
    if (std::abs(unit.valueAtZero()) == 0.0)
        fail(ErrorKind::InvalidInput, "SectionGerm: unit must not vanish at 0");
    return SectionGerm{SectionValue::Finite, 0, std::move(unit)};
}

SectionGerm SectionGerm::pole(int order, PowerSeries unit) {
    if (order < 1) fail(ErrorKind::InvalidInput, "SectionGerm: pole order must be >= 1");
    if (std::abs(unit.valueAtZero()) == 0.0)
        fail(ErrorKind::InvalidInput, "SectionGerm: unit must not vanish at 0");
    return SectionGerm{SectionValue::Infinity, order, std::move(unit)};
}

namespace {

bool sectionOnSingularPoint(const LocalModel& model, const SectionGerm& section) {
    switch (model.kind) {
    case ModelKind::NonParabolic:
        return section.valueAtZero != SectionValue::Finite;
    case ModelKind::TrivialPower:
        return model.index >= 1 && section.valueAtZero != SectionValue::Finite;
    case ModelKind::Parabolic:
        // the only singular point is the saddle-node at (0, infinity)
        return section.valueAtZero == SectionValue::Infinity;
    }
    return false;
}

// order of the series c_j = (factor - j) * phi_j, exact zero test
int orderWithShiftedFactor(const PowerSeries& phi, Cplx factor) {
    for (int j = 0; j < phi.length(); ++j) {
        Cplx cj = (factor - Cplx(static_cast<double>(j))) * phi.coeff(j);
        if (std::abs(cj) != 0.0) return j;
    }
    return -1;
}

int deviationOrder(const PowerSeries& phi) {
    for (int j = 1; j < phi.length(); ++j)
        if (std::abs(phi.coeff(j)) != 0.0) return j;
    return -1;
}

} // namespace

int computeTangency(const LocalModel& model, const SectionGerm& section) {
    const PowerSeries& phi = section.unit;
    switch (model.kind) {
    case ModelKind::NonParabolic: {
        Cplx alpha = model.alpha;
        switch (section.valueAtZero) {
        case SectionValue::Zero:
            return section.order + orderWithShiftedFactor(phi, alpha - Cplx(double(section.order)));
        case SectionValue::Finite:
            return orderWithShiftedFactor(phi, alpha);
        case SectionValue::Infinity:
            return section.order +
                   orderWithShiftedFactor(phi.reciprocal(), -alpha - Cplx(double(section.order)));
        }
        break;
    }
    case ModelKind::Parabolic:
        return section.valueAtZero == SectionValue::Infinity ? section.order : 0;
    case ModelKind::TrivialPower: {
        int m = model.index;
        if (m == 0) {
            // product foliation dw = 0: tangency is the vanishing order of
            // the derivative of the (possibly inverted) section value
            const PowerSeries u =
                section.valueAtZero == SectionValue::Infinity ? phi.reciprocal() : phi;
            if (section.valueAtZero == SectionValue::Finite) {
                int q = deviationOrder(u);
                if (q < 0)
                    fail(ErrorKind::InvariantSection,
                         "computeTangency: constant section is a leaf of dw = 0");
                return q - 1;
            }
            return section.order - 1;
        }
        Cplx mc(static_cast<double>(m));
        switch (section.valueAtZero) {
        case SectionValue::Zero: {
            int ord = orderWithShiftedFactor(phi, mc - Cplx(double(section.order)));
            if (ord < 0)
                fail(ErrorKind::InvariantSection,
                     "computeTangency: section c*z^m is a leaf of the trivial model");
            return section.order + ord;
        }
        case SectionValue::Finite:
            return orderWithShiftedFactor(phi, mc);
        case SectionValue::Infinity:
            return section.order +
                   orderWithShiftedFactor(phi.reciprocal(), -mc - Cplx(double(section.order)));
        }
        break;
    }
    }
    fail(ErrorKind::InvalidInput, "computeTangency: unreachable");
}

ModelWithSection makeState(const LocalModel& model, const SectionGerm& section) {
    return ModelWithSection{model, section, computeTangency(model, section)};
}

namespace {

SectionGerm divideByZ(const SectionGerm& s) {
    switch (s.valueAtZero) {
    case SectionValue::Zero:
        return s.order == 1 ? SectionGerm::finite(s.unit) : SectionGerm::zero(s.order - 1, s.unit);
    case SectionValue::Finite:
        return SectionGerm::pole(1, s.unit);
    case SectionValue::Infinity:
        return SectionGerm::pole(s.order + 1, s.unit);
    }
    fail(ErrorKind::InvalidInput, "divideByZ: unreachable");
}

SectionGerm multiplyByZ(const SectionGerm& s) {
    switch (s.valueAtZero) {
    case SectionValue::Zero:
        return SectionGerm::zero(s.order + 1, s.unit);
    case SectionValue::Finite:
        return SectionGerm::zero(1, s.unit);
    case SectionValue::Infinity:
        return s.order == 1 ? SectionGerm::finite(s.unit) : SectionGerm::pole(s.order - 1, s.unit);
    }
    fail(ErrorKind::InvalidInput, "multiplyByZ: unreachable");
}

} // namespace

ModelWithSection flip(const ModelWithSection& state, FlipCenter center) {
    const LocalModel& model = state.model;
    const SectionGerm& section = state.section;
    if (!model.hasInvariantFiber())
        fail(ErrorKind::NotInvariantFiber, "flip: the fiber over 0 is not invariant (dw = 0)");

    bool onSingular = sectionOnSingularPoint(model, section);
    if (center == FlipCenter::OnSection && !onSingular)
        fail(ErrorKind::CenterNotOnSection,
             "flip: the section does not pass through a singular point of the foliation");

    LocalModel newModel = model;
    SectionGerm newSection = section;

    if (model.kind == ModelKind::Parabolic) {
        if (center == FlipCenter::OnSection) {
            // blow up at the saddle-node the section passes through
            newModel.index += 1;
            newSection = multiplyByZ(section);
        } else {
            if (model.index < 1)
                fail(ErrorKind::CenterNotOnSection,
                     "flip: the minimal parabolic model has a single singular point, "
                     "which lies on the section");
            if (section.valueAtZero == SectionValue::Zero)
                fail(ErrorKind::CenterNotOnSection,
                     "flip: unsupported off-section flip for a parabolic section "
                     "vanishing on the fiber");
            newModel.index -= 1;
            newSection = divideByZ(section);
        }
        return makeState(newModel, newSection);
    }

    // non-parabolic and trivial-power models behave identically with
    // alpha-like parameter alpha (resp. m)
    auto shiftAlpha = [&](int delta) {
        if (model.kind == ModelKind::NonParabolic)
            newModel.alpha += Cplx(static_cast<double>(delta));
        else
            newModel.index += delta;
    };

    if (center == FlipCenter::OnSection) {
        if (section.valueAtZero == SectionValue::Zero) {
            shiftAlpha(-1); // blow-up at (0, 0)
            newSection = divideByZ(section);
        } else {
            shiftAlpha(+1); // blow-up at (0, infinity)
            newSection = multiplyByZ(section);
        }
    } else {
        switch (section.valueAtZero) {
        case SectionValue::Zero:
            shiftAlpha(+1); // center (0, infinity)
            newSection = multiplyByZ(section);
            break;
        case SectionValue::Infinity:
            shiftAlpha(-1); // center (0, 0)
            newSection = divideByZ(section);
            break;
        case SectionValue::Finite:
            shiftAlpha(-1); // frozen convention: center (0, 0)
            newSection = divideByZ(section);
            break;
        }
    }
    return makeState(newModel, newSection);
}

ChartModel chartFromSection(const ModelWithSection& state) {
    const LocalModel& model = state.model;
    const SectionGerm& s = state.section;
    switch (model.kind) {
    case ModelKind::NonParabolic:
        switch (s.valueAtZero) {
        case SectionValue::Zero:
            return ChartModel::power(Cplx(double(s.order)) - model.alpha);
        case SectionValue::Infinity:
            return ChartModel::power(Cplx(double(s.order)) + model.alpha);
        case SectionValue::Finite:
            return ChartModel::power(model.alpha);
        }
        break;
    case ModelKind::Parabolic:
        return ChartModel::parabolicLog(
            model.index + (s.valueAtZero == SectionValue::Infinity ? s.order : 0));
    case ModelKind::TrivialPower: {
        int m = model.index;
        switch (s.valueAtZero) {
        case SectionValue::Zero:
            if (s.order > m) return ChartModel::branchedCover(s.order - m);
            if (s.order == m && s.unit.isConstant())
                fail(ErrorKind::InvariantSection,
                     "chartFromSection: the section is a leaf; no chart is defined");
            fail(ErrorKind::NonPositiveCoverOrder,
                 "chartFromSection: zero order <= trivial power; flip first");
        case SectionValue::Finite: {
            if (m >= 1) return ChartModel::branchedCover(m);
            int q = deviationOrder(s.unit);
            if (q < 0)
                fail(ErrorKind::InvariantSection,
                     "chartFromSection: constant section is a leaf of dw = 0");
            return ChartModel::branchedCover(q);
        }
        case SectionValue::Infinity:
            return ChartModel::branchedCover(s.order + m);
        }
        break;
    }
    }
    fail(ErrorKind::InvalidInput, "chartFromSection: unreachable");
}

ChartModel regularChart(const SectionGerm& section) {
    if (section.valueAtZero == SectionValue::Infinity)
        fail(ErrorKind::InvalidInput, "regularChart: section must be holomorphic");
    if (section.valueAtZero == SectionValue::Zero)
        return ChartModel::branchedCover(section.order);
    int q = deviationOrder(section.unit);
    if (q < 0)
        fail(ErrorKind::InvariantSection, "regularChart: constant section has no chart");
    return ChartModel::branchedCover(q);
}

TransversalityResult flipToTransversal(const ModelWithSection& state) {
    TransversalityResult out{0, 0, state};
    while (out.finalState.tangencyOrder > 0 && out.finalState.model.hasInvariantFiber() &&
           sectionOnSingularPoint(out.finalState.model, out.finalState.section)) {
        out.finalState = flip(out.finalState, FlipCenter::OnSection);
        ++out.onSectionFlips;
    }
    out.residualTangency = out.finalState.tangencyOrder;
    return out;
}

namespace {

// dw/dz = A(z) + B(z) w for the three model families
struct ModelOde {
    const LocalModel& model;

    Cplx a(Cplx z) const {
        if (model.kind == ModelKind::Parabolic)
            return std::pow(z, model.index) / z; // z^n / z
        return Cplx(0.0);
    }
    Cplx b(Cplx z) const {
        switch (model.kind) {
        case ModelKind::NonParabolic: return model.alpha / z;
        case ModelKind::Parabolic: return Cplx(double(model.index)) / z;
        case ModelKind::TrivialPower: return Cplx(double(model.index)) / z;
        }
        return Cplx(0.0);
    }
};

struct Tracker {
    Cplx value;
    bool inverted; // value = 1/w when set

    SpherePoint point() const {
        return inverted ? SpherePoint(Cplx(1.0), value) : SpherePoint(value, Cplx(1.0));
    }
};

} // namespace

MoebiusElement holonomyNumeric(const LocalModel& model, double radius, long steps,
                               Cplx basePoint) {
    if (steps < 1000)
        fail(ErrorKind::TooFewSteps, "holonomyNumeric: need at least 10^3 steps");
    if (!(radius > 0.0 && radius < 1.0))
        fail(ErrorKind::InvalidInput, "holonomyNumeric: radius must be in (0, 1)");
    if (std::abs(basePoint) == 0.0)
        fail(ErrorKind::InvalidInput, "holonomyNumeric: base point must be nonzero");

    const double phase0 = std::arg(basePoint);
    ModelOde ode{model};
    auto zAt = [&](double theta) { return std::polar(radius, phase0 + theta); };

    std::array<Tracker, 3> trackers{Tracker{Cplx(0.0), false}, Tracker{Cplx(1.0), false},
                                    Tracker{Cplx(0.0), true}};

    const long chunks = 64; // patch-switch checkpoints
    const long stepsPerChunk = std::max<long>(1, steps / chunks);
    for (auto& tr : trackers) {
        double theta = 0.0;
        const double dTheta = kTwoPi / static_cast<double>(chunks);
        for (long c = 0; c < chunks; ++c) {
            bool inv = tr.inverted;
            auto rhs = [&](double t, const std::array<Cplx, 1>& y) -> std::array<Cplx, 1> {
                Cplx z = zAt(t);
                Cplx dz = iTimes(z); // d z / d theta
                if (!inv) return {(ode.a(z) + ode.b(z) * y[0]) * dz};
                // v = 1/w: dv = -(B v + A v^2) dz
                return {-(ode.b(z) * y[0] + ode.a(z) * y[0] * y[0]) * dz};
            };
            std::array<Cplx, 1> y{tr.value};
            y = detail::integrateAdaptive(rhs, theta, theta + dTheta, y, stepsPerChunk);
            tr.value = y[0];
            theta += dTheta;
            if (std::abs(tr.value) > 2.0) { // move to the other coordinate patch
                tr.value = Cplx(1.0) / tr.value;
                tr.inverted = !tr.inverted;
            }
        }
    }

    // Moebius map with 0 -> P0, 1 -> P1, infinity -> Pinf: scale the columns
    // (Vinf | V0) so their sum is V1.
    SpherePoint p0 = trackers[0].point();
    SpherePoint p1 = trackers[1].point();
    SpherePoint pInf = trackers[2].point();
    Cplx det = pInf.z0 * p0.z1 - pInf.z1 * p0.z0;
    if (std::abs(det) < 1e-14)
        fail(ErrorKind::IntegrationDivergence,
             "holonomyNumeric: tracked images collapsed; cannot reconstruct the map");
    Cplx s1 = (p1.z0 * p0.z1 - p1.z1 * p0.z0) / det;
    Cplx s2 = (pInf.z0 * p1.z1 - pInf.z1 * p1.z0) / det;
    return MoebiusElement(s1 * pInf.z0, s2 * p0.z0, s1 * pInf.z1, s2 * p0.z1);
}

} // namespace fuchskit
