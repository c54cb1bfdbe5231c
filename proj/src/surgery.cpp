#include "fuchskit/surgery.hpp"

#include <algorithm>
#include <cmath>

namespace fuchskit {

PiRational::PiRational(long long n, long long d) : num(n), den(d) {
    if (den == 0) fail(ErrorKind::InvalidInput, "PiRational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

PiRational PiRational::operator+(const PiRational& o) const {
    return PiRational(num * o.den + o.num * den, den * o.den);
}

PiRational PiRational::operator-(const PiRational& o) const {
    return PiRational(num * o.den - o.num * den, den * o.den);
}

bool PiRational::operator<(const PiRational& o) const {
    return num * o.den < o.num * den;
}

MarkedPoint MarkedPoint::cone(std::string label, PiRational angle) {
    if (!(PiRational::zero() < angle))
        fail(ErrorKind::InvalidInput, "MarkedPoint: cone angle must be positive");
    MarkedPoint p;
    p.label = std::move(label);
    p.kind = Kind::Cone;
    p.angle = angle;
    return p;
}

MarkedPoint MarkedPoint::fuchsian(std::string label, ChartModel chart) {
    MarkedPoint p;
    p.label = std::move(label);
    p.kind = Kind::Fuchsian;
    p.chart = chart;
    return p;
}

SurgeryState SurgeryState::make(int genus, std::vector<MarkedPoint> points) {
    SurgeryState s;
    s.genus = genus;
    s.points = std::move(points);
    for (std::size_t i = 0; i < s.points.size(); ++i)
        for (std::size_t j = i + 1; j < s.points.size(); ++j)
            if (s.points[i].label == s.points[j].label)
                fail(ErrorKind::InvalidInput,
                     "SurgeryState: duplicate label '" + s.points[i].label + "'");
    s.defect = s.recomputeDefect();
    return s;
}

PiRational SurgeryState::recomputeDefect() const {
    PiRational total = PiRational::zero();
    for (const auto& p : points)
        if (p.kind == MarkedPoint::Kind::Cone) total = total + (p.angle - PiRational(2, 1));
    return total;
}

const MarkedPoint* SurgeryState::find(const std::string& label) const {
    for (const auto& p : points)
        if (p.label == label) return &p;
    return nullptr;
}

bool SurgeryState::sameContentAs(const SurgeryState& other) const {
    if (genus != other.genus) return false;
    auto key = [](const SurgeryState& s) {
        std::vector<PiRational> cones;
        std::vector<ChartModel> charts;
        for (const auto& p : s.points) {
            if (p.kind == MarkedPoint::Kind::Cone)
                cones.push_back(p.angle);
            else
                charts.push_back(p.chart);
        }
        std::sort(cones.begin(), cones.end());
        return std::make_pair(cones, charts);
    };
    auto [ca, ka] = key(*this);
    auto [cb, kb] = key(other);
    if (!(ca == cb) || ka.size() != kb.size()) return false;
    // chart multisets are tiny; quadratic matching is fine
    std::vector<bool> used(kb.size(), false);
    for (const auto& c : ka) {
        bool found = false;
        for (std::size_t i = 0; i < kb.size(); ++i) {
            if (!used[i] && kb[i] == c) {
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

const PiRational kTwoPiAngle(2, 1);

std::string freshLabel(const SurgeryState& s, std::string base) {
    while (s.find(base)) base += "'";
    return base;
}

PiRational endpointAngle(const SurgeryState& s, const TwinEndpoint& e) {
    if (e.isRegular()) return kTwoPiAngle;
    const MarkedPoint* p = s.find(*e.label);
    if (!p) fail(ErrorKind::InvalidTwins, "twins: no marked point '" + *e.label + "'");
    if (p->kind != MarkedPoint::Kind::Cone)
        fail(ErrorKind::InvalidTwins,
             "twins: endpoint '" + *e.label + "' is not a cone point");
    return p->angle;
}

void erasePoint(SurgeryState& s, const std::string& label) {
    std::erase_if(s.points, [&](const MarkedPoint& p) { return p.label == label; });
}

// append unless the angle is exactly 2 pi (regular points stay implicit);
// returns the label actually present, or nullopt for a regular point
std::optional<std::string> appendCone(SurgeryState& s, std::string base, PiRational angle) {
    if (angle == kTwoPiAngle) return std::nullopt;
    std::string label = freshLabel(s, std::move(base));
    s.points.push_back(MarkedPoint::cone(label, angle));
    return label;
}

} // namespace

MoveResult moveBranchPoint(const SurgeryState& state, const TwinSpec& twins, bool strict) {
    const MarkedPoint* src = state.find(twins.source);
    if (!src) fail(ErrorKind::InvalidTwins, "moveBranchPoint: no source '" + twins.source + "'");
    if (src->kind != MarkedPoint::Kind::Cone)
        fail(ErrorKind::InvalidTwins,
             "moveBranchPoint: source carries a Fuchsian chart; use the inverse move");

    PiRational total = twins.angleAlpha + twins.angleBeta;
    if (!(total == src->angle))
        fail(ErrorKind::InvalidTwins,
             "moveBranchPoint: angle parts do not add up to the source angle");
    if (!(PiRational(4, 1) < src->angle) && !(src->angle == PiRational(4, 1)))
        fail(ErrorKind::InvalidTwins,
             "moveBranchPoint: source needs total angle >= 4 pi to carry twins");
    if (!(kTwoPiAngle < twins.angleAlpha) && !(twins.angleAlpha == kTwoPiAngle))
        fail(ErrorKind::InvalidTwins, "moveBranchPoint: angle part alpha below 2 pi");
    if (!(kTwoPiAngle < twins.angleBeta) && !(twins.angleBeta == kTwoPiAngle))
        fail(ErrorKind::InvalidTwins, "moveBranchPoint: angle part beta below 2 pi");

    PiRational theta1 = endpointAngle(state, twins.end1);
    PiRational theta2 = endpointAngle(state, twins.end2);

    if (strict) {
        for (const PiRational& a : {twins.angleAlpha, twins.angleBeta, theta1, theta2})
            if (!a.isMultipleOfTwoPi())
                fail(ErrorKind::NotMultipleOf2Pi,
                     "moveBranchPoint: all four angles must be multiples of 2 pi");
    }

    SurgeryState out = state;
    erasePoint(out, twins.source);
    if (!twins.end1.isRegular()) erasePoint(out, *twins.end1.label);
    if (!twins.end2.isRegular()) erasePoint(out, *twins.end2.label);

    // p splits into p1 (angle beta) and p2 (angle alpha); the endpoints merge
    auto p1 = appendCone(out, twins.source + ".1", twins.angleBeta);
    auto p2 = appendCone(out, twins.source + ".2", twins.angleAlpha);
    auto merged = appendCone(out, twins.source + ".q", theta1 + theta2);
    out.defect = out.recomputeDefect();

    if (!merged)
        fail(ErrorKind::InvalidTwins,
             "moveBranchPoint: merged endpoint would be regular (both endpoints trivial)");

    MoveResult r{std::move(out), TwinSpec{}};
    r.returnTwins.source = *merged;
    r.returnTwins.angleAlpha = theta1;
    r.returnTwins.angleBeta = theta2;
    r.returnTwins.end1 = p2 ? TwinEndpoint::at(*p2) : TwinEndpoint::regular();
    r.returnTwins.end2 = p1 ? TwinEndpoint::at(*p1) : TwinEndpoint::regular();
    return r;
}

InverseMoveResult inverseMoveAtFuchsian(const SurgeryState& state, const std::string& pointLabel,
                                        TwinEndpoint end1, TwinEndpoint end2) {
    const MarkedPoint* p = state.find(pointLabel);
    if (!p) fail(ErrorKind::InvalidInput, "inverseMoveAtFuchsian: no point '" + pointLabel + "'");
    if (p->kind != MarkedPoint::Kind::Fuchsian || p->chart.kind != ChartKind::Power)
        fail(ErrorKind::InvalidInput,
             "inverseMoveAtFuchsian: point must carry a chart of type z^alpha");
    if (!end1.isRegular() || !end2.isRegular())
        fail(ErrorKind::EndpointNotRegular,
             "inverseMoveAtFuchsian: both twin endpoints must be regular points");
    if (!hasTwins(p->chart))
        fail(ErrorKind::NoTwins,
             "inverseMoveAtFuchsian: Re alpha <= 1, the chart has no twins");

    Cplx newExponent = p->chart.exponent - Cplx(1.0);
    SurgeryState out = state;
    for (auto& q : out.points)
        if (q.label == pointLabel) q.chart = ChartModel::power(newExponent);
    std::string branch = freshLabel(out, pointLabel + ".q");
    out.points.push_back(MarkedPoint::cone(branch, PiRational(4, 1))); // simple branch point
    out.defect = out.recomputeDefect();
    return InverseMoveResult{std::move(out), branch};
}

long eSigmaOfState(const SurgeryState& state) {
    long total = 0;
    for (const auto& p : state.points) {
        if (p.kind == MarkedPoint::Kind::Cone) {
            // cone angle 2 pi e corresponds to the chart z^e
            double e = p.angle.radians() / kTwoPi;
            if (e <= 0.0)
                fail(ErrorKind::UndecomposableChart,
                     "eSigmaOfState: nonpositive cone exponent");
            total += snappedCeil(e) - 1;
        } else {
            total += p.chart.branchingOrder();
        }
    }
    return total;
}

GeometryType troyanovType(int genus, const std::vector<double>& angles, double tol) {
    for (double a : angles)
        if (!(a > 0.0)) fail(ErrorKind::InvalidInput, "troyanovType: angles must be positive");
    double chi = 2.0 - 2.0 * genus;
    double kappa = kTwoPi * chi;
    for (double a : angles) kappa += a - kTwoPi;
    if (std::abs(kappa) <= tol) return GeometryType::Euclidean;
    return kappa < 0.0 ? GeometryType::Hyperbolic : GeometryType::Spherical;
}

} // namespace fuchskit
