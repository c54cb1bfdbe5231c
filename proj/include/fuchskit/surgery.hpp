#pragma once

// Cone-angle and chart bookkeeping for moving branch points, the inverse
// move at a singularity of type z^alpha with Re alpha > 1, and the
// curvature-sign trichotomy of cone metrics.
//
// The ledger tracks combinatorial angle data only; twin validity is the
// angle/twin-predicate budget, not an isotopy check. Regular points carry
// total angle 2 pi and stay implicit. Angles are exact rational multiples
// of pi so the conservation laws hold with zero error.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fuchskit/chart.hpp"
#include "fuchskit/devgeo.hpp"
#include "fuchskit/errors.hpp"

namespace fuchskit {

// Exact rational multiple of pi: value = (num/den) * pi.
struct PiRational {
    long long num = 0;
    long long den = 1;

    PiRational() = default;
    PiRational(long long n, long long d);

    static PiRational timesTwoPi(long long n) { return PiRational(2 * n, 1); }
    static PiRational zero() { return PiRational(0, 1); }

    double radians() const { return kPi * static_cast<double>(num) / static_cast<double>(den); }

    PiRational operator+(const PiRational& o) const;
    PiRational operator-(const PiRational& o) const;
    bool operator==(const PiRational& o) const { return num == o.num && den == o.den; }
    bool operator<(const PiRational& o) const;

    bool isMultipleOfTwoPi() const { return den == 1 && num % 2 == 0; }
    long long twoPiMultiple() const { return num / 2; } // valid when isMultipleOfTwoPi
};

struct MarkedPoint {
    enum class Kind { Cone, Fuchsian };

    std::string label;
    Kind kind = Kind::Cone;
    PiRational angle;         // Cone only; a branch point of order n has angle 2 pi n
    ChartModel chart;         // Fuchsian only

    static MarkedPoint cone(std::string label, PiRational angle);
    static MarkedPoint fuchsian(std::string label, ChartModel chart);
};

struct SurgeryState {
    int genus = 0;
    std::vector<MarkedPoint> points;
    PiRational defect; // cached sum of (angle - 2 pi) over cone points

    static SurgeryState make(int genus, std::vector<MarkedPoint> points);

    PiRational recomputeDefect() const;
    const MarkedPoint* find(const std::string& label) const;

    // Label-insensitive content comparison: genus, sorted cone angles and
    // sorted chart list.
    bool sameContentAs(const SurgeryState& other) const;
};

// One endpoint of a twin pair: a marked point or a regular point.
struct TwinEndpoint {
    std::optional<std::string> label; // nullopt = regular point

    static TwinEndpoint regular() { return TwinEndpoint{std::nullopt}; }
    static TwinEndpoint at(std::string l) { return TwinEndpoint{std::move(l)}; }
    bool isRegular() const { return !label.has_value(); }
};

struct TwinSpec {
    std::string source;
    TwinEndpoint end1, end2;
    PiRational angleAlpha, angleBeta; // the two angle parts at the source
};

struct MoveResult {
    SurgeryState state;
    TwinSpec returnTwins; // moving along these returns to the input state
};

// Cut along the twins and re-paste: the source p of total angle alpha+beta
// splits into p1 (angle beta) and p2 (angle alpha), and the endpoints merge
// into one point of angle theta1+theta2. The angle defect is conserved
// exactly. In strict mode all four angles must be multiples of 2 pi.
MoveResult moveBranchPoint(const SurgeryState& state, const TwinSpec& twins,
                           bool strict = true);

struct InverseMoveResult {
    SurgeryState state;
    std::string branchLabel; // the new simple branch point
};

// Inverse move at a Fuchsian point with chart Power(alpha), Re alpha > 1,
// along twins ending at two regular points: removes an angle 2 pi at the
// point (chart becomes Power(alpha - 1)) and creates a simple branch point.
InverseMoveResult inverseMoveAtFuchsian(const SurgeryState& state, const std::string& pointLabel,
                                        TwinEndpoint end1 = TwinEndpoint::regular(),
                                        TwinEndpoint end2 = TwinEndpoint::regular());

// Total branching order e(sigma) = sum of n_p over the marked points; a cone
// point of angle 2 pi n contributes n - 1, a Fuchsian chart its decomposition
// order n_p.
long eSigmaOfState(const SurgeryState& state);

enum class GeometryType { Hyperbolic, Euclidean, Spherical };

// Sign trichotomy of kappa = 2 pi chi(S) + sum(theta_i - 2 pi).
GeometryType troyanovType(int genus, const std::vector<double>& angles,
                          double tol = kDefaultTol);

} // namespace fuchskit
