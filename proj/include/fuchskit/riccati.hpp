#pragma once

// Riccati local models at a cusp, the flip (elementary transformation)
// calculus on section germs, projective-chart extraction, and a numerical
// holonomy oracle for the model ODEs.
//
// Local models over the invariant fiber {z = 0}:
//   non-parabolic   alpha w dz - z dw = 0      first integral z^alpha w^-1
//   parabolic       dz - z dw = 0 (index 0),   first integral log z - w
//                   family (n w + z^n) dz - z dw after n flips
//   trivial         m w dz - z dw = 0, m >= 1; first integral z^m w^-1
//                   m = 0 means dw = 0 (product foliation, no invariant fiber)
//
// Flip conventions (one blow-up at a singular point of the fiber, then the
// fiber contraction): blowing up at (0,0) sends alpha -> alpha - 1 and the
// section (z, s) to (z, s/z); blowing up at (0,infinity) sends
// alpha -> alpha + 1 and (z, s) to (z, z s). For a transversal (finite)
// section, OffSection blows up at (0,0).

#include <string>

#include "fuchskit/chart.hpp"
#include "fuchskit/moebius.hpp"
#include "fuchskit/series.hpp"

namespace fuchskit {

enum class ModelKind { NonParabolic, Parabolic, TrivialPower };

struct LocalModel {
    ModelKind kind = ModelKind::TrivialPower;
    Cplx alpha{0.0}; // NonParabolic only
    int index = 0;   // Parabolic: family index n >= 0; TrivialPower: power m >= 0

    static LocalModel nonParabolic(Cplx alpha);
    static LocalModel parabolic(int familyIndex = 0);
    static LocalModel trivialPower(int m);

    bool hasInvariantFiber() const {
        return !(kind == ModelKind::TrivialPower && index == 0);
    }

    std::string oneForm() const;
    std::string firstIntegral() const;
};

// Minimal local model of a monodromy class: canonical alpha with
// 0 <= Re alpha < 1 (non-parabolic), dz - z dw (parabolic), dw = 0 (trivial).
LocalModel minimalModel(const MonodromyClass& cls);

// Count of models carrying an invariant fiber; with minimal models this is
// k0 (trivial cusps compactify by dw = 0 and are not counted).
int invariantFiberCount(const std::vector<LocalModel>& models);

// Germ of a holomorphic section z -> (z, s(z)) near the fiber over 0:
//   Zero:     s = z^order * phi,   order >= 1
//   Finite:   s = phi,             phi(0) != 0
//   Infinity: s = z^-order * phi,  order >= 1 (pole order)
// with unit phi, phi(0) != 0.
enum class SectionValue { Zero, Finite, Infinity };

struct SectionGerm {
    SectionValue valueAtZero = SectionValue::Finite;
    int order = 0;
    PowerSeries unit = PowerSeries::one();

    static SectionGerm zero(int order, PowerSeries unit);
    static SectionGerm finite(PowerSeries unit);
    static SectionGerm pole(int order, PowerSeries unit);

    Cplx unitValue() const { return unit.valueAtZero(); }
};

struct ModelWithSection {
    LocalModel model;
    SectionGerm section;
    int tangencyOrder = 0;
};

// Vanishing order of the model 1-form restricted to the section graph,
// computed on the truncated jets.
int computeTangency(const LocalModel& model, const SectionGerm& section);

ModelWithSection makeState(const LocalModel& model, const SectionGerm& section);

enum class FlipCenter { OnSection, OffSection };

// One elementary transformation of the invariant fiber. OnSection requires
// the section to pass through a singular point of the foliation and lowers
// the tangency order by one; OffSection raises it by one. The extracted
// chart is unchanged.
ModelWithSection flip(const ModelWithSection& state, FlipCenter center);

// Chart germ obtained by projecting the section along the leaves into a
// nearby fiber:
//   non-parabolic: Power(n - alpha) (zero of order n), Power(n + alpha)
//                  (pole of order n), Power(alpha) (off the singular points,
//                  recorded after the inversion);
//   parabolic:     ParabolicLog(pole order + family index);
//   trivial m:     BranchedCover(n - m) for a zero of order n > m.
// Throws InvariantSection when the section is a leaf and
// NonPositiveCoverOrder in the trivial case n <= m (flip first).
ChartModel chartFromSection(const ModelWithSection& state);

// Chart at a regular point of the horizontal foliation: BranchedCover(n)
// with n - 1 the tangency order; BranchedCover(1) is an unbranched chart.
ChartModel regularChart(const SectionGerm& section);

struct TransversalityResult {
    int onSectionFlips = 0;    // flips applied
    int residualTangency = 0;  // 0 except for trivial-monodromy branch points
    ModelWithSection finalState;
};

// Repeated OnSection flips until the section misses the singular points.
TransversalityResult flipToTransversal(const ModelWithSection& state);

// Moebius transformation obtained by integrating the model Riccati ODE
// dw/dz = alpha w / z (resp. 1/z, m w / z) around the circle |z| = radius,
// tracking three initial points through an adaptive 4th/5th-order scheme
// (second coordinate patch near w = infinity) and reconstructing the map.
// basePoint fixes the starting phase on the circle.
MoebiusElement holonomyNumeric(const LocalModel& model, double radius, long steps,
                               Cplx basePoint = Cplx(1.0));

} // namespace fuchskit
