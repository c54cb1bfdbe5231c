#pragma once

// Embedded Dormand-Prince 4(5) integration for small complex systems.
// Fixed base grid with local step halving when the embedded error estimate
// misbehaves; the model ODEs in this library are smooth enough that the
// base grid almost always suffices.

#include <array>
#include <cmath>
#include <cstddef>

#include "fuchskit/errors.hpp"
#include "fuchskit/numeric.hpp"

namespace fuchskit::detail {

template <std::size_t N, typename F>
void dp45Step(F&& f, double t, double h, const std::array<Cplx, N>& y,
              std::array<Cplx, N>& out, double& errEst) {
    using V = std::array<Cplx, N>;
    auto axpy = [](const V& base, std::initializer_list<std::pair<double, const V*>> terms,
                   double h_) {
        V r = base;
        for (const auto& [coef, k] : terms)
            for (std::size_t i = 0; i < N; ++i) r[i] += h_ * coef * (*k)[i];
        return r;
    };

    V k1 = f(t, y);
    V k2 = f(t + h / 5.0, axpy(y, {{1.0 / 5.0, &k1}}, h));
    V k3 = f(t + 3.0 * h / 10.0, axpy(y, {{3.0 / 40.0, &k1}, {9.0 / 40.0, &k2}}, h));
    V k4 = f(t + 4.0 * h / 5.0,
             axpy(y, {{44.0 / 45.0, &k1}, {-56.0 / 15.0, &k2}, {32.0 / 9.0, &k3}}, h));
    V k5 = f(t + 8.0 * h / 9.0,
             axpy(y,
                  {{19372.0 / 6561.0, &k1},
                   {-25360.0 / 2187.0, &k2},
                   {64448.0 / 6561.0, &k3},
                   {-212.0 / 729.0, &k4}},
                  h));
    V k6 = f(t + h, axpy(y,
                         {{9017.0 / 3168.0, &k1},
                          {-355.0 / 33.0, &k2},
                          {46732.0 / 5247.0, &k3},
                          {49.0 / 176.0, &k4},
                          {-5103.0 / 18656.0, &k5}},
                         h));
    out = axpy(y,
               {{35.0 / 384.0, &k1},
                {500.0 / 1113.0, &k3},
                {125.0 / 192.0, &k4},
                {-2187.0 / 6784.0, &k5},
                {11.0 / 84.0, &k6}},
               h);
    V k7 = f(t + h, out);

    // difference against the embedded 4th-order solution
    static constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0;
    static constexpr double e3 = 500.0 / 1113.0 - 7571.0 / 16695.0;
    static constexpr double e4 = 125.0 / 192.0 - 393.0 / 640.0;
    static constexpr double e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
    static constexpr double e6 = 11.0 / 84.0 - 187.0 / 2100.0;
    static constexpr double e7 = -1.0 / 40.0;
    errEst = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        Cplx d = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        errEst = std::max(errEst, std::abs(d));
    }
}

template <std::size_t N, typename F>
std::array<Cplx, N> integrateAdaptive(F&& f, double t0, double t1, std::array<Cplx, N> y,
                                      long baseSteps) {
    const double hBase = (t1 - t0) / static_cast<double>(baseSteps);
    double t = t0;
    for (long s = 0; s < baseSteps; ++s) {
        double remaining = hBase;
        double h = hBase;
        while (remaining > 0.0) {
            if (h > remaining) h = remaining;
            std::array<Cplx, N> next;
            double err = 0.0;
            dp45Step(f, t, h, y, next, err);
            double scale = 1.0;
            for (const auto& v : y) scale = std::max(scale, std::abs(v));
            if (!std::isfinite(err))
                fail(ErrorKind::IntegrationDivergence, "integrator produced non-finite values");
            if (err > 1e-12 * scale && h > hBase * 0x1p-20) {
                h *= 0.5;
                continue;
            }
            y = next;
            t += h;
            remaining -= h;
            h = std::min(2.0 * h, hBase);
        }
    }
    for (const auto& v : y)
        if (!isFiniteC(v))
            fail(ErrorKind::IntegrationDivergence, "integrator produced non-finite values");
    return y;
}

} // namespace fuchskit::detail
