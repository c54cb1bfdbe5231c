#pragma once

// Shared scalar helpers: complex double arithmetic, default tolerances and
// a few branch-safe utilities used across the library.

#include <cmath>
#include <complex>
#include <numbers>

namespace fuchskit {

using Cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi_v<double>;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Default classification tolerance; every operation that compares against it
// accepts an override.
inline constexpr double kDefaultTol = 1e-9;

inline bool isFiniteC(Cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline double absSq(Cplx z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

inline Cplx iTimes(Cplx z) { return Cplx(-z.imag(), z.real()); }

// ceil that forgives float fuzz just below an integer boundary
inline long snappedCeil(double x, double snap = 1e-9) {
    return static_cast<long>(std::ceil(x - snap));
}

inline bool nearInteger(double x, double tol) {
    return std::abs(x - std::round(x)) <= tol;
}

inline bool nearIntegerC(Cplx z, double tol) {
    return std::abs(z.imag()) <= tol && nearInteger(z.real(), tol);
}

} // namespace fuchskit
