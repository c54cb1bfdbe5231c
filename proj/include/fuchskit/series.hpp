#pragma once

// Truncated power series over C. Everything in this library needs finitely
// many jet coefficients only; the default truncation keeps 16.

#include <initializer_list>
#include <vector>

#include "fuchskit/errors.hpp"
#include "fuchskit/numeric.hpp"

namespace fuchskit {

class PowerSeries {
public:
    static constexpr int kDefaultLength = 16;

    PowerSeries() : c_(kDefaultLength, Cplx(0.0)) {}

    explicit PowerSeries(std::vector<Cplx> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) fail(ErrorKind::InvalidInput, "PowerSeries: empty coefficient list");
        for (const auto& z : c_)
            if (!isFiniteC(z)) fail(ErrorKind::InvalidInput, "PowerSeries: non-finite coefficient");
    }

    PowerSeries(std::initializer_list<Cplx> coeffs)
        : PowerSeries(std::vector<Cplx>(coeffs)) {}

    static PowerSeries constant(Cplx v, int length = kDefaultLength) {
        std::vector<Cplx> c(length, Cplx(0.0));
        c[0] = v;
        return PowerSeries(std::move(c));
    }

    static PowerSeries one(int length = kDefaultLength) { return constant(Cplx(1.0), length); }

    int length() const { return static_cast<int>(c_.size()); }
    Cplx coeff(int j) const { return j >= 0 && j < length() ? c_[j] : Cplx(0.0); }
    Cplx valueAtZero() const { return c_[0]; }

    Cplx eval(Cplx z) const {
        Cplx acc(0.0);
        for (int j = length() - 1; j >= 0; --j) acc = acc * z + c_[j];
        return acc;
    }

    // 1/phi, truncated to the same length; requires phi(0) != 0.
    PowerSeries reciprocal() const {
        if (std::abs(c_[0]) == 0.0)
            fail(ErrorKind::InvalidInput, "PowerSeries: reciprocal needs a unit");
        std::vector<Cplx> r(length(), Cplx(0.0));
        r[0] = Cplx(1.0) / c_[0];
        for (int j = 1; j < length(); ++j) {
            Cplx acc(0.0);
            for (int i = 1; i <= j; ++i) acc += c_[i] * r[j - i];
            r[j] = -acc / c_[0];
        }
        return PowerSeries(std::move(r));
    }

    // index of the first coefficient above tol, or -1 if all vanish
    int orderOfFirstNonzero(double tol = 0.0) const {
        for (int j = 0; j < length(); ++j)
            if (std::abs(c_[j]) > tol) return j;
        return -1;
    }

    bool isConstant(double tol = 0.0) const {
        for (int j = 1; j < length(); ++j)
            if (std::abs(c_[j]) > tol) return false;
        return true;
    }

private:
    std::vector<Cplx> c_;
};

} // namespace fuchskit
