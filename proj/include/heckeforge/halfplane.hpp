#pragma once

#include <complex>
#include <stdexcept>

namespace heckeforge {

/// Point of the open upper half-plane. Floating probe; group data stays exact.
struct HalfPlanePoint {
    double re = 0;
    double im = 1;

    HalfPlanePoint() = default;
    HalfPlanePoint(double r, double i) : re(r), im(i) {}

    std::complex<double> z() const { return {re, im}; }
    double abs2() const { return re * re + im * im; }

    void require_interior() const {
        if (!(im > 0)) throw std::domain_error("point not in the open upper half-plane");
    }
};

} // namespace heckeforge
