#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace horoconvex {

using cpx = std::complex<double>;

// Default absolute tolerance for geometric predicates; all scenes are
// normalized to O(1) coordinates.
inline constexpr double kGeomTol = 1e-12;

inline cpx cpx_infinity() {
    return {std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
}

inline bool is_infinite(const cpx& z) {
    return std::isinf(z.real()) || std::isinf(z.imag());
}

inline bool is_finite(const cpx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// 2D cross product of a and b seen as vectors.
inline double cross(const cpx& a, const cpx& b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

inline double dot(const cpx& a, const cpx& b) {
    return a.real() * b.real() + a.imag() * b.imag();
}

inline bool in_unit_disk(const cpx& z, double tol = 0.0) {
    return std::abs(z) < 1.0 - tol;
}

// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a <= -M_PI) a += 2.0 * M_PI;
    if (a > M_PI) a -= 2.0 * M_PI;
    return a;
}

}  // namespace horoconvex
