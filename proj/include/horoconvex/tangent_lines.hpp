#pragma once

#include <cmath>
#include <stdexcept>

#include "horoconvex/circle.hpp"
#include "horoconvex/complex_util.hpp"

namespace horoconvex {

// A straight segment tangent to one or two circles, directed from p0 to p1.
struct TangentSegment {
    cpx p0, p1;

    cpx direction() const { return (p1 - p0) / std::abs(p1 - p0); }
};

// Tangent selection, named for travel from the first argument to the second:
// Upper keeps both disks on the clockwise side of the travel direction (below
// the line when moving left to right); UpperCross touches the first disk on
// its upper side and the second on its lower side; LowerCross is the mirror.
enum class TangentKind { Upper, UpperCross, LowerCross };

namespace detail {

// Common tangent of two circles with prescribed sides.  side_i = +1 puts
// center i on the left of the travel direction (counterclockwise wrap),
// side_i = -1 on the right (clockwise wrap).  A radius of 0 degenerates the
// circle to a point.  Throws when the requested tangent does not exist.
inline TangentSegment common_tangent(const cpx& c1, double r1, int side1,
                                     const cpx& c2, double r2, int side2) {
    cpx v = c2 - c1;
    double d = std::abs(v);
    if (d < kGeomTol)
        throw std::domain_error("common_tangent: concentric circles");
    double k = side2 * r2 - side1 * r1;
    if (std::abs(k) > d)
        throw std::domain_error("common_tangent: requested tangent does not exist");
    cpx vhat = v / d;
    double s = std::sqrt(std::max(0.0, 1.0 - (k / d) * (k / d)));
    for (double branch : {1.0, -1.0}) {
        cpx n = (k / d) * vhat + branch * s * cpx(0, 1) * vhat;
        cpx t = -cpx(0, 1) * n;
        if (dot(t, v) <= 0.0) continue;
        TangentSegment seg{c1 - double(side1) * r1 * n,
                           c2 - double(side2) * r2 * n};
        // Tangency residuals: endpoints on the circles, perpendicular radii.
        if (std::abs(std::abs(seg.p0 - c1) - r1) > 1e-10 ||
            std::abs(std::abs(seg.p1 - c2) - r2) > 1e-10)
            throw std::runtime_error("common_tangent: endpoint residual");
        if ((r1 > 0.0 && std::abs(dot(t, seg.p0 - c1)) > 1e-10) ||
            (r2 > 0.0 && std::abs(dot(t, seg.p1 - c2)) > 1e-10))
            throw std::runtime_error("common_tangent: perpendicularity residual");
        return seg;
    }
    // Both branches degenerate: |k| == d, tangent grazes along v itself.
    throw std::domain_error("common_tangent: tangent degenerate to the center line");
}

inline void require_circle(const GeneralizedCircle& c, const char* who) {
    if (!c.is_circle())
        throw std::invalid_argument(std::string(who) + ": circle required");
}

inline std::pair<int, int> kind_sides(TangentKind kind) {
    switch (kind) {
        case TangentKind::Upper: return {-1, -1};
        case TangentKind::UpperCross: return {-1, +1};
        default: return {+1, -1};
    }
}

}  // namespace detail

inline TangentSegment tangent_segment(const cpx& from, const GeneralizedCircle& c2,
                                      TangentKind kind) {
    detail::require_circle(c2, "tangent_segment");
    auto [s1, s2] = detail::kind_sides(kind);
    return detail::common_tangent(from, 0.0, s1, c2.center, c2.radius, s2);
}

inline TangentSegment tangent_segment(const GeneralizedCircle& c1, const cpx& to,
                                      TangentKind kind) {
    detail::require_circle(c1, "tangent_segment");
    auto [s1, s2] = detail::kind_sides(kind);
    return detail::common_tangent(c1.center, c1.radius, s1, to, 0.0, s2);
}

inline TangentSegment tangent_segment(const GeneralizedCircle& c1,
                                      const GeneralizedCircle& c2,
                                      TangentKind kind) {
    detail::require_circle(c1, "tangent_segment");
    detail::require_circle(c2, "tangent_segment");
    auto [s1, s2] = detail::kind_sides(kind);
    return detail::common_tangent(c1.center, c1.radius, s1, c2.center, c2.radius,
                                  s2);
}

}  // namespace horoconvex
