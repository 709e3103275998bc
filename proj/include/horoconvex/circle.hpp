#pragma once

#include <cmath>
#include <stdexcept>

#include "horoconvex/complex_util.hpp"

namespace horoconvex {

// Ambient model of the hyperbolic plane: the unit disk or the upper
// half-plane (related by tau(z) = i(1+z)/(1-z)).
enum class Model { Disk, HalfPlane };

// How a generalized circle sits relative to the ideal boundary of the model:
//   Crossing   - meets the boundary at two points, |kappa| < 2
//   Horocyclic - internally tangent (disk) / tangent to R or horizontal
//                line (half-plane), |kappa| = 2
//   Interior   - disjoint from the boundary, |kappa| > 2
enum class BoundaryClass { Crossing, Horocyclic, Interior };

// A circle or a straight line in the plane.
struct GeneralizedCircle {
    enum Kind { Circle, Line } kind;
    // Circle case.
    cpx center{0.0, 0.0};
    double radius = 0.0;
    // Line case: point on the line and a unit direction.
    cpx anchor{0.0, 0.0};
    cpx direction{1.0, 0.0};

    static GeneralizedCircle circle(const cpx& c, double r) {
        if (!(r > 0.0)) throw std::invalid_argument("circle: radius must be > 0");
        GeneralizedCircle g;
        g.kind = Circle;
        g.center = c;
        g.radius = r;
        return g;
    }

    static GeneralizedCircle line(const cpx& p, const cpx& dir) {
        double n = std::abs(dir);
        if (!(n > 0.0)) throw std::invalid_argument("line: zero direction");
        GeneralizedCircle g;
        g.kind = Line;
        g.anchor = p;
        g.direction = dir / n;
        return g;
    }

    bool is_circle() const { return kind == Circle; }
    bool is_line() const { return kind == Line; }

    // Signed euclidean distance irrelevant here; this is the absolute
    // distance from z to the circle/line.
    double boundary_distance(const cpx& z) const {
        if (kind == Circle) return std::abs(std::abs(z - center) - radius);
        return std::abs(cross(direction, z - anchor));
    }

    bool contains_point(const cpx& z, double tol = 1e-10) const {
        return boundary_distance(z) <= tol;
    }

    // Unit circle 𝕋.
    static GeneralizedCircle unit_circle() { return circle({0.0, 0.0}, 1.0); }

    // The real axis, boundary of the half-plane model.
    static GeneralizedCircle real_line() {
        return line({0.0, 0.0}, {1.0, 0.0});
    }
};

inline BoundaryClass classify(const GeneralizedCircle& c, Model model,
                              double tol = kGeomTol) {
    if (model == Model::Disk) {
        if (c.is_line()) {
            // A chord line crosses the unit circle; a tangent line is the
            // degenerate horocyclic case.
            double dist = std::abs(cross(c.direction, -c.anchor));
            if (std::abs(dist - 1.0) <= tol) return BoundaryClass::Horocyclic;
            return dist < 1.0 ? BoundaryClass::Crossing : BoundaryClass::Interior;
        }
        double d = std::abs(c.center);
        // Circles |z|=1 and |z-center|=R cross iff |1-R| < d < 1+R.
        if (std::abs(d + c.radius - 1.0) <= tol ||
            std::abs(d - c.radius - 1.0) <= tol)
            return BoundaryClass::Horocyclic;
        if (std::abs(1.0 - c.radius) < d && d < 1.0 + c.radius)
            return BoundaryClass::Crossing;
        return BoundaryClass::Interior;
    }
    // Half-plane model.
    if (c.is_line()) {
        double slope_y = std::abs(c.direction.imag());
        return slope_y <= tol ? BoundaryClass::Horocyclic
                              : BoundaryClass::Crossing;
    }
    double h = std::abs(c.center.imag());
    if (std::abs(h - c.radius) <= tol) return BoundaryClass::Horocyclic;
    return h < c.radius ? BoundaryClass::Crossing : BoundaryClass::Interior;
}

// Whether the circle/line meets the open model region at all.
inline bool meets_model_region(const GeneralizedCircle& c, Model model) {
    if (model == Model::Disk) {
        if (c.is_line()) return std::abs(cross(c.direction, -c.anchor)) < 1.0;
        double d = std::abs(c.center);
        return d - c.radius < 1.0 && !(d + c.radius <= 0.0);
    }
    if (c.is_line()) {
        if (std::abs(c.direction.imag()) > 0.0) return true;
        return c.anchor.imag() > 0.0;
    }
    return c.center.imag() + c.radius > 0.0;
}

// Signed constant hyperbolic curvature of a generalized circle, with the
// metric normalized to Gaussian curvature -4 (|dz|/(1-|z|^2) in the disk,
// |dw|/(2 Im w) in the half-plane).  orientation = +1 traverses circles
// counterclockwise (lines along +direction); kappa > 0 when the curve bends
// toward the left normal.
inline double hyperbolic_curvature(const GeneralizedCircle& c, Model model,
                                   int orientation = +1) {
    if (orientation != 1 && orientation != -1)
        throw std::invalid_argument("hyperbolic_curvature: orientation must be +-1");
    if (!meets_model_region(c, model))
        throw std::domain_error("hyperbolic_curvature: curve misses the model region");
    double kappa;
    if (model == Model::Disk) {
        if (c.is_circle()) {
            double d = std::abs(c.center);
            kappa = (1.0 + c.radius * c.radius - d * d) / c.radius;
        } else {
            // kappa_g = kappa_e (1-|p|^2) - 2 p.n with n = i t; p.n is the
            // constant signed offset of the line from the origin.
            cpx n{-c.direction.imag(), c.direction.real()};
            kappa = -2.0 * dot(c.anchor, n);
        }
    } else {
        if (c.is_circle()) {
            kappa = 2.0 * c.center.imag() / c.radius;
        } else {
            kappa = 2.0 * c.direction.real();
        }
    }
    return orientation * kappa;
}

}  // namespace horoconvex
