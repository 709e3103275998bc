#pragma once

#include <cmath>
#include <stdexcept>

#include "horoconvex/complex_util.hpp"
#include "horoconvex/metric.hpp"
#include "horoconvex/mobius.hpp"
#include "horoconvex/numeric.hpp"

namespace horoconvex {

// A hyperbolic disk in the unit disk, stored with hyperbolic center/radius
// and derived euclidean data.
struct HyperbolicDisk {
    cpx hyp_center;
    double hyp_radius;
    cpx euc_center;
    double euc_radius;

    HyperbolicDisk(const cpx& c, double rho) : hyp_center(c), hyp_radius(rho) {
        if (!in_unit_disk(c))
            throw std::invalid_argument("HyperbolicDisk: center must be in the disk");
        if (!(rho > 0.0))
            throw std::invalid_argument("HyperbolicDisk: radius must be > 0");
        double t = std::tanh(rho);
        double s2 = std::norm(c);
        double den = 1.0 - t * t * s2;
        euc_center = c * (1.0 - t * t) / den;
        euc_radius = t * (1.0 - s2) / den;
    }
};

// A class-C domain: D1 \ closure(D2) with D1 centered at the origin and the
// two boundary circles meeting orthogonally at two points of the disk.
struct ClassCDomain {
    HyperbolicDisk d1, d2;

    double orthogonality_residual() const {
        return std::norm(d1.euc_center - d2.euc_center) -
               d1.euc_radius * d1.euc_radius - d2.euc_radius * d2.euc_radius;
    }
};

// Builds the class-C domain with D1 = hyperbolic disk of radius rho1 at the
// origin and D2 of hyperbolic radius rho2 placed along the direction of
// center2; the modulus of D2's hyperbolic center is solved so that the
// boundary circles meet orthogonally.
inline ClassCDomain classC_construct(const cpx& center2, double rho2,
                                     double rho1) {
    if (!(rho1 > 0.0 && rho2 > 0.0))
        throw std::invalid_argument("classC_construct: radii must be > 0");
    if (std::abs(center2) == 0.0)
        throw std::invalid_argument("classC_construct: center2 direction undefined");
    cpx dir = center2 / std::abs(center2);
    double r1 = std::tanh(rho1);
    double t = std::tanh(rho2);
    // F(s) = |c2(s)|^2 - r1^2 - r2(s)^2 for D2 hyperbolic center s*dir.
    auto F = [&](double s) {
        double den = 1.0 - t * t * s * s;
        double c2 = s * (1.0 - t * t) / den;
        double r2 = t * (1.0 - s * s) / den;
        return c2 * c2 - r1 * r1 - r2 * r2;
    };
    // F(0) < 0 and F(s) -> 1 - r1^2 > 0 as s -> 1.
    double s = bisect_root(F, 0.0, 1.0 - 1e-12, 1e-15);
    ClassCDomain dom{HyperbolicDisk({0.0, 0.0}, rho1),
                     HyperbolicDisk(s * dir, rho2)};
    if (std::abs(dom.orthogonality_residual()) > 1e-10)
        throw std::runtime_error("classC_construct: orthogonality not achieved");
    return dom;
}

// Hyperbolic midpoint of the concave boundary arc dD2 ∩ D1: the point of the
// arc at equal hyperbolic arc length from the two intersection points,
// located by bisection on the arc parameter.
inline cpx classC_midpoint(const ClassCDomain& dom) {
    const cpx c1 = dom.d1.euc_center;  // origin
    const double r1 = dom.d1.euc_radius;
    const cpx c2 = dom.d2.euc_center;
    const double r2 = dom.d2.euc_radius;
    // Intersection points of the two circles (orthogonal, so they exist).
    cpx delta = c2 - c1;
    double d = std::abs(delta);
    double x = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    double y2 = r1 * r1 - x * x;
    if (y2 < 0.0) y2 = 0.0;
    cpx u = delta / d;
    cpx mid = c1 + x * u;
    cpx perp = cpx(0, 1) * u * std::sqrt(y2);
    cpx p1 = mid + perp, p2 = mid - perp;
    // Angles of the intersection points on circle 2; the arc inside D1 is the
    // one whose midpoint lies in D1.
    double t1 = std::arg(p1 - c2), t2 = std::arg(p2 - c2);
    double sweep = wrap_angle(t2 - t1);
    auto at = [&](double frac) { return c2 + std::polar(r2, t1 + frac * sweep); };
    if (std::abs(at(0.5) - c1) > r1) {
        // Other arc.
        sweep = sweep > 0 ? sweep - 2.0 * M_PI : sweep + 2.0 * M_PI;
    }
    // Hyperbolic length of the arc from p1 up to parameter fraction f.
    auto arclen = [&](double f) {
        // Simpson's rule on the hyperbolic speed along the arc.
        const int n = 512;  // even
        double h = f / n;
        auto speed = [&](double fm) {
            return disk_density(at(fm)) * r2 * std::abs(sweep);
        };
        double total = speed(0.0) + speed(f);
        for (int i = 1; i < n; ++i) total += speed(i * h) * (i % 2 ? 4.0 : 2.0);
        return total * h / 3.0;
    };
    double total = arclen(1.0);
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
        double m = 0.5 * (lo + hi);
        (arclen(m) < 0.5 * total ? lo : hi) = m;
    }
    return at(0.5 * (lo + hi));
}

}  // namespace horoconvex
