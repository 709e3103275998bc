#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "horoconvex/circle.hpp"
#include "horoconvex/complex_util.hpp"
#include "horoconvex/metric.hpp"
#include "horoconvex/mobius.hpp"

namespace horoconvex {

// An open euclidean disk internally tangent to the unit circle; the inner
// domain of a horocycle.  |center| + radius = 1.
struct Horodisk {
    cpx tangency;   // point of T where the horocycle touches
    double radius;  // euclidean radius, in (0,1)

    Horodisk(const cpx& zeta, double r) : tangency(zeta), radius(r) {
        if (std::abs(std::abs(zeta) - 1.0) > 1e-12)
            throw std::invalid_argument("Horodisk: tangency must lie on the unit circle");
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("Horodisk: radius must be in (0,1)");
        tangency /= std::abs(tangency);
    }

    cpx center() const { return (1.0 - radius) * tangency; }

    GeneralizedCircle boundary() const {
        return GeneralizedCircle::circle(center(), radius);
    }

    bool contains(const cpx& z, double tol = 0.0) const {
        return std::abs(z - center()) < radius + tol;
    }

    bool on_boundary(const cpx& z, double tol = 1e-10) const {
        return std::abs(std::abs(z - center()) - radius) <= tol;
    }
};

inline Horodisk horodisk_from_tangency(const cpx& zeta, double r) {
    return Horodisk(zeta, r);
}

// The two horodisks H+, H- whose boundaries pass through both a and b,
// ordered by tangency argument (larger argument first).
inline std::pair<Horodisk, Horodisk> horodisks_through_pair(const cpx& a,
                                                            const cpx& b) {
    if (!(in_unit_disk(a) && in_unit_disk(b)))
        throw std::domain_error("horodisks_through_pair: points must be in the disk");
    if (std::abs(a - b) < 1e-14)
        throw std::invalid_argument("horodisks_through_pair: coincident points");
    // Centers lie on the perpendicular bisector c(s) = m + s u and satisfy
    // |c| + |a - c| = 1.  Substituting r = |a - c| gives a quadratic in s.
    cpx m = 0.5 * (a + b);
    cpx u = cpx(0, 1) * (b - a) / std::abs(b - a);
    double am2 = std::norm(a - m);
    double P = 1.0 + am2 - std::norm(m);
    double q = 2.0 * dot(m, u);
    // (q^2 - 4) s^2 - 2 P q s + P^2 - 4 am2 = 0, leading coefficient < 0.
    double A = q * q - 4.0, B = -2.0 * P * q, C = P * P - 4.0 * am2;
    double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) disc = 0.0;
    double sq = std::sqrt(disc);
    double s1 = (-B + sq) / (2.0 * A);
    double s2 = (-B - sq) / (2.0 * A);
    auto make = [&](double s) {
        cpx c = m + s * u;
        double r = 0.5 * (P - q * s);
        return Horodisk(c / std::abs(c), r);
    };
    Horodisk h1 = make(s1), h2 = make(s2);
    if (std::arg(h1.tangency) < std::arg(h2.tangency)) std::swap(h1, h2);
    return {h1, h2};
}

// E(a,b): intersection of the two horodisks through a and b.  Contains every
// admissible arc joining a and b.
struct Lens {
    cpx a, b;
    Horodisk hplus, hminus;

    bool contains(const cpx& z, double tol = 0.0) const {
        return hplus.contains(z, tol) && hminus.contains(z, tol);
    }
};

inline Lens lens(const cpx& a, const cpx& b) {
    auto [hp, hm] = horodisks_through_pair(a, b);
    return Lens{a, b, hp, hm};
}

namespace detail {

// Normalizing map sending the horodisk complement picture to the half-plane
// with the horocycle on Im w = 1: rotate the tangency to 1, apply tau, scale.
inline cpx horodisk_normalized_image(const cpx& z, const Horodisk& h) {
    MoebiusMap tau = MoebiusMap::disk_to_halfplane();
    cpx w = tau.apply(z / h.tangency);
    double scale = h.radius / (1.0 - h.radius);
    return w * scale;
}

}  // namespace detail

// Hyperbolic distance (disk metric) from z outside closure(h) to the
// horocycle boundary of h.  After normalization the horocycle is Im w = 1 and
// the distance is (1/2) log(1/Im w).
inline double distance_to_horocycle(const cpx& z, const Horodisk& h) {
    if (!in_unit_disk(z))
        throw std::domain_error("distance_to_horocycle: z must be in the disk");
    cpx w = detail::horodisk_normalized_image(z, h);
    double v = w.imag();
    if (v > 1.0 + 1e-12)
        throw std::domain_error("distance_to_horocycle: z inside the horodisk");
    if (v >= 1.0) return 0.0;
    return 0.5 * std::log(1.0 / v);
}

// Distance to the horocycle from either side (used by evaluators whose
// domain lies inside the horodisk).
inline double distance_to_horocycle_two_sided(const cpx& z, const Horodisk& h) {
    cpx w = detail::horodisk_normalized_image(z, h);
    return 0.5 * std::abs(std::log(w.imag()));
}

}  // namespace horoconvex
