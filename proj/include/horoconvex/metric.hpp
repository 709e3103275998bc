#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "horoconvex/complex_util.hpp"

namespace horoconvex {

// Pseudo-hyperbolic distance |(z-w)/(1 - conj(z) w)| in [0,1).
inline double pseudo_distance(const cpx& z, const cpx& w) {
    if (std::abs(z) > 1.0 + kGeomTol || std::abs(w) > 1.0 + kGeomTol)
        throw std::domain_error("pseudo_distance: input outside the closed unit disk");
    cpx den = 1.0 - std::conj(z) * w;
    double e = std::abs((z - w) / den);
    return std::min(e, 1.0);
}

// Hyperbolic distance arctanh e(z,w) (metric |dz|/(1-|z|^2), Gaussian
// curvature -4).  Boundary inputs give +infinity.
inline double hyp_distance(const cpx& z, const cpx& w) {
    double e = pseudo_distance(z, w);
    if (e >= 1.0) return std::numeric_limits<double>::infinity();
    return std::atanh(e);
}

// Reference densities: lambda_D(z) = 1/(1-|z|^2), lambda_H(w) = 1/(2 Im w).
inline double disk_density(const cpx& z) {
    double r2 = std::norm(z);
    if (r2 >= 1.0) throw std::domain_error("disk_density: |z| must be < 1");
    return 1.0 / (1.0 - r2);
}

inline double halfplane_density(const cpx& w) {
    if (!(w.imag() > 0.0))
        throw std::domain_error("halfplane_density: Im w must be > 0");
    return 1.0 / (2.0 * w.imag());
}

// Base density the relative density nu is measured against.
inline double density_ratio_base(const cpx& z, bool halfplane) {
    return halfplane ? halfplane_density(z) : disk_density(z);
}

// Hyperbolic distance in the half-plane model (same normalization).
inline double hyp_distance_halfplane(const cpx& z, const cpx& w) {
    if (!(z.imag() > 0.0 && w.imag() > 0.0))
        throw std::domain_error("hyp_distance_halfplane: inputs must be in H");
    double e = std::abs((z - w) / (z - std::conj(w)));
    if (e >= 1.0) return std::numeric_limits<double>::infinity();
    return std::atanh(e);
}

}  // namespace horoconvex
