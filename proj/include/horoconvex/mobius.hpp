#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "horoconvex/circle.hpp"
#include "horoconvex/complex_util.hpp"

namespace horoconvex {

// w -> (a w + b) / (c w + d), with projective handling of infinity.
class MoebiusMap {
  public:
    MoebiusMap(cpx a, cpx b, cpx c, cpx d) : a_(a), b_(b), c_(c), d_(d) {
        double scale = std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
        if (!(scale > 0.0))
            throw std::invalid_argument("MoebiusMap: all coefficients zero");
        cpx det = (a_ / scale) * (d_ / scale) - (b_ / scale) * (c_ / scale);
        if (std::abs(det) < 1e-14)
            throw std::invalid_argument("MoebiusMap: singular coefficient matrix");
    }

    static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

    // tau(z) = i(1+z)/(1-z), the standard map of the disk onto the
    // upper half-plane.
    static MoebiusMap disk_to_halfplane() {
        return {cpx(0, 1), cpx(0, 1), cpx(-1, 0), cpx(1, 0)};
    }

    // z -> e^{i theta} (z - alpha) / (1 - conj(alpha) z), an automorphism of
    // the disk; verified on boundary probe points and tagged as such.
    static MoebiusMap disk_automorphism(const cpx& alpha, double theta) {
        if (!(std::abs(alpha) < 1.0))
            throw std::invalid_argument("disk_automorphism: |alpha| must be < 1");
        cpx rot = std::polar(1.0, theta);
        MoebiusMap m(rot, -rot * alpha, -std::conj(alpha), 1.0);
        m.check_disk_automorphism();
        m.disk_automorphism_ = true;
        return m;
    }

    static MoebiusMap rotation(double theta) {
        return disk_automorphism({0.0, 0.0}, theta);
    }

    cpx apply(const cpx& z) const {
        if (is_infinite(z)) {
            if (std::abs(c_) == 0.0) return cpx_infinity();
            return a_ / c_;
        }
        cpx den = c_ * z + d_;
        cpx num = a_ * z + b_;
        double scale = std::max(std::abs(num), 1.0);
        if (std::abs(den) < 1e-300 * scale || std::abs(den) == 0.0)
            return cpx_infinity();
        return num / den;
    }

    cpx operator()(const cpx& z) const { return apply(z); }

    // Preimage of infinity.
    cpx pole() const {
        if (std::abs(c_) == 0.0) return cpx_infinity();
        return -d_ / c_;
    }

    cpx derivative(const cpx& z) const {
        cpx den = c_ * z + d_;
        return (a_ * d_ - b_ * c_) / (den * den);
    }

    MoebiusMap inverse() const {
        MoebiusMap m(d_, -b_, -c_, a_);
        m.disk_automorphism_ = disk_automorphism_;
        return m;
    }

    MoebiusMap compose(const MoebiusMap& o) const {
        // (*this) after o.
        return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
    }

    bool is_disk_automorphism() const { return disk_automorphism_; }

    cpx a() const { return a_; }
    cpx b() const { return b_; }
    cpx c() const { return c_; }
    cpx d() const { return d_; }

  private:
    void check_disk_automorphism() const {
        for (int k = 0; k < 8; ++k) {
            cpx z = std::polar(1.0, k * M_PI / 4.0);
            if (std::abs(std::abs(apply(z)) - 1.0) > 1e-12)
                throw std::logic_error("disk_automorphism: probe left the unit circle");
        }
        if (!(std::abs(apply(cpx(0, 0))) < 1.0))
            throw std::logic_error("disk_automorphism: origin mapped outside the disk");
    }

    cpx a_, b_, c_, d_;
    bool disk_automorphism_ = false;
};

namespace detail {

// Circumcircle of three non-collinear points.
inline GeneralizedCircle circle_through(const cpx& p, const cpx& q, const cpx& r) {
    cpx u = q - p, v = r - p;
    double den = 2.0 * cross(u, v);
    if (std::abs(den) == 0.0)
        throw std::invalid_argument("circle_through: collinear points");
    double uu = std::norm(u), vv = std::norm(v);
    cpx rel{(uu * v.imag() - vv * u.imag()) / den,
            (vv * u.real() - uu * v.real()) / den};
    cpx center = p + rel;
    return GeneralizedCircle::circle(center, std::abs(rel));
}

inline cpx point_on(const GeneralizedCircle& c, double t) {
    if (c.is_circle()) return c.center + std::polar(c.radius, t);
    return c.anchor + std::tan(t / 2.0) * c.direction;  // covers the whole line
}

}  // namespace detail

// Image of a generalized circle under a Moebius map.  The result is a line
// exactly when the pole of m lies on the source circle.
inline GeneralizedCircle mobius_map_circle(const MoebiusMap& m,
                                           const GeneralizedCircle& c) {
    cpx pole = m.pole();
    bool pole_on = is_finite(pole) ? c.contains_point(pole, 1e-12)
                                   : c.is_line();
    // Pick parameters whose points stay well away from the pole.
    std::array<double, 6> params = {0.1, 1.5, 2.9, -1.3, -2.6, 0.9};
    std::array<cpx, 3> pts;
    int got = 0;
    for (double t : params) {
        cpx p = detail::point_on(c, t);
        if (is_finite(pole) && std::abs(p - pole) < 1e-6) continue;
        cpx q = m.apply(p);
        if (!is_finite(q)) continue;
        bool dup = false;
        for (int i = 0; i < got; ++i)
            if (std::abs(pts[i] - q) < 1e-12) dup = true;
        if (dup) continue;
        pts[got++] = q;
        if (got == 3) break;
    }
    if (got < 3 && !pole_on)
        throw std::runtime_error("mobius_map_circle: could not sample image");
    if (pole_on || got < 3) {
        // Image is a line through the first two sampled points.
        if (got < 2)
            throw std::runtime_error("mobius_map_circle: degenerate image");
        return GeneralizedCircle::line(pts[0], pts[1] - pts[0]);
    }
    // Collinear images (numerically) also mean a line.
    if (std::abs(cross(pts[1] - pts[0], pts[2] - pts[0])) <
        1e-13 * std::norm(pts[1] - pts[0]))
        return GeneralizedCircle::line(pts[0], pts[1] - pts[0]);
    return detail::circle_through(pts[0], pts[1], pts[2]);
}

inline cpx mobius_apply(const MoebiusMap& m, const cpx& z) { return m.apply(z); }

}  // namespace horoconvex
