#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "horoconvex/circle.hpp"
#include "horoconvex/complex_util.hpp"
#include "horoconvex/mobius.hpp"

namespace horoconvex {

// One constant-hyperbolic-curvature piece: a sub-arc of a crossing
// generalized circle, traversed from start to end.
struct CurvatureArc {
    Model model;
    GeneralizedCircle support;
    cpx start, end;
    bool ccw = true;     // traversal sense on a circle support; unused for lines
    double kappa = 0.0;  // signed hyperbolic curvature along the traversal

    // Euclidean angle swept on a circle support, in (0, 2pi).
    double sweep() const {
        if (support.is_line()) return 0.0;
        double t0 = std::arg(start - support.center);
        double t1 = std::arg(end - support.center);
        double s = ccw ? t1 - t0 : t0 - t1;
        while (s <= 0.0) s += 2.0 * M_PI;
        while (s > 2.0 * M_PI) s -= 2.0 * M_PI;
        return s;
    }

    cpx point_at(double f) const {
        if (support.is_line()) return start + f * (end - start);
        double t0 = std::arg(start - support.center);
        double dt = (ccw ? 1.0 : -1.0) * sweep() * f;
        return support.center + std::polar(support.radius, t0 + dt);
    }

    // Unit tangent in the traversal direction at parameter f.
    cpx tangent_at(double f) const {
        if (support.is_line()) {
            cpx d = end - start;
            return d / std::abs(d);
        }
        cpx radial = point_at(f) - support.center;
        cpx t = cpx(0, 1) * radial / std::abs(radial);
        return ccw ? t : -t;
    }

    CurvatureArc reversed() const {
        CurvatureArc r = *this;
        std::swap(r.start, r.end);
        r.ccw = !ccw;
        r.kappa = -kappa;
        return r;
    }

    double euclidean_length() const {
        if (support.is_line()) return std::abs(end - start);
        return support.radius * sweep();
    }

    // Polyline samples with chord error <= chord_err, at most max_samples
    // points, endpoints included.
    std::vector<cpx> sample(double chord_err = 1e-6,
                            int max_samples = 10000) const {
        int n;
        if (support.is_line()) {
            n = 64;
        } else {
            double dt = 2.0 * std::sqrt(2.0 * chord_err / support.radius);
            n = (int)std::ceil(sweep() / dt);
            n = std::max(n, 8);
            n = std::min(n, max_samples);
        }
        std::vector<cpx> pts;
        pts.reserve(n + 1);
        for (int i = 0; i <= n; ++i) pts.push_back(point_at((double)i / n));
        return pts;
    }
};

// Builds an arc on a given support with explicit traversal sense; curvature
// is derived from the support and sense.
inline CurvatureArc make_arc(Model model, const GeneralizedCircle& support,
                             const cpx& start, const cpx& end, bool ccw) {
    CurvatureArc arc;
    arc.model = model;
    arc.support = support;
    arc.start = start;
    arc.end = end;
    arc.ccw = ccw;
    if (support.is_line()) {
        cpx dir = end - start;
        if (std::abs(dir) == 0.0)
            throw std::invalid_argument("make_arc: degenerate segment");
        // Re-anchor the support along the actual traversal direction.
        arc.support = GeneralizedCircle::line(start, dir);
        arc.kappa = hyperbolic_curvature(arc.support, model, +1);
    } else {
        arc.kappa = hyperbolic_curvature(support, model, ccw ? +1 : -1);
    }
    return arc;
}

inline CurvatureArc segment_arc(Model model, const cpx& a, const cpx& b) {
    return make_arc(model, GeneralizedCircle::line(a, b - a), a, b, true);
}

namespace detail {

// Whether the circle angle theta lies on the traversed sub-arc.
inline bool arc_covers_angle(const CurvatureArc& arc, double theta) {
    double t0 = std::arg(arc.start - arc.support.center);
    double f = arc.ccw ? theta - t0 : t0 - theta;
    while (f < 0.0) f += 2.0 * M_PI;
    while (f >= 2.0 * M_PI) f -= 2.0 * M_PI;
    return f <= arc.sweep();
}

// Picks the traversal sense for which the arc between start and end stays in
// the open model region.  The out-of-region portion of a crossing circle
// always contains the point farthest from the origin (disk) or the lowest
// point (half-plane), so it suffices to keep that extremal angle off the arc.
inline bool in_region_sense(Model model, const GeneralizedCircle& support,
                            const cpx& start, const cpx& end) {
    double bad_angle;
    bool has_bad;
    if (model == Model::Disk) {
        has_bad = std::abs(support.center) + support.radius > 1.0;
        bad_angle = std::arg(support.center);  // farthest point direction
    } else {
        has_bad = support.center.imag() - support.radius < 0.0;
        bad_angle = -M_PI / 2.0;  // lowest point
    }
    if (!has_bad) return true;
    for (bool ccw : {true, false}) {
        CurvatureArc probe = make_arc(model, support, start, end, ccw);
        if (!arc_covers_angle(probe, bad_angle)) return ccw;
    }
    throw std::runtime_error("in_region_sense: no arc stays in the model region");
}

}  // namespace detail

// Constant-curvature arc in the disk from a to b with |curvature| =
// |kappa|, on the requested side of the directed geodesic a->b (side=+1:
// left, which means traversal curvature -|kappa| in the left-normal
// convention).  kappa = 0 gives the geodesic itself.
inline CurvatureArc arc_through(const cpx& a, const cpx& b, double kappa,
                                int side) {
    if (!(in_unit_disk(a) && in_unit_disk(b)))
        throw std::domain_error("arc_through: endpoints must be in the disk");
    if (std::abs(a - b) < 1e-14)
        throw std::invalid_argument("arc_through: coincident endpoints");
    if (!(std::abs(kappa) < 2.0))
        throw std::invalid_argument("arc_through: |kappa| must be < 2");
    const double kt = std::abs(kappa);

    if (kt < 1e-14) {
        // Geodesic: diameter chord or circle orthogonal to the unit circle.
        if (std::abs(cross(a, b - a)) < 1e-14) {
            return segment_arc(Model::Disk, a, b);
        }
        // Solve Re(conj(c) a) = (1+|a|^2)/2 and likewise for b.
        double det = cross(a, b);
        double ra = 0.5 * (1.0 + std::norm(a));
        double rb = 0.5 * (1.0 + std::norm(b));
        cpx c{(ra * b.imag() - rb * a.imag()) / det,
              (rb * a.real() - ra * b.real()) / det};
        double R = std::sqrt(std::norm(c) - 1.0);
        auto support = GeneralizedCircle::circle(c, R);
        bool ccw = detail::in_region_sense(Model::Disk, support, a, b);
        return make_arc(Model::Disk, support, a, b, ccw);
    }

    // Candidate support circles through a,b: centers c(s) = m + s u on the
    // perpendicular bisector with kappa_ccw(s) = (P - q s)/R(s) = +-kt.
    cpx m = 0.5 * (a + b);
    cpx u = cpx(0, 1) * (b - a) / std::abs(b - a);
    double am2 = std::norm(a - m);
    double P = 1.0 + am2 - std::norm(m);
    double q = 2.0 * dot(m, u);
    std::vector<double> roots;
    for (double target : {kt, -kt}) {
        // (q^2 - kt^2) s^2 - 2 P q s + P^2 - kt^2 am2 = 0, keeping only roots
        // with sign(P - q s) = sign(target).
        double A = q * q - kt * kt, B = -2.0 * P * q, C = P * P - kt * kt * am2;
        std::vector<double> cand;
        if (std::abs(A) < 1e-14) {
            if (std::abs(B) > 0.0) cand.push_back(-C / B);
        } else {
            double disc = B * B - 4.0 * A * C;
            if (disc >= 0.0) {
                double sq = std::sqrt(disc);
                cand.push_back((-B + sq) / (2.0 * A));
                cand.push_back((-B - sq) / (2.0 * A));
            }
        }
        for (double s : cand)
            if ((P - q * s) * target > 0.0) roots.push_back(s);
    }
    for (double s : roots) {
        cpx c = m + s * u;
        double R = std::sqrt(am2 + s * s);
        auto support = GeneralizedCircle::circle(c, R);
        if (classify(support, Model::Disk) != BoundaryClass::Crossing) continue;
        bool ccw;
        try {
            ccw = detail::in_region_sense(Model::Disk, support, a, b);
        } catch (const std::runtime_error&) {
            continue;
        }
        CurvatureArc arc = make_arc(Model::Disk, support, a, b, ccw);
        // The two |kappa| = kt arcs are mirror images across the geodesic
        // ab; the one left of it is traversed with curvature -kt.
        if (std::abs(arc.kappa + side * kt) < 1e-9) return arc;
    }
    throw std::runtime_error("arc_through: no arc matches the requested side");
}

// Arc starting at p with unit tangent t and signed hyperbolic curvature
// kappa, extended over a euclidean sweep/length.  Used by path generators.
inline CurvatureArc arc_from_start(Model model, const cpx& p, const cpx& t,
                                   double kappa, double extent) {
    cpx tu = t / std::abs(t);
    cpx n = cpx(0, 1) * tu;  // left normal
    double kappa_e;
    if (model == Model::Disk) {
        kappa_e = (kappa + 2.0 * dot(p, n)) / (1.0 - std::norm(p));
    } else {
        kappa_e = (kappa - 2.0 * n.imag()) / (2.0 * p.imag());
    }
    if (std::abs(kappa_e) < 1e-12) {
        return segment_arc(model, p, p + extent * tu);
    }
    double R = 1.0 / std::abs(kappa_e);
    cpx center = p + n / kappa_e;
    bool ccw = kappa_e > 0.0;
    double t0 = std::arg(p - center);
    double dt = (ccw ? 1.0 : -1.0) * extent;
    cpx end = center + std::polar(R, t0 + dt);
    return make_arc(model, GeneralizedCircle::circle(center, R), p, end, ccw);
}

// Transports an arc by a Moebius map between models; the traversal sense of
// the image is fixed by an interior point of the source arc.
inline CurvatureArc transport_arc(const CurvatureArc& arc, const MoebiusMap& m,
                                  Model target_model) {
    GeneralizedCircle image = mobius_map_circle(m, arc.support);
    cpx s = m.apply(arc.start);
    cpx e = m.apply(arc.end);
    cpx mid = m.apply(arc.point_at(0.5));
    if (!is_finite(s) || !is_finite(e) || !is_finite(mid))
        throw std::runtime_error("transport_arc: arc passes through the pole");
    if (image.is_line()) return make_arc(target_model, image, s, e, true);
    for (bool ccw : {true, false}) {
        CurvatureArc cand = make_arc(target_model, image, s, e, ccw);
        if (cand.support.boundary_distance(mid) < 1e-7) {
            // Interior point must lie on the traversed sub-arc.
            double t0 = std::arg(s - image.center);
            double tm = std::arg(mid - image.center);
            double fm = ccw ? tm - t0 : t0 - tm;
            while (fm < 0.0) fm += 2.0 * M_PI;
            if (fm <= cand.sweep() + 1e-9) return cand;
        }
    }
    throw std::runtime_error("transport_arc: could not orient image arc");
}

}  // namespace horoconvex
