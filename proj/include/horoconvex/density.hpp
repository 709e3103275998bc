#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "horoconvex/complex_util.hpp"
#include "horoconvex/horodisk.hpp"
#include "horoconvex/metric.hpp"
#include "horoconvex/mobius.hpp"
#include "horoconvex/numeric.hpp"

namespace horoconvex {

// Density of the horizontal strip {|Im w - c| < K pi/2} relative to the
// metric |dw| lambda(w).
inline double strip_density(const cpx& w, double K, double c) {
    if (!(K > 0.0)) throw std::invalid_argument("strip_density: K must be positive");
    double y = w.imag() - c;
    if (!(std::abs(y) < K * M_PI / 2.0))
        throw std::domain_error("strip_density: point outside the strip");
    return 1.0 / (2.0 * K * std::cos(y / K));
}

// Sharp lower bound for the density of a horo-convex domain at hyperbolic
// boundary distance d; equality holds exactly on horo-crescents.
inline double lower_bound(double d) {
    if (!(d > 0.0)) throw std::domain_error("lower_bound: d must be positive");
    double x = M_PI * std::exp(-2.0 * d);
    return x / std::sin(x);
}

// The same bound expressed through the pseudo-hyperbolic distance e = tanh d.
inline double lower_bound_pseudo(double e) {
    if (!(e > 0.0 && e < 1.0))
        throw std::domain_error("lower_bound_pseudo: e must be in (0,1)");
    double x = M_PI * (1.0 - e) / (1.0 + e);
    return x / std::sin(x);
}

// h(t) = (e^{2t}/pi) sin(pi/e^{2t}): reciprocal of the bound, strictly
// increasing from 0 onto (0,1).
inline double h(double t) {
    if (!(t > 0.0)) throw std::domain_error("h: t must be positive");
    double x = M_PI * std::exp(-2.0 * t);
    return std::sin(x) / x;
}

inline double h_inverse(double y) {
    if (!(y > 0.0 && y < 1.0))
        throw std::domain_error("h_inverse: y must be in (0,1)");
    // h is increasing; bracket then bisect.
    double lo = 1e-9, hi = 1.0;
    while (h(hi) < y) hi *= 2.0;
    return bisect_root([y](double t) { return h(t) - y; }, lo, hi, 1e-14);
}

// Density of a horo-crescent (the disk minus a closed horodisk), evaluated
// both by the closed form in the boundary distance and by transporting the
// strip density through the normalizing map; the two must agree.
inline double horocrescent_density(const cpx& z,
                                   const Horodisk& hole = Horodisk(cpx(1, 0), 0.5)) {
    double d = distance_to_horocycle(z, hole);  // throws if outside the crescent
    if (d <= 0.0)
        throw std::domain_error("horocrescent_density: point on the horocycle");
    double closed_form = lower_bound(d);

    // Transport: w = tau(z / zeta) * r/(1-r) maps the crescent onto the strip
    // {0 < Im w < 1}; chain rule against the disk density.
    cpx u = z / hole.tangency;
    double scale = hole.radius / (1.0 - hole.radius);
    cpx w = MoebiusMap::disk_to_halfplane().apply(u) * scale;
    double dw = scale * 2.0 / std::norm(1.0 - u);  // |d w / d z|
    double transported = strip_density(w, 1.0 / M_PI, 0.5) * dw / disk_density(z);
    if (std::abs(transported - closed_form) > 1e-10 * std::max(1.0, closed_form))
        throw std::runtime_error("horocrescent_density: dual evaluations disagree");
    return closed_form;
}

// Density of a lens E(a,b) via the exact conformal chain: the Moebius map
// (w-a)/(w-b) sends the lens to a sector at 0, a power map opens it to a
// half-plane; derivatives tracked through the chain.
inline double lens_density(const Lens& L, const cpx& z) {
    if (!L.contains(z))
        throw std::domain_error("lens_density: point outside the lens");
    auto sigma = [&](const cpx& w) { return (w - L.a) / (w - L.b); };

    // Ray angle of each boundary arc: image of the arc midpoint (the arc of
    // one horocycle inside the other horodisk).
    auto arc_angle = [&](const Horodisk& own, const Horodisk& other, cpx* mid_out) {
        cpx c = own.center();
        double ta = std::arg(L.a - c), tb = std::arg(L.b - c);
        for (double half : {0.5 * wrap_angle(tb - ta), 0.5 * wrap_angle(tb - ta) + M_PI}) {
            cpx mid = c + std::polar(own.radius, ta + half);
            if (other.contains(mid)) {
                *mid_out = mid;
                return std::arg(sigma(mid));
            }
        }
        throw std::runtime_error("lens_density: degenerate lens boundary");
    };
    cpx mid1, mid2;
    double t1 = arc_angle(L.hplus, L.hminus, &mid1);
    double t2 = arc_angle(L.hminus, L.hplus, &mid2);

    // Orient the sector (t1, t1 + opening) counterclockwise so it contains
    // the image of an interior point (the lens is convex).
    cpx z0 = 0.5 * (mid1 + mid2);
    auto ccw_from = [](double from, double to) {
        double d = to - from;
        while (d <= 0.0) d += 2.0 * M_PI;
        while (d > 2.0 * M_PI) d -= 2.0 * M_PI;
        return d;
    };
    double opening = ccw_from(t1, t2);
    if (ccw_from(t1, std::arg(sigma(z0))) > opening) {
        std::swap(t1, t2);
        opening = 2.0 * M_PI - opening;
    }

    double p = M_PI / opening;
    double phi = ccw_from(t1, std::arg(sigma(z)));
    cpx s = sigma(z);
    double ds = std::abs(L.a - L.b) / std::norm(z - L.b);  // |sigma'(z)|
    // Half-plane density pulled back through rot * (e^{-i t1} sigma)^p.
    double lambda = p * ds / (2.0 * std::abs(s) * std::sin(p * phi));
    return lambda / disk_density(z);
}

struct DensitySample {
    cpx z;
    double nu = 0.0, d = 0.0, e = 0.0;
};

// Evaluates (nu, d, e) over one of the supported horo-convex domains.
class DensityEvaluator {
  public:
    static DensityEvaluator horocrescent(Horodisk hole = Horodisk(cpx(1, 0), 0.5)) {
        DensityEvaluator ev;
        ev.kind_ = Kind::Crescent;
        ev.hole_ = std::make_shared<Horodisk>(hole);
        return ev;
    }
    static DensityEvaluator lens_domain(Lens L) {
        DensityEvaluator ev;
        ev.kind_ = Kind::LensDomain;
        ev.lens_ = std::make_shared<Lens>(L);
        return ev;
    }
    // Domain m(inner domain); densities and distances are Moebius invariant.
    static DensityEvaluator transported(DensityEvaluator inner, MoebiusMap m) {
        DensityEvaluator ev;
        ev.kind_ = Kind::Transported;
        ev.inner_ = std::make_shared<DensityEvaluator>(std::move(inner));
        ev.back_ = std::make_shared<MoebiusMap>(m.inverse());
        return ev;
    }

    bool contains(const cpx& z) const {
        switch (kind_) {
            case Kind::Crescent:
                return in_unit_disk(z) && !hole_->contains(z) &&
                       !hole_->on_boundary(z, 1e-12);
            case Kind::LensDomain:
                return L_contains(z);
            default:
                return inner_->contains(back_->apply(z));
        }
    }

    DensitySample evaluate(const cpx& z) const {
        switch (kind_) {
            case Kind::Crescent: {
                DensitySample s;
                s.z = z;
                s.d = distance_to_horocycle(z, *hole_);
                s.e = std::tanh(s.d);
                s.nu = horocrescent_density(z, *hole_);
                return s;
            }
            case Kind::LensDomain: {
                DensitySample s;
                s.z = z;
                s.d = std::min(distance_to_horocycle_two_sided(z, lens_->hplus),
                               distance_to_horocycle_two_sided(z, lens_->hminus));
                s.e = std::tanh(s.d);
                s.nu = lens_density(*lens_, z);
                return s;
            }
            default: {
                DensitySample s = inner_->evaluate(back_->apply(z));
                s.z = z;
                return s;
            }
        }
    }

  private:
    enum class Kind { Crescent, LensDomain, Transported };
    Kind kind_ = Kind::Crescent;
    std::shared_ptr<Horodisk> hole_;
    std::shared_ptr<Lens> lens_;
    std::shared_ptr<DensityEvaluator> inner_;
    std::shared_ptr<MoebiusMap> back_;

    bool L_contains(const cpx& z) const {
        return lens_->contains(z) && !lens_->hplus.on_boundary(z, 1e-12) &&
               !lens_->hminus.on_boundary(z, 1e-12);
    }
};

struct BoundCertificate {
    std::vector<DensitySample> samples;  // usable samples only
    std::vector<double> ratios;          // nu / lower_bound(d), same order
    double min_ratio = 0.0;
    cpx argmin;
    int skipped = 0;  // samples outside the domain
};

// Ratio of the density to the sharp bound on a sample set; the certificate
// that the sharp lower bound holds (min_ratio >= 1 up to noise, exactly 1 on
// horo-crescents, strictly above 1 on lenses).
inline BoundCertificate verify_density_bound(const DensityEvaluator& ev,
                                        const std::vector<cpx>& points) {
    BoundCertificate cert;
    for (const cpx& z : points) {
        if (!ev.contains(z)) {
            ++cert.skipped;
            continue;
        }
        DensitySample s = ev.evaluate(z);
        if (!(s.d > 0.0)) {
            ++cert.skipped;
            continue;
        }
        double ratio = s.nu / lower_bound(s.d);
        cert.samples.push_back(s);
        cert.ratios.push_back(ratio);
        if (cert.samples.size() == 1 || ratio < cert.min_ratio) {
            cert.min_ratio = ratio;
            cert.argmin = z;
        }
    }
    if (cert.samples.empty())
        throw std::invalid_argument("verify_density_bound: no usable samples");
    return cert;
}

struct ScanConstants {
    double g_min = 0.0, g_argmin = 0.0;  // min of g(t) = t/h(t)
    double s_min = 0.0, s_argmin = 0.0;  // min of the pseudo-distance form
};

// Numerical constants behind the C and C' estimates: minimum of
// g(t) = t / h(t) and of s * lower_bound_pseudo(s).
inline ScanConstants scan_constants() {
    ScanConstants out;
    auto g = [](double t) { return t / h(t); };
    auto sform = [](double s) { return s * lower_bound_pseudo(s); };
    auto [gt, gv] = grid_golden_min(g, 1e-6, 5.0, 10000, 1e-10);
    auto [st, sv] = grid_golden_min(sform, 1e-6, 1.0 - 1e-9, 10000, 1e-10);
    out.g_argmin = gt;
    out.g_min = gv;
    out.s_argmin = st;
    out.s_min = sv;
    return out;
}

// Analytic map with an exact derivative, built by composing library pieces.
struct MapJet {
    cpx value, deriv;
};

class AnalyticMap {
  public:
    using Fn = std::function<MapJet(const cpx&)>;

    explicit AnalyticMap(Fn fn) : fn_(std::move(fn)) {}

    static AnalyticMap mobius(const MoebiusMap& m) {
        return AnalyticMap([m](const cpx& z) {
            return MapJet{m.apply(z), m.derivative(z)};
        });
    }
    // G: disk onto the strip {0 < Im < 1}.
    static AnalyticMap disk_to_strip() {
        return AnalyticMap([](const cpx& z) {
            cpx value = std::log((1.0 + z) / (1.0 - z)) / M_PI + cpx(0, 0.5);
            cpx deriv = 2.0 / (M_PI * (1.0 - z * z));
            return MapJet{value, deriv};
        });
    }
    static AnalyticMap power(double p) {
        return AnalyticMap([p](const cpx& z) {
            cpx value = std::pow(z, p);
            return MapJet{value, p * value / z};
        });
    }
    static AnalyticMap scale(const cpx& c) {
        return AnalyticMap([c](const cpx& z) { return MapJet{c * z, c}; });
    }

    AnalyticMap after(const AnalyticMap& inner) const {
        Fn outer = fn_;
        Fn in = inner.fn_;
        return AnalyticMap([outer, in](const cpx& z) {
            MapJet a = in(z);
            MapJet b = outer(a.value);
            return MapJet{b.value, b.deriv * a.deriv};
        });
    }

    MapJet operator()(const cpx& z) const { return fn_(z); }

  private:
    Fn fn_;
};

// Conformal map of the disk onto the crescent behind the horodisk at 1 of
// radius 1/2: strip map followed by the inverse half-plane map.  Sends 0 to
// -1/3 with |derivative| 16/(9 pi).
inline AnalyticMap crescent_conformal() {
    return AnalyticMap::mobius(MoebiusMap::disk_to_halfplane().inverse())
        .after(AnalyticMap::disk_to_strip());
}

struct SchwarzPickReport {
    double lhs = 0.0, rhs = 0.0, slack = 0.0;
    double covering_radius = 0.0;  // h^{-1} of the lhs at 0
};

// The contraction bound for an analytic f from the disk into the evaluator's
// domain: (1-|z|^2)|f'(z)| / (1-|f(z)|^2) <= h(d(f(z))), with equality for
// the conformal map onto a crescent.
inline SchwarzPickReport schwarz_pick_check(const AnalyticMap& f,
                                            const DensityEvaluator& ev,
                                            const cpx& z) {
    MapJet jet = f(z);
    if (!ev.contains(jet.value))
        throw std::domain_error("schwarz_pick_check: f(z) outside the domain");
    SchwarzPickReport rep;
    rep.lhs = (1.0 - std::norm(z)) * std::abs(jet.deriv) /
              (1.0 - std::norm(jet.value));
    rep.rhs = h(ev.evaluate(jet.value).d);
    rep.slack = rep.rhs - rep.lhs;

    MapJet at0 = f(cpx(0, 0));
    double lhs0 = std::abs(at0.deriv) / (1.0 - std::norm(at0.value));
    rep.covering_radius = h_inverse(std::min(lhs0, 1.0 - 1e-15));
    return rep;
}

}  // namespace horoconvex
