#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace horoconvex {

// Golden-section minimization of a unimodal function on [lo, hi].
// Returns (argmin, min value).
inline std::pair<double, double> golden_section_min(
    const std::function<double(double)>& f, double lo, double hi,
    double xtol = 1e-10, int max_iter = 200) {
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;   // 0.618...
    static const double invphi2 = (3.0 - std::sqrt(5.0)) / 2.0;  // 0.382...
    double a = lo, b = hi;
    double h = b - a;
    double c = a + invphi2 * h;
    double d = a + invphi * h;
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && h > xtol; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            h = b - a;
            c = a + invphi2 * h;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            h = b - a;
            d = a + invphi * h;
            fd = f(d);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

// Minimize f over [lo, hi] by a coarse grid followed by golden-section
// refinement of the best bracket.
inline std::pair<double, double> grid_golden_min(
    const std::function<double(double)>& f, double lo, double hi,
    int grid_points = 10000, double xtol = 1e-10) {
    double best_x = lo, best_f = f(lo);
    double step = (hi - lo) / grid_points;
    for (int i = 1; i <= grid_points; ++i) {
        double x = lo + i * step;
        double fx = f(x);
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    double a = std::max(lo, best_x - step);
    double b = std::min(hi, best_x + step);
    return golden_section_min(f, a, b, xtol);
}

// Bisection root find for continuous f with f(lo), f(hi) of opposite sign.
inline double bisect_root(const std::function<double(double)>& f, double lo,
                          double hi, double xtol = 1e-14, int max_iter = 200) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::invalid_argument("bisect_root: endpoints do not bracket");
    for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace horoconvex
