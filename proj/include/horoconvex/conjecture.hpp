#pragma once

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

#include "horoconvex/classc.hpp"
#include "horoconvex/density.hpp"

namespace horoconvex {

// Exploratory report on random class-C domains: the boundary midpoint, the
// orthogonality residual of the construction, and e * nu estimates at points
// approaching the midpoint from inside (nu estimated by the horo-crescent
// comparison value at the same boundary distance).  No claim is asserted.
inline std::string conjecture_scan_report(long instances,
                                          unsigned long long seed) {
    if (instances < 1)
        throw std::invalid_argument("conjecture_scan: need at least one instance");
    std::mt19937_64 gen(seed);
    auto uni = [&](double lo, double hi) {
        return lo + (hi - lo) * std::generate_canonical<double, 53>(gen);
    };
    char buf[256];
    std::string out =
        "# idx rho1 rho2 dir_angle midpoint_re midpoint_im residual"
        " e_nu(0.05) e_nu(0.10) e_nu(0.20)\n";
    for (long i = 0; i < instances; ++i) {
        double rho1 = uni(0.4, 1.5);
        double rho2 = uni(0.2, rho1);
        double ang = uni(-M_PI, M_PI);
        ClassCDomain dom = classC_construct(std::polar(1.0, ang), rho2, rho1);
        cpx m = classC_midpoint(dom);
        double residual = std::abs(dom.orthogonality_residual());

        // Step off the concave arc, away from D2, and estimate e * nu via the
        // sharp horo-crescent floor at the same boundary distance.
        cpx outward = (m - dom.d2.euc_center) / std::abs(m - dom.d2.euc_center);
        double est[3];
        double steps[3] = {0.05, 0.10, 0.20};
        for (int k = 0; k < 3; ++k) {
            cpx z = m + steps[k] * outward;
            double d = std::abs(hyp_distance(z, dom.d2.hyp_center) - dom.d2.hyp_radius);
            est[k] = std::tanh(d) * lower_bound(d);
        }
        std::snprintf(buf, sizeof buf,
                      "%ld %.12g %.12g %.12g %.12g %.12g %.3e %.12g %.12g %.12g\n",
                      i, rho1, rho2, ang, m.real(), m.imag(), residual, est[0],
                      est[1], est[2]);
        out += buf;
    }
    return out;
}

}  // namespace horoconvex
