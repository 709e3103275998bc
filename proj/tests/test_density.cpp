#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "horoconvex/density.hpp"
#include "oracles.hpp"

using namespace horoconvex;

namespace {

// z = -tanh(t) lies in the crescent behind the horodisk at 1 of radius 1/2
// at boundary distance exactly t.
cpx crescent_point(double t) { return cpx(-std::tanh(t), 0.0); }

}  // namespace

TEST_CASE("strip density values and symmetry") {
    double K = 1.0 / M_PI, c = 0.5;
    CHECK(strip_density(cpx(0.3, 0.5), K, c) == Catch::Approx(M_PI / 2).epsilon(1e-12));
    for (double t : {0.1, 0.25, 0.4}) {
        CHECK(strip_density(cpx(0, 0.5 + t), K, c) ==
              Catch::Approx(strip_density(cpx(1.7, 0.5 - t), K, c)).epsilon(1e-12));
    }
    CHECK(strip_density(cpx(0, 1.0 - 1e-9), K, c) > 1e7);
    CHECK_THROWS_AS(strip_density(cpx(0, 1.5), K, c), std::domain_error);
}

TEST_CASE("horo-crescent density spot values") {
    CHECK(horocrescent_density(cpx(-1.0 / 3.0, 0)) ==
          Catch::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(horocrescent_density(cpx(-0.5, 0)) ==
          Catch::Approx(2.0 * M_PI / (3.0 * std::sqrt(3.0))).epsilon(1e-12));
    // Deep in the crescent the density decays to 1.
    CHECK(horocrescent_density(cpx(-0.9999, 0)) == Catch::Approx(1.0).margin(1e-5));
    CHECK_THROWS_AS(horocrescent_density(cpx(0.7, 0)), std::domain_error);
}

TEST_CASE("dual evaluation agrees on random crescent points") {
    // horocrescent_density throws if the closed form and the strip transport
    // drift beyond 1e-10; exercising it on many points is the agreement test.
    oracles::Rng rng(991);
    Horodisk hole(cpx(1, 0), 0.5);
    int used = 0;
    while (used < 1000) {
        cpx z = rng.disk_point(0.999);
        if (hole.contains(z) || hole.on_boundary(z, 1e-6)) continue;
        double nu = 0.0;
        REQUIRE_NOTHROW(nu = horocrescent_density(z));
        CHECK(nu >= 1.0 - 1e-12);
        ++used;
    }
}

TEST_CASE("lower bound values, monotonicity, asymptote") {
    CHECK(lower_bound(0.5 * std::log(2.0)) == Catch::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(lower_bound(0.5 * std::log(3.0)) ==
          Catch::Approx(2.0 * M_PI / (3.0 * std::sqrt(3.0))).epsilon(1e-12));
    CHECK(std::abs(lower_bound(10.0) - 1.0) < 1e-12);
    double prev = lower_bound(1e-3);
    for (double d = 0.01; d < 4.0; d += 0.01) {
        double cur = lower_bound(d);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(lower_bound(0.0), std::domain_error);
}

TEST_CASE("pseudo-distance form of the bound") {
    CHECK(lower_bound_pseudo(1.0 / 3.0) == Catch::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(lower_bound_pseudo(1.0 - 1e-9) == Catch::Approx(1.0).margin(1e-6));
    CHECK(lower_bound_pseudo(1e-6) > 1e5);
    oracles::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        double d = rng.uniform(0.01, 3.0);
        CHECK(lower_bound_pseudo(std::tanh(d)) ==
              Catch::Approx(lower_bound(d)).epsilon(1e-12));
    }
}

TEST_CASE("h and its inverse") {
    CHECK(h(0.5 * std::log(2.0)) == Catch::Approx(2.0 / M_PI).epsilon(1e-12));
    CHECK(h(0.5 * std::log(3.0)) ==
          Catch::Approx(3.0 * std::sqrt(3.0) / (2.0 * M_PI)).epsilon(1e-12));
    oracles::Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        double t = rng.uniform(0.01, 4.0);
        CHECK(h(t) * lower_bound(t) == Catch::Approx(1.0).epsilon(1e-12));
        CHECK(h_inverse(h(t)) == Catch::Approx(t).margin(1e-10));
    }
    double prev = h(1e-3);
    for (double t = 0.01; t < 4.0; t += 0.01) {
        double cur = h(t);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK_THROWS_AS(h_inverse(1.5), std::domain_error);
}

TEST_CASE("scanned constants match the reported readings") {
    ScanConstants sc = scan_constants();
    CHECK(std::abs(sc.g_min - 0.48) < 0.005);
    CHECK(std::abs(sc.g_argmin - 0.11) < 0.01);
    CHECK(std::abs(sc.s_min - 0.48) < 0.005);
    CHECK(std::abs(sc.s_argmin - 0.12) < 0.01);
}

TEST_CASE("infimum of d*nu and e*nu over the crescent match the scans") {
    ScanConstants sc = scan_constants();
    DensityEvaluator ev = DensityEvaluator::horocrescent();
    auto dnu = [&](double t) {
        DensitySample s = ev.evaluate(crescent_point(t));
        return s.d * s.nu;
    };
    auto enu = [&](double t) {
        DensitySample s = ev.evaluate(crescent_point(t));
        return s.e * s.nu;
    };
    auto [td, vd] = grid_golden_min(dnu, 1e-3, 2.0, 4000, 1e-12);
    auto [te, vev] = grid_golden_min(enu, 1e-3, 2.0, 4000, 1e-12);
    (void)td;
    (void)te;
    CHECK(std::abs(vd - sc.g_min) < 1e-6);
    CHECK(std::abs(vev - sc.s_min) < 1e-6);
}

TEST_CASE("lens density: equivariance and blow-up") {
    Lens L = lens(cpx(1.0 / 3.0, 0), cpx(-1.0 / 3.0, 0));
    double at0 = lens_density(L, cpx(0, 0));
    CHECK(at0 >= 1.0);

    oracles::Rng rng(77);
    for (int i = 0; i < 100; ++i) {
        MoebiusMap m = rng.disk_automorphism();
        Lens mL = lens(m.apply(L.a), m.apply(L.b));
        cpx z;
        do {
            z = rng.disk_point(0.3);
        } while (!L.contains(z, -1e-6));
        CHECK(lens_density(mL, m.apply(z)) ==
              Catch::Approx(lens_density(L, z)).epsilon(1e-9));
    }
    // Approaching a vertex the density blows up.
    cpx near_a = L.a - cpx(1e-7, 0);
    CHECK(lens_density(L, near_a) > 1e2);
    CHECK_THROWS_AS(lens_density(L, cpx(0, 0.9)), std::domain_error);
}

TEST_CASE("evaluator invariants: nu >= 1 and d = arctanh e") {
    oracles::Rng rng(123);
    DensityEvaluator crescent = DensityEvaluator::horocrescent();
    DensityEvaluator lensev =
        DensityEvaluator::lens_domain(lens(cpx(1.0 / 3.0, 0), cpx(-1.0 / 3.0, 0)));
    DensityEvaluator moved =
        DensityEvaluator::transported(crescent, rng.disk_automorphism());
    int used = 0;
    while (used < 500) {
        cpx z = rng.disk_point(0.98);
        for (const DensityEvaluator* ev : {&crescent, &lensev, &moved}) {
            if (!ev->contains(z)) continue;
            DensitySample s = ev->evaluate(z);
            CHECK(s.nu >= 1.0 - 1e-9);
            CHECK(std::abs(s.d - std::atanh(s.e)) < 1e-12);
            ++used;
        }
    }
}

TEST_CASE("bound certificate: crescent attains equality on radial rays") {
    std::vector<cpx> pts;
    for (int ray = 0; ray < 20; ++ray) {
        double theta = M_PI / 2 + ray * (M_PI / 19.0);  // rays into the crescent
        for (int i = 1; i <= 50; ++i)
            pts.push_back(std::polar(0.95 * i / 51.0, theta));
    }
    REQUIRE(pts.size() == 1000);
    auto cert = verify_density_bound(DensityEvaluator::horocrescent(), pts);
    CHECK((int)cert.samples.size() + cert.skipped == 1000);
    CHECK(cert.min_ratio >= 1.0 - 1e-9);
    CHECK(cert.min_ratio <= 1.0 + 1e-9);
}

TEST_CASE("bound certificate: lens is strictly above the bound") {
    Lens L = lens(cpx(1.0 / 3.0, 0), cpx(-1.0 / 3.0, 0));
    oracles::Rng rng(2024);
    std::vector<cpx> pts;
    // The ratio tends to 1 at smooth boundary points, so the samples keep a
    // small interior margin.
    while (pts.size() < 500) {
        cpx z = rng.disk_point(0.3);
        if (L.contains(z, -0.005)) pts.push_back(z);
    }
    auto cert = verify_density_bound(DensityEvaluator::lens_domain(L), pts);
    CHECK(cert.min_ratio > 1.0 + 1e-3);
    CHECK_THROWS_AS(verify_density_bound(DensityEvaluator::lens_domain(L), {}),
                    std::invalid_argument);
}

TEST_CASE("conformal crescent map: equality in the contraction bound") {
    AnalyticMap f = crescent_conformal();
    MapJet at0 = f(cpx(0, 0));
    CHECK(std::abs(at0.value - cpx(-1.0 / 3.0, 0)) < 1e-12);
    CHECK(std::abs(at0.deriv) == Catch::Approx(16.0 / (9.0 * M_PI)).epsilon(1e-12));

    DensityEvaluator ev = DensityEvaluator::horocrescent();
    SchwarzPickReport rep = schwarz_pick_check(f, ev, cpx(0, 0));
    CHECK(rep.lhs == Catch::Approx(2.0 / M_PI).epsilon(1e-10));
    CHECK(rep.rhs == Catch::Approx(2.0 / M_PI).epsilon(1e-10));
    CHECK(std::abs(rep.slack) < 1e-10);
    CHECK(rep.covering_radius == Catch::Approx(0.5 * std::log(2.0)).margin(1e-8));

    // Equality holds at every point for the conformal map onto the crescent.
    oracles::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        cpx z = rng.disk_point(0.9);
        SchwarzPickReport r = schwarz_pick_check(f, ev, z);
        CHECK(std::abs(r.slack) < 1e-9);
    }
}

TEST_CASE("shrunk map gives strict slack") {
    AnalyticMap f = crescent_conformal().after(AnalyticMap::scale(cpx(0.5, 0)));
    DensityEvaluator ev = DensityEvaluator::horocrescent();
    SchwarzPickReport rep = schwarz_pick_check(f, ev, cpx(0, 0));
    CHECK(rep.slack > 1e-3);
    CHECK(rep.lhs < 2.0 / M_PI);
}
