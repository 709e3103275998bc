#include <catch2/catch_amalgamated.hpp>

#include "horoconvex/path.hpp"
#include "horoconvex/tangent_lines.hpp"
#include "random_paths.hpp"

using namespace horoconvex;

TEST_CASE("arc_through: geodesic through the origin") {
    auto arc = arc_through({1.0 / 3, 0}, {-1.0 / 3, 0}, 0.0, +1);
    CHECK(arc.support.is_line());
    CHECK(arc.kappa == Catch::Approx(0.0).margin(1e-12));
    CHECK(std::abs(arc.point_at(0.5)) < 1e-12);
}

TEST_CASE("arc_through: geodesic support is orthogonal to the unit circle") {
    auto arc = arc_through({0.3, 0.2}, {-0.1, 0.5}, 0.0, +1);
    REQUIRE(arc.support.is_circle());
    // Orthogonality: |c|^2 = 1 + R^2.
    CHECK(std::norm(arc.support.center) ==
          Catch::Approx(1.0 + arc.support.radius * arc.support.radius)
              .epsilon(1e-10));
    CHECK(std::abs(arc.kappa) < 1e-9);
}

TEST_CASE("arc_through: kappa near 2 approaches the horodisk pair") {
    cpx a{1.0 / 3, 0}, b{-1.0 / 3, 0};
    auto [hp, hm] = horodisks_through_pair(a, b);
    auto up = arc_through(a, b, 2.0 - 1e-7, +1);
    auto dn = arc_through(a, b, 2.0 - 1e-7, -1);
    double d1 = std::min(std::abs(up.support.center - hp.center()),
                         std::abs(up.support.center - hm.center()));
    double d2 = std::min(std::abs(dn.support.center - hp.center()),
                         std::abs(dn.support.center - hm.center()));
    CHECK(d1 < 1e-5);
    CHECK(d2 < 1e-5);
    // The two sides pick the two different limit circles.
    CHECK(std::abs(up.support.center - dn.support.center) > 0.5);
}

TEST_CASE("arc_through: opposite sides give mirror arcs") {
    cpx a{1.0 / 3, 0}, b{-1.0 / 3, 0};
    auto up = arc_through(a, b, 1.5, +1);
    auto dn = arc_through(a, b, 1.5, -1);
    // a, b real: mirror across the geodesic ab means complex conjugation.
    CHECK(std::abs(up.point_at(0.5) - std::conj(dn.point_at(0.5))) < 1e-10);
    CHECK(std::abs(up.kappa + dn.kappa) < 1e-10);
}

TEST_CASE("arc_through: requested curvature is realized") {
    oracles::Rng rng(66001);
    int done = 0;
    while (done < 300) {
        cpx a = rng.disk_point(0.85), b = rng.disk_point(0.85);
        if (std::abs(a - b) < 0.05) continue;
        double kt = rng.uniform(0.0, 1.95);
        int side = rng.uniform(0, 1) < 0.5 ? +1 : -1;
        auto arc = arc_through(a, b, kt, side);
        CHECK(std::abs(std::abs(arc.kappa) - kt) < 1e-9);
        CHECK(std::abs(arc.start - a) < 1e-12);
        CHECK(std::abs(arc.end - b) < 1e-12);
        // side=+1 means the arc sits left of the geodesic, i.e. the
        // traversal curves to the right: kappa = -side * kt.
        if (kt > 1e-9) CHECK(std::abs(arc.kappa + side * kt) < 1e-9);
        ++done;
    }
}

TEST_CASE("turning_angle examples") {
    auto circle = GeneralizedCircle::circle({0, 0}, 0.5);
    AdmissiblePath full;
    full.pieces.push_back(make_arc(Model::Disk, circle, {0.5, 0}, {0.5, 0}, true));
    CHECK(turning_angle(full) == Catch::Approx(2.0 * M_PI).epsilon(1e-12));

    AdmissiblePath half;
    half.pieces.push_back(make_arc(Model::Disk, circle, {0.5, 0}, {-0.5, 0}, true));
    CHECK(turning_angle(half) == Catch::Approx(M_PI).epsilon(1e-12));

    AdmissiblePath diam;
    diam.pieces.push_back(segment_arc(Model::Disk, {-0.5, 0}, {0.5, 0}));
    CHECK(turning_angle(diam) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("turning additivity and reversal antisymmetry") {
    oracles::Rng rng(66002);
    int done = 0;
    while (done < 300) {
        auto path = oracles::random_admissible_chain(rng, 2, 4);
        if (!path) continue;
        // Split into a prefix and suffix chain; Eq-style additivity.
        size_t cut = 1 + (size_t)(rng.uniform(0.0, 1.0) * (path->pieces.size() - 1));
        cut = std::min(cut, path->pieces.size() - 1);
        AdmissiblePath pre, suf;
        pre.pieces.assign(path->pieces.begin(), path->pieces.begin() + cut);
        suf.pieces.assign(path->pieces.begin() + cut, path->pieces.end());
        double vertex = wrap_angle(std::arg(suf.pieces.front().tangent_at(0.0)) -
                                   std::arg(pre.pieces.back().tangent_at(1.0)));
        CHECK(std::abs(turning_angle(*path) -
                       (turning_angle(pre) + turning_angle(suf) + vertex)) < 1e-10);
        CHECK(std::abs(turning_angle(path->reversed()) + turning_angle(*path)) <
              1e-10);
        ++done;
    }
}

TEST_CASE("validate_admissible basics") {
    AdmissiblePath single;
    single.pieces.push_back(segment_arc(Model::Disk, {0.2, 0.1}, {-0.3, 0.2}));
    CHECK(validate_admissible(single).ok);

    // Two segments with a 10 degree break at the junction.
    AdmissiblePath broken;
    broken.pieces.push_back(segment_arc(Model::Disk, {-0.4, 0}, {0, 0}));
    broken.pieces.push_back(
        segment_arc(Model::Disk, {0, 0}, cpx{0, 0} + 0.4 * std::polar(1.0, 10.0 * M_PI / 180.0)));
    auto diag = validate_admissible(broken);
    CHECK_FALSE(diag.ok);
    CHECK(diag.reason == "tangent break at junction");

    // Piece on a support interior to the disk: |kappa| > 2.
    AdmissiblePath interior;
    interior.pieces.push_back(make_arc(
        Model::Disk, GeneralizedCircle::circle({0, 0}, 0.5), {0.5, 0}, {0, 0.5}, true));
    auto diag2 = validate_admissible(interior);
    CHECK_FALSE(diag2.ok);
    CHECK(diag2.reason == "curvature outside (-2,2)");

    AdmissiblePath empty;
    CHECK_FALSE(validate_admissible(empty).ok);
}

TEST_CASE("validate_admissible rejects self-intersections") {
    // Three connected segments, the last cutting back through the first.
    AdmissiblePath path;
    path.pieces.push_back(segment_arc(Model::Disk, {-0.4, -0.1}, {0.4, 0.1}));
    path.pieces.push_back(segment_arc(Model::Disk, {0.4, 0.1}, {0.3, 0.3}));
    path.pieces.push_back(segment_arc(Model::Disk, {0.3, 0.3}, {-0.3, -0.3}));
    auto diag = validate_admissible(path);
    CHECK_FALSE(diag.ok);
    CHECK(diag.reason == "self-intersection");
}

TEST_CASE("lens containment holds for random admissible arcs and chains") {
    oracles::Rng rng(66003);
    int arcs = 0, chains = 0;
    while (arcs < 700) {
        auto path = oracles::random_admissible_arc(rng);
        if (!path) continue;
        CHECK(path_in_lens(*path));
        ++arcs;
    }
    while (chains < 400) {
        auto path = oracles::random_admissible_chain(rng);
        if (!path) continue;
        if (std::abs(path->start() - path->end()) < 0.02) continue;
        CHECK(path_in_lens(*path));
        ++chains;
    }
}

TEST_CASE("non-admissible chain escapes the lens") {
    cpx a{1.0 / 3, 0}, b{-1.0 / 3, 0}, w{0, 0.8};
    AdmissiblePath chain;
    chain.pieces.push_back(segment_arc(Model::Disk, a, w));
    chain.pieces.push_back(segment_arc(Model::Disk, w, b));
    CHECK_FALSE(validate_admissible(chain).ok);  // tangent break at w
    CHECK_FALSE(path_in_lens(chain));
}

TEST_CASE("horodisk escape and containment over random trials") {
    oracles::Rng rng(66004);
    int done = 0;
    while (done < 1000) {
        std::optional<AdmissiblePath> path =
            rng.uniform(0, 1) < 0.5 ? oracles::random_admissible_arc(rng)
                                    : oracles::random_admissible_chain(rng);
        if (!path) continue;
        cpx zeta = std::polar(1.0, rng.uniform(-M_PI, M_PI));
        Horodisk h(zeta, rng.uniform(0.1, 0.85));
        auto rep = horodisk_escape_check(*path, h);
        CHECK(rep.clean());
        ++done;
    }
}

TEST_CASE("endpoints inside the horodisk keep the whole path inside") {
    Horodisk h({1, 0}, 0.5);
    cpx a{0.5, 0.2}, b{0.5, -0.2};
    for (double kt : {0.0, 0.8, 1.6}) {
        for (int side : {+1, -1}) {
            AdmissiblePath path;
            path.pieces.push_back(arc_through(a, b, kt, side));
            REQUIRE(validate_admissible(path).ok);
            auto rep = horodisk_escape_check(path, h);
            CHECK(rep.endpoints_inside);
            CHECK(rep.clean());
        }
    }
}

TEST_CASE("path disjoint from the horodisk gives a clean report") {
    Horodisk h({1, 0}, 0.2);
    AdmissiblePath path;
    path.pieces.push_back(segment_arc(Model::Disk, {-0.5, 0.1}, {-0.1, -0.3}));
    auto rep = horodisk_escape_check(path, h);
    CHECK(rep.clean());
    CHECK_FALSE(rep.touched_boundary);
}

TEST_CASE("escape check flags a crafted returning chain") {
    // Leaves h through its boundary, comes back and touches it again: not a
    // legal interaction pattern.
    Horodisk h({1, 0}, 0.5);
    cpx on1{0, 0};  // on the boundary
    cpx out{-0.4, 0.3};
    cpx on2 = h.center() + std::polar(h.radius, M_PI * 0.75);
    AdmissiblePath chain;
    chain.pieces.push_back(segment_arc(Model::Disk, on1, out));
    chain.pieces.push_back(segment_arc(Model::Disk, out, on2));
    auto rep = horodisk_escape_check(chain, h);
    CHECK_FALSE(rep.clean());
}

TEST_CASE("admissibility is preserved under disk automorphisms") {
    oracles::Rng rng(66005);
    int done = 0;
    while (done < 150) {
        auto path = oracles::random_admissible_chain(rng);
        if (!path) continue;
        auto m = rng.disk_automorphism();
        AdmissiblePath image;
        image.model = Model::Disk;
        bool ok = true;
        for (const auto& piece : path->pieces) {
            try {
                image.pieces.push_back(transport_arc(piece, m, Model::Disk));
            } catch (const std::exception&) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        CHECK(validate_admissible(image).ok);
        ++done;
    }
}

TEST_CASE("tangent_segment examples") {
    // Upper tangent from an external point.
    auto c = GeneralizedCircle::circle({3, 0}, 1.0);
    auto seg = tangent_segment(cpx{0, 2}, c, TangentKind::Upper);
    CHECK(std::abs(std::abs(seg.p1 - c.center) - 1.0) < 1e-10);
    // Distance from the center to the tangent line equals the radius.
    cpx d = seg.direction();
    CHECK(std::abs(cross(d, c.center - seg.p0)) == Catch::Approx(1.0).epsilon(1e-10));
    // Upper means the disk sits below the travel line (on the right).
    CHECK(cross(d, c.center - seg.p0) < 0.0);

    // Congruent disks: upper outer tangent is y = 1.
    auto c1 = GeneralizedCircle::circle({0, 0}, 1.0);
    auto c2 = GeneralizedCircle::circle({4, 0}, 1.0);
    auto outer = tangent_segment(c1, c2, TangentKind::Upper);
    CHECK(std::abs(outer.p0 - cpx(0, 1)) < 1e-10);
    CHECK(std::abs(outer.p1 - cpx(4, 1)) < 1e-10);

    // Cross tangents pass through the midpoint (2, 0).
    for (auto kind : {TangentKind::UpperCross, TangentKind::LowerCross}) {
        auto crossseg = tangent_segment(c1, c2, kind);
        cpx dir = crossseg.direction();
        CHECK(std::abs(cross(dir, cpx(2, 0) - crossseg.p0)) < 1e-10);
        CHECK(std::abs(std::abs(crossseg.p0 - c1.center) - 1.0) < 1e-10);
        CHECK(std::abs(std::abs(crossseg.p1 - c2.center) - 1.0) < 1e-10);
    }
    // Upper-cross touches the first disk on top.
    auto uc = tangent_segment(c1, c2, TangentKind::UpperCross);
    CHECK(uc.p0.imag() > 0.0);
    CHECK(uc.p1.imag() < 0.0);

    // Overlapping disks admit no cross tangent.
    auto c3 = GeneralizedCircle::circle({1.0, 0}, 1.0);
    CHECK_THROWS_AS(tangent_segment(c1, c3, TangentKind::UpperCross),
                    std::domain_error);
}
