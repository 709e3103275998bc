#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "horoconvex/circle.hpp"
#include "horoconvex/complex_util.hpp"
#include "horoconvex/horodisk.hpp"
#include "horoconvex/mobius.hpp"

namespace horoconvex {

// A horo-convex free region: the unit disk minus finitely many closed
// horodisks.  The scene also carries the half-plane transport used by the
// planner: each obstacle maps to a circle tangent to the real axis, and an
// enlarged "covering" copy of each crosses the axis.
struct ObstacleScene {
    std::vector<Horodisk> obstacles;          // disk model, Re-ordered in H
    MoebiusMap to_halfplane = MoebiusMap::identity();  // disk -> upper half-plane
    std::vector<GeneralizedCircle> tangent_circles;  // H images, Im c = R
    double epsilon = 0.0;                     // default enlargement
    std::vector<GeneralizedCircle> covering;  // radius + epsilon, crossing

    bool in_free_region(const cpx& z, double margin = 0.0) const {
        if (std::abs(z) >= 1.0) return false;
        for (const Horodisk& h : obstacles)
            if (std::abs(z - h.center()) < h.radius + margin) return false;
        return true;
    }
};

namespace detail {

// Minimal euclidean gap between the half-plane circles (may be negative when
// they overlap).
inline double min_pairwise_gap(const std::vector<GeneralizedCircle>& circles) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < circles.size(); ++i)
        for (size_t j = i + 1; j < circles.size(); ++j)
            best = std::min(best, std::abs(circles[i].center - circles[j].center) -
                                      circles[i].radius - circles[j].radius);
    return best;
}

inline std::vector<GeneralizedCircle> enlarge_circles(
    const std::vector<GeneralizedCircle>& circles, double eps) {
    std::vector<GeneralizedCircle> out;
    out.reserve(circles.size());
    for (const auto& c : circles)
        out.push_back(GeneralizedCircle::circle(c.center, c.radius + eps));
    return out;
}

}  // namespace detail

// Builds the scene.  Rejects nested obstacles.  The disk-to-half-plane map is
// tau composed with the rotation that sends the midpoint of the widest gap
// between obstacle tangency directions to 1, so no tangency maps to infinity.
inline ObstacleScene build_scene(std::vector<Horodisk> obstacles) {
    for (size_t i = 0; i < obstacles.size(); ++i) {
        for (size_t j = 0; j < obstacles.size(); ++j) {
            if (i == j) continue;
            double sep = std::abs(obstacles[i].center() - obstacles[j].center());
            if (sep <= obstacles[j].radius - obstacles[i].radius + 1e-12)
                throw std::invalid_argument("build_scene: nested obstacles");
        }
    }
    double rot = M_PI;  // no obstacles: send -1 to 1, pole away from origin
    if (!obstacles.empty()) {
        std::vector<double> angles;
        for (const Horodisk& h : obstacles) angles.push_back(std::arg(h.tangency));
        std::sort(angles.begin(), angles.end());
        double best_gap = angles.front() + 2.0 * M_PI - angles.back();
        double mid = 0.5 * (angles.back() + angles.front() + 2.0 * M_PI);
        for (size_t i = 0; i + 1 < angles.size(); ++i) {
            double gap = angles[i + 1] - angles[i];
            if (gap > best_gap) {
                best_gap = gap;
                mid = 0.5 * (angles[i] + angles[i + 1]);
            }
        }
        rot = -mid;  // rotate gap midpoint onto +1
    }
    ObstacleScene scene;
    scene.to_halfplane = MoebiusMap::disk_to_halfplane().compose(
        MoebiusMap::rotation(rot));
    scene.obstacles = std::move(obstacles);
    for (const Horodisk& h : scene.obstacles) {
        GeneralizedCircle img = mobius_map_circle(scene.to_halfplane, h.boundary());
        if (!img.is_circle())
            throw std::runtime_error("build_scene: obstacle tangency at infinity");
        scene.tangent_circles.push_back(img);
    }
    // Order everything by ascending Re of the half-plane center.
    std::vector<size_t> order(scene.tangent_circles.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        return scene.tangent_circles[i].center.real() <
               scene.tangent_circles[j].center.real();
    });
    std::vector<Horodisk> obs;
    std::vector<GeneralizedCircle> tc;
    for (size_t i : order) {
        obs.push_back(scene.obstacles[i]);
        tc.push_back(scene.tangent_circles[i]);
    }
    scene.obstacles = std::move(obs);
    scene.tangent_circles = std::move(tc);

    scene.epsilon =
        0.25 * std::min(1.0, detail::min_pairwise_gap(scene.tangent_circles));
    if (scene.epsilon <= 0.0) scene.epsilon = 0.0;
    scene.covering = detail::enlarge_circles(scene.tangent_circles, scene.epsilon);
    return scene;
}

// The obstacle whose boundary passes through omega; it supports the free
// region there, being disjoint from it by construction.
inline Horodisk supporting_horodisk(const ObstacleScene& scene, const cpx& omega,
                                    double tol = 1e-10) {
    if (!in_unit_disk(omega))
        throw std::domain_error("supporting_horodisk: point not in the disk");
    for (const Horodisk& h : scene.obstacles)
        if (std::abs(std::abs(omega - h.center()) - h.radius) <= tol) return h;
    throw std::domain_error("supporting_horodisk: point not on an obstacle boundary");
}

}  // namespace horoconvex
