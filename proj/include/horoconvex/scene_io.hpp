#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "horoconvex/scene.hpp"

namespace horoconvex {

// Text description of a scene: obstacles by tangency angle (degrees) and
// euclidean radius, plus optional query endpoints and sampling directive.
struct SceneFile {
    std::string model = "disk";
    std::vector<std::pair<double, double>> obstacles;  // (angle deg, radius)
    std::optional<std::pair<cpx, cpx>> query;          // disk-model endpoints
    std::optional<std::pair<long, unsigned long long>> sampling;  // count, seed

    bool operator==(const SceneFile& o) const {
        return model == o.model && obstacles == o.obstacles && query == o.query &&
               sampling == o.sampling;
    }
};

namespace io_detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace io_detail

// Line-oriented key-value format:
//   model disk
//   obstacle <angle-degrees> <euclidean-radius>
//   query <ax> <ay> <bx> <by>
//   samples <count> <seed>
// Blank lines and lines starting with # are ignored.
inline SceneFile parse_scene(const std::string& text) {
    SceneFile sf;
    bool saw_model = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("scene line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "model") {
            std::string tag;
            if (!(ls >> tag)) fail("missing model tag");
            if (tag != "disk") fail("unknown model tag: " + tag);
            sf.model = tag;
            saw_model = true;
        } else if (key == "obstacle") {
            double deg, r;
            if (!(ls >> deg >> r)) fail("obstacle needs angle and radius");
            if (!(r > 0.0 && r < 1.0)) fail("obstacle radius must be in (0,1)");
            sf.obstacles.emplace_back(deg, r);
        } else if (key == "query") {
            double ax, ay, bx, by;
            if (!(ls >> ax >> ay >> bx >> by)) fail("query needs four numbers");
            sf.query = {cpx(ax, ay), cpx(bx, by)};
        } else if (key == "samples") {
            long n;
            unsigned long long seed;
            if (!(ls >> n >> seed)) fail("samples needs count and seed");
            if (n < 0) fail("sample count must be nonnegative");
            sf.sampling = {n, seed};
        } else {
            fail("unknown key: " + key);
        }
        std::string rest;
        if (ls >> rest && rest[0] != '#') fail("trailing tokens: " + rest);
    }
    if (!saw_model) throw std::invalid_argument("scene: missing model line");
    return sf;
}

inline std::string serialize_scene(const SceneFile& sf) {
    using io_detail::fmt;
    std::string out = "model " + sf.model + "\n";
    for (const auto& [deg, r] : sf.obstacles)
        out += "obstacle " + fmt(deg) + " " + fmt(r) + "\n";
    if (sf.query)
        out += "query " + fmt(sf.query->first.real()) + " " +
               fmt(sf.query->first.imag()) + " " + fmt(sf.query->second.real()) +
               " " + fmt(sf.query->second.imag()) + "\n";
    if (sf.sampling)
        out += "samples " + std::to_string(sf.sampling->first) + " " +
               std::to_string(sf.sampling->second) + "\n";
    return out;
}

inline ObstacleScene to_obstacle_scene(const SceneFile& sf) {
    std::vector<Horodisk> obstacles;
    for (const auto& [deg, r] : sf.obstacles)
        obstacles.emplace_back(std::polar(1.0, deg * M_PI / 180.0), r);
    return build_scene(std::move(obstacles));
}

}  // namespace horoconvex
