#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "horoconvex/path.hpp"
#include "horoconvex/scene.hpp"

namespace horoconvex {

namespace svg_detail {

// Fixed viewport: disk-model coordinates scaled into a 600x600 canvas with
// the y axis pointing up.
inline double sx(double x) { return 300.0 + 270.0 * x; }
inline double sy(double y) { return 300.0 - 270.0 * y; }

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

inline std::string circle_tag(const cpx& c, double r, const std::string& style) {
    return "<circle cx=\"" + num(sx(c.real())) + "\" cy=\"" + num(sy(c.imag())) +
           "\" r=\"" + num(270.0 * r) + "\" " + style + "/>\n";
}

inline std::string polyline_tag(const std::vector<cpx>& pts,
                                const std::string& color) {
    std::string out = "<polyline fill=\"none\" stroke=\"" + color +
                      "\" stroke-width=\"2\" points=\"";
    for (const cpx& p : pts)
        out += num(sx(p.real())) + "," + num(sy(p.imag())) + " ";
    out += "\"/>\n";
    return out;
}

}  // namespace svg_detail

// Deterministic figure: unit circle, obstacle horodisks, optionally the
// covering disks (mapped back to the disk model), and a path with per-piece
// colors.  Output depends only on the arguments.
inline std::string render_svg(const ObstacleScene& scene,
                              const AdmissiblePath* disk_path = nullptr,
                              bool show_covering = false) {
    using namespace svg_detail;
    static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n";
    out += circle_tag({0, 0}, 1.0, "fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"");
    for (const Horodisk& h : scene.obstacles)
        out += circle_tag(h.center(), h.radius,
                          "fill=\"#d9d9d9\" stroke=\"#888\" stroke-width=\"1\"");
    if (show_covering) {
        MoebiusMap back = scene.to_halfplane.inverse();
        for (const auto& c : scene.covering) {
            GeneralizedCircle img = mobius_map_circle(back, c);
            if (img.is_circle())
                out += circle_tag(img.center, img.radius,
                                  "fill=\"none\" stroke=\"#4a90d9\" "
                                  "stroke-width=\"1\" stroke-dasharray=\"4 3\"");
        }
    }
    if (disk_path) {
        int i = 0;
        for (const auto& piece : disk_path->pieces)
            out += polyline_tag(piece.sample(1e-4, 256), palette[i++ % 6]);
    }
    out += "</svg>\n";
    return out;
}

}  // namespace horoconvex
