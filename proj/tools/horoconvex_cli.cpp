#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "horoconvex/conjecture.hpp"
#include "horoconvex/density.hpp"
#include "horoconvex/planner.hpp"
#include "horoconvex/scene_io.hpp"
#include "horoconvex/svg.hpp"

using namespace horoconvex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnreachable = 3;
constexpr int kExitVerify = 4;

cpx parse_point(const std::string& s) {
    double x, y;
    char comma;
    std::istringstream in(s);
    if (!(in >> x >> comma >> y) || comma != ',')
        throw std::invalid_argument("point must be given as x,y: " + s);
    return {x, y};
}

SceneFile load_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scene file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << content;
}

std::string describe_piece(const CurvatureArc& p) {
    char buf[256];
    if (p.support.is_line()) {
        std::snprintf(buf, sizeof buf,
                      "segment  (%.12g,%.12g) -> (%.12g,%.12g)  kappa=%.12g",
                      p.start.real(), p.start.imag(), p.end.real(), p.end.imag(),
                      p.kappa);
    } else {
        std::snprintf(buf, sizeof buf,
                      "arc      (%.12g,%.12g) -> (%.12g,%.12g)  kappa=%.12g  "
                      "circle c=(%.12g,%.12g) r=%.12g %s",
                      p.start.real(), p.start.imag(), p.end.real(), p.end.imag(),
                      p.kappa, p.support.center.real(), p.support.center.imag(),
                      p.support.radius, p.ccw ? "ccw" : "cw");
    }
    return buf;
}

// Plans in the half-plane, verifies, prints the disk-model piece list, and
// optionally renders.  Shared by the plan and render commands.
int run_plan(const SceneFile& sf, const cpx& a, const cpx& b,
             const std::string& svg_out, bool show_covering, bool quiet) {
    ObstacleScene scene = to_obstacle_scene(sf);
    PlanQuery q = query_from_disk(scene, a, b);
    PlanResult result;
    try {
        result = plan(scene, q);
    } catch (const std::invalid_argument& e) {
        std::cerr << "unreachable: " << e.what() << "\n";
        return kExitUnreachable;
    } catch (const std::runtime_error& e) {
        std::cerr << "planning failed: " << e.what() << "\n";
        return kExitVerify;
    }
    PlanCertificate cert = verify_plan(scene, result, q);

    MoebiusMap back = scene.to_halfplane.inverse();
    AdmissiblePath disk_path;
    disk_path.model = Model::Disk;
    for (const auto& piece : result.path.pieces)
        disk_path.pieces.push_back(transport_arc(piece, back, Model::Disk));

    if (!quiet) {
        std::printf("pieces %zu  levels %d  epsilon %.12g  turning %.12g\n",
                    disk_path.pieces.size(), result.levels_used,
                    result.epsilon_used, cert.turning);
        for (const auto& p : disk_path.pieces)
            std::printf("%s\n", describe_piece(p).c_str());
        std::printf("verify %s%s%s\n", cert.pass ? "pass" : "fail",
                    cert.pass ? "" : ": ", cert.reason.c_str());
    }
    if (!svg_out.empty()) {
        ObstacleScene drawn = scene;
        drawn.covering = result.covering;
        write_file(svg_out, render_svg(drawn, &disk_path, show_covering));
    }
    return cert.pass ? kExitOk : kExitVerify;
}

int run_verify_bound(const std::string& domain, long samples,
                     unsigned long long seed, int workers) {
    DensityEvaluator ev = DensityEvaluator::horocrescent();
    if (domain == "crescent") {
        // default
    } else if (domain.rfind("lens(", 0) == 0 && domain.back() == ')') {
        double pa, pb;
        char comma;
        std::istringstream in(domain.substr(5, domain.size() - 6));
        if (!(in >> pa >> comma >> pb) || comma != ',')
            throw std::invalid_argument("lens selector needs lens(a,b)");
        ev = DensityEvaluator::lens_domain(lens(cpx(pa, 0), cpx(pb, 0)));
    } else {
        throw std::invalid_argument("unknown domain selector: " + domain);
    }
    if (samples <= 0) throw std::invalid_argument("samples must be positive");

    // Deterministic sample set, independent of the worker count.
    std::mt19937_64 gen(seed);
    auto uni = [&] { return std::generate_canonical<double, 53>(gen); };
    std::vector<cpx> pts;
    long attempts = 0;
    while ((long)pts.size() < samples && attempts < samples * 10000L) {
        ++attempts;
        cpx z(2.0 * uni() - 1.0, 2.0 * uni() - 1.0);
        if (std::abs(z) < 0.995 && ev.contains(z)) pts.push_back(z);
    }
    if ((long)pts.size() < samples)
        throw std::runtime_error("could not sample the requested domain");

    std::vector<DensitySample> evald(pts.size());
    workers = std::max(1, workers);
    std::vector<std::thread> pool;
    size_t chunk = (pts.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        size_t lo = w * chunk, hi = std::min(pts.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (size_t i = lo; i < hi; ++i) evald[i] = ev.evaluate(pts[i]);
        });
    }
    for (auto& t : pool) t.join();

    double min_ratio = 0.0;
    cpx argmin;
    std::printf("# i z_re z_im nu d ratio\n");
    for (size_t i = 0; i < evald.size(); ++i) {
        const auto& s = evald[i];
        double ratio = s.nu / lower_bound(s.d);
        std::printf("%zu %.12g %.12g %.12g %.12g %.12g\n", i, s.z.real(),
                    s.z.imag(), s.nu, s.d, ratio);
        if (i == 0 || ratio < min_ratio) {
            min_ratio = ratio;
            argmin = s.z;
        }
    }
    std::printf("min_ratio %.12g at (%.12g,%.12g)\n", min_ratio, argmin.real(),
                argmin.imag());
    return min_ratio >= 1.0 - 1e-9 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"horocyclic convexity toolkit"};
    app.require_subcommand(1);

    std::string scene_path, a_str, b_str, svg_out, domain = "crescent";
    long samples = 1000;
    unsigned long long seed = 0;
    int workers = 1;
    bool show_covering = false;

    auto* plan_cmd = app.add_subcommand("plan", "plan an admissible path");
    plan_cmd->add_option("--scene", scene_path)->required();
    plan_cmd->add_option("--a", a_str);
    plan_cmd->add_option("--b", b_str);
    plan_cmd->add_option("--svg-out", svg_out);
    plan_cmd->add_flag("--show-covering", show_covering);

    auto* verify_cmd = app.add_subcommand("verify-bound", "density bound certificate");
    verify_cmd->add_option("--domain", domain);
    verify_cmd->add_option("--samples", samples);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--workers", workers);

    app.add_subcommand("scan-constants", "numeric constants of the bound");

    auto* conj_cmd = app.add_subcommand("conjecture-scan", "class-C exploration");
    conj_cmd->add_option("--samples", samples)->description("instance count");
    conj_cmd->add_option("--seed", seed);

    auto* render_cmd = app.add_subcommand("render", "scene figure");
    render_cmd->add_option("--scene", scene_path)->required();
    render_cmd->add_option("--svg-out", svg_out)->required();
    render_cmd->add_flag("--show-covering", show_covering);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (plan_cmd->parsed()) {
            SceneFile sf = load_scene_file(scene_path);
            cpx a, b;
            if (!a_str.empty() && !b_str.empty()) {
                a = parse_point(a_str);
                b = parse_point(b_str);
            } else if (sf.query) {
                a = sf.query->first;
                b = sf.query->second;
            } else {
                throw std::invalid_argument("no endpoints: give --a/--b or a query line");
            }
            return run_plan(sf, a, b, svg_out, show_covering, false);
        }
        if (verify_cmd->parsed())
            return run_verify_bound(domain, samples, seed, workers);
        if (app.get_subcommand("scan-constants")->parsed()) {
            ScanConstants sc = scan_constants();
            std::printf("g_min %.8f at t %.8f\n", sc.g_min, sc.g_argmin);
            std::printf("s_min %.8f at s %.8f\n", sc.s_min, sc.s_argmin);
            std::printf("grid 10000 points, golden-section refinement to 1e-10\n");
            return kExitOk;
        }
        if (conj_cmd->parsed()) {
            std::printf("%s", conjecture_scan_report(samples, seed).c_str());
            return kExitOk;
        }
        if (render_cmd->parsed()) {
            SceneFile sf = load_scene_file(scene_path);
            if (sf.query)
                return run_plan(sf, sf.query->first, sf.query->second, svg_out,
                                show_covering, true);
            write_file(svg_out, render_svg(to_obstacle_scene(sf), nullptr,
                                           show_covering));
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitParse;
}
