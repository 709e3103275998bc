#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "horoconvex/arc.hpp"
#include "horoconvex/horodisk.hpp"

namespace horoconvex {

// A chain of constant-curvature pieces.  Admissibility (C1 junctions,
// |kappa| < 2 per piece, simplicity) is checked by validate_admissible, not
// assumed at construction.
struct AdmissiblePath {
    Model model = Model::Disk;
    std::vector<CurvatureArc> pieces;

    cpx start() const { return pieces.front().start; }
    cpx end() const { return pieces.back().end; }

    AdmissiblePath reversed() const {
        AdmissiblePath r;
        r.model = model;
        for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
            r.pieces.push_back(it->reversed());
        return r;
    }

    std::vector<cpx> sample(double chord_err = 1e-6,
                            int max_per_piece = 10000) const {
        std::vector<cpx> pts;
        for (const auto& p : pieces) {
            auto s = p.sample(chord_err, max_per_piece);
            if (!pts.empty()) s.erase(s.begin());
            pts.insert(pts.end(), s.begin(), s.end());
        }
        return pts;
    }
};

// Change of the euclidean tangent angle along one smooth piece.
inline double piece_turning(const CurvatureArc& arc) {
    if (arc.support.is_line()) return 0.0;
    return (arc.ccw ? 1.0 : -1.0) * arc.sweep();
}

// Total turning: per-piece tangent-angle changes plus exterior angles at the
// vertices.  For a closed chain the vertex at the wrap-around point is
// included as well.
inline double turning_angle(const AdmissiblePath& path, bool closed = false) {
    double total = 0.0;
    const auto& ps = path.pieces;
    for (const auto& p : ps) total += piece_turning(p);
    size_t n = ps.size();
    size_t vertices = closed ? n : (n >= 1 ? n - 1 : 0);
    for (size_t k = 0; k < vertices; ++k) {
        const CurvatureArc& in = ps[k];
        const CurvatureArc& out = ps[(k + 1) % n];
        cpx ti = in.tangent_at(1.0);
        cpx to = out.tangent_at(0.0);
        total += wrap_angle(std::arg(to) - std::arg(ti));
    }
    return total;
}

struct PathDiagnostics {
    bool ok = true;
    int piece = -1;
    std::string reason;

    static PathDiagnostics fail(int piece, std::string reason) {
        return {false, piece, std::move(reason)};
    }
};

namespace detail {

inline bool segments_intersect(const cpx& a, const cpx& b, const cpx& c,
                               const cpx& d) {
    auto orient = [](const cpx& p, const cpx& q, const cpx& r) {
        double v = cross(q - p, r - p);
        return (v > 0) - (v < 0);
    };
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 != o2 && o3 != o4;
}

// Proper crossings between two sampled polylines, optionally ignoring the
// segments adjacent to a shared junction.
inline bool polylines_cross(const std::vector<cpx>& p, const std::vector<cpx>& q,
                            bool skip_p_tail_q_head) {
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        for (size_t j = 0; j + 1 < q.size(); ++j) {
            if (skip_p_tail_q_head && i + 2 >= p.size() && j <= 1) continue;
            if (segments_intersect(p[i], p[i + 1], q[j], q[j + 1])) return true;
        }
    }
    return false;
}

}  // namespace detail

// Checks the admissibility definition: curvature strictly inside (-2,2) per
// piece, C1 junctions, simplicity, containment in the open model region.
inline PathDiagnostics validate_admissible(const AdmissiblePath& path) {
    const auto& ps = path.pieces;
    if (ps.empty()) return PathDiagnostics::fail(-1, "empty path");
    auto inside = [&](const cpx& z) {
        return path.model == Model::Disk ? std::abs(z) < 1.0 : z.imag() > 0.0;
    };
    for (size_t k = 0; k < ps.size(); ++k) {
        const auto& p = ps[k];
        if (p.model != path.model)
            return PathDiagnostics::fail((int)k, "piece model mismatch");
        if (std::abs(p.start - p.end) < 1e-14)
            return PathDiagnostics::fail((int)k, "degenerate piece");
        if (!(std::abs(p.kappa) < 2.0 - 1e-9))
            return PathDiagnostics::fail((int)k, "curvature outside (-2,2)");
        for (const cpx& z : p.sample(1e-6, 2000))
            if (!inside(z))
                return PathDiagnostics::fail((int)k, "piece leaves the model region");
    }
    // Simplicity: pairwise proper crossings of sampled pieces.
    std::vector<std::vector<cpx>> polys;
    polys.reserve(ps.size());
    for (const auto& p : ps) polys.push_back(p.sample(1e-6, 256));
    for (size_t i = 0; i < polys.size(); ++i) {
        for (size_t j = i + 1; j < polys.size(); ++j) {
            bool adjacent = (j == i + 1);
            if (detail::polylines_cross(polys[i], polys[j], adjacent))
                return PathDiagnostics::fail((int)i, "self-intersection");
        }
    }
    for (size_t k = 0; k + 1 < ps.size(); ++k) {
        if (std::abs(ps[k].end - ps[k + 1].start) > 1e-10)
            return PathDiagnostics::fail((int)k, "junction endpoints disagree");
        double dev = std::abs(
            wrap_angle(std::arg(ps[k + 1].tangent_at(0.0)) -
                       std::arg(ps[k].tangent_at(1.0))));
        if (dev > 1e-9)
            return PathDiagnostics::fail((int)k, "tangent break at junction");
    }
    return {};
}

// The lens-containment lemma as a predicate: every sampled point of the path
// lies in closure(E(a,b)) for the path's own endpoints.
inline bool path_in_lens(const AdmissiblePath& path, double tol = 1e-9) {
    if (path.model != Model::Disk)
        throw std::invalid_argument("path_in_lens: disk-model paths only");
    Lens L = lens(path.start(), path.end());
    for (const auto& p : path.pieces)
        for (const cpx& z : p.sample())
            if (!L.contains(z, tol)) return false;
    return true;
}

struct EscapeViolation {
    int piece;
    cpx location;
    std::string what;
};

struct EscapeReport {
    // inside-both / leaves-once / disjoint classification plus violations.
    bool endpoints_inside = false;
    bool touched_boundary = false;
    std::vector<EscapeViolation> violations;

    bool clean() const { return violations.empty(); }
};

// Checks the horodisk escape lemma against a concrete path.  The lemma
// allows the signed offset from the horocycle to follow only the collapsed
// pattern O* B? I+ B? O* (enter at most once, exit at most once, nothing
// after an exit) or a single tangential touch from outside; a path with both
// endpoints in h must stay in closure(h).
inline EscapeReport horodisk_escape_check(const AdmissiblePath& path,
                                          const Horodisk& h, double tol = 1e-9) {
    EscapeReport rep;
    const cpx c = h.center();
    const double r = h.radius;
    rep.endpoints_inside = h.contains(path.start()) && h.contains(path.end());

    if (rep.endpoints_inside) {
        for (size_t k = 0; k < path.pieces.size(); ++k)
            for (const cpx& z : path.pieces[k].sample())
                if (std::abs(z - c) > r + tol)
                    rep.violations.push_back({(int)k, z, "left the horodisk"});
        return rep;
    }
    // Collapse samples into runs of Inside / Boundary / Outside; a direct
    // I<->O jump between samples counts as an implicit boundary episode.
    enum State { In, Bd, Out };
    struct Run {
        State s;
        int piece;
        cpx where;
    };
    std::vector<Run> runs;
    for (size_t k = 0; k < path.pieces.size(); ++k) {
        for (const cpx& z : path.pieces[k].sample()) {
            double off = std::abs(z - c) - r;
            State s = off > tol ? Out : (off < -tol ? In : Bd);
            if (!runs.empty() && runs.back().s != s && runs.back().s != Bd &&
                s != Bd)
                runs.push_back({Bd, (int)k, z});
            if (runs.empty() || runs.back().s != s) runs.push_back({s, (int)k, z});
        }
    }
    for (const Run& rn : runs)
        if (rn.s == Bd) rep.touched_boundary = true;
    // Validate the collapsed pattern.
    int in_runs = 0, bd_runs = 0;
    int first_in = -1, last_in = -1;
    for (size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].s == In) {
            ++in_runs;
            if (first_in < 0) first_in = (int)i;
            last_in = (int)i;
        } else if (runs[i].s == Bd) {
            ++bd_runs;
        }
    }
    auto flag = [&](size_t i, const char* what) {
        rep.violations.push_back({runs[i].piece, runs[i].where, what});
    };
    if (in_runs == 0) {
        if (bd_runs > 1)
            for (size_t i = 0; i < runs.size(); ++i)
                if (runs[i].s == Bd && (int)i > 0) flag(i, "second boundary touch");
    } else if (in_runs > 1) {
        flag((size_t)last_in, "re-entered the horodisk");
    } else {
        // Every boundary run must be adjacent to the single inside run.
        for (size_t i = 0; i < runs.size(); ++i)
            if (runs[i].s == Bd && (int)i != first_in - 1 &&
                (int)i != first_in + 1)
                flag(i, "returned to the horocycle after leaving");
    }
    return rep;
}

}  // namespace horoconvex
