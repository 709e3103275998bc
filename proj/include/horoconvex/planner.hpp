#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "horoconvex/path.hpp"
#include "horoconvex/scene.hpp"
#include "horoconvex/tangent_lines.hpp"

namespace horoconvex {

// Planner queries and results live in the half-plane model; the scene's
// to_halfplane map carries disk-model data across.
struct PlanQuery {
    cpx a, b;
    std::optional<double> epsilon;  // covering enlargement; auto if absent
};

struct TangentEvent {
    std::string type;  // upper-tangent | cross-tangent | boundary-arc
    int disk_i = -1, disk_j = -1;  // covering-disk indices, -1 for endpoints
    int level = 0;
    int sweep = 0;      // construction sweep the event belongs to
    double angle = 0.0;  // segment direction angle; unused for arcs
};

struct PlanResult {
    AdmissiblePath path;  // half-plane model
    int levels_used = 0;
    std::vector<TangentEvent> tangent_events;
    double epsilon_used = 0.0;
    std::vector<GeneralizedCircle> covering;  // enlarged disks actually used
};

struct PlanCertificate {
    bool pass = true;
    std::string reason;
    double turning = 0.0;  // disk-model turning angle of the path

    static PlanCertificate fail(std::string why) { return {false, std::move(why), 0.0}; }
};

inline PlanQuery query_from_disk(const ObstacleScene& scene, const cpx& a,
                                 const cpx& b) {
    return {scene.to_halfplane.apply(a), scene.to_halfplane.apply(b), {}};
}

namespace planner_detail {

inline double point_segment_distance(const cpx& p, const cpx& a, const cpx& b) {
    cpx d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

// A path node: one of the endpoints, or a covering disk with a wrap sense
// (+1 counterclockwise = disk left of travel, -1 clockwise = right).
struct Node {
    bool is_point = false;
    cpx p;
    int disk = -1;
    int sense = -1;
    int level = 0;
    int sweep = 0;
    int id = 0;
};

// Per-connector construction state.  A connector extends its sweep toward
// the sweep terminal; repairing it with one of the sweep's own blockers
// continues the sweep, anything else opens a correction one level deeper.
struct ConnMeta {
    int level = 1;
    int sweep = 0;
    int terminal_id = 0;
    std::vector<int> blockers;  // disks blocking the segment this sweep replaces
};

struct Chain {
    std::vector<TangentSegment> connectors;          // size nodes-1
    std::vector<std::optional<CurvatureArc>> wraps;  // per node, disks only
};

class Builder {
  public:
    Builder(std::vector<GeneralizedCircle> covering, cpx a, cpx b)
        : disks_(std::move(covering)) {
        nodes_.push_back({true, a, -1, -1, 0, 0, next_id_++});
        nodes_.push_back({true, b, -1, -1, 0, 0, next_id_++});
        ConnMeta meta;
        meta.level = 1;
        meta.sweep = next_sweep_++;
        meta.terminal_id = nodes_.back().id;
        for (int i = 0; i < (int)disks_.size(); ++i)
            if (point_segment_distance(disks_[i].center, a, b) <=
                disks_[i].radius + 1e-9)
                meta.blockers.push_back(i);
        meta_.push_back(meta);
    }

    // Attempts a full construction; empty optional means numerical
    // degeneracy at the current epsilon.
    std::optional<AdmissiblePath> run(int max_iterations, int level_cap,
                                      std::vector<TangentEvent>* events,
                                      int* levels_used) {
        for (int it = 0; it < max_iterations; ++it) {
            auto chain = build();
            if (!chain) return std::nullopt;
            int blocked = first_blocked(*chain);
            if (blocked < 0) return finalize(*chain, events, levels_used);
            if (!insert_blocker(*chain, blocked, level_cap)) return std::nullopt;
        }
        return std::nullopt;
    }

  private:
    std::vector<GeneralizedCircle> disks_;
    std::vector<Node> nodes_;
    std::vector<ConnMeta> meta_;
    int next_id_ = 0;
    int next_sweep_ = 1;

    double radius_of(const Node& n) const {
        return n.is_point ? 0.0 : disks_[n.disk].radius;
    }
    cpx center_of(const Node& n) const {
        return n.is_point ? n.p : disks_[n.disk].center;
    }

    std::optional<Chain> build() const {
        Chain chain;
        chain.wraps.resize(nodes_.size());
        for (size_t k = 0; k + 1 < nodes_.size(); ++k) {
            const Node& x = nodes_[k];
            const Node& y = nodes_[k + 1];
            try {
                chain.connectors.push_back(detail::common_tangent(
                    center_of(x), radius_of(x), x.sense, center_of(y),
                    radius_of(y), y.sense));
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
        for (size_t k = 1; k + 1 < nodes_.size(); ++k) {
            const Node& n = nodes_[k];
            cpx entry = chain.connectors[k - 1].p1;
            cpx exit = chain.connectors[k].p0;
            if (std::abs(entry - exit) < 1e-11) continue;  // grazing touch
            CurvatureArc arc = make_arc(Model::HalfPlane, disks_[n.disk], entry,
                                        exit, n.sense > 0);
            // Covering disks dip below the axis; the wrap must stay above.
            if (detail::arc_covers_angle(arc, -M_PI / 2.0)) return std::nullopt;
            chain.wraps[k] = arc;
        }
        return chain;
    }

    // Index of the first connector meeting a non-flanking disk, or -1.
    int first_blocked(const Chain& chain) const {
        for (size_t k = 0; k < chain.connectors.size(); ++k)
            if (!blockers_of(chain, k).empty()) return (int)k;
        return -1;
    }

    std::vector<int> blockers_of(const Chain& chain, size_t k) const {
        const auto& seg = chain.connectors[k];
        std::vector<int> out;
        for (int i = 0; i < (int)disks_.size(); ++i) {
            if (!nodes_[k].is_point && nodes_[k].disk == i) continue;
            if (!nodes_[k + 1].is_point && nodes_[k + 1].disk == i) continue;
            if (point_segment_distance(disks_[i].center, seg.p0, seg.p1) <=
                disks_[i].radius + 1e-9)
                out.push_back(i);
        }
        return out;
    }

    // Preferred wrap sense for a disk blocking a connector travelling in
    // direction d: over the top (clockwise when moving right), flank dodge
    // away from the center when the travel is vertical.
    int preferred_sense(const cpx& d, const cpx& from, const cpx& center) const {
        if (std::abs(d.real()) > 1e-9 * std::abs(d)) return d.real() > 0 ? -1 : +1;
        return cross(d, center - from) < 0 ? -1 : +1;
    }

    bool insert_blocker(const Chain& chain, int k, int level_cap) {
        const auto& seg = chain.connectors[k];
        cpx d = seg.p1 - seg.p0;
        auto blockers = blockers_of(chain, k);
        bool leftward = d.real() < -1e-9 * std::abs(d);
        // Extremal tangent direction from the source node selects the
        // blocker; ties go to the extremal position in the ordering.
        int best = -1;
        double best_angle = 0.0;
        for (int i : blockers) {
            int sense = preferred_sense(d, seg.p0, disks_[i].center);
            double angle;
            try {
                TangentSegment t = detail::common_tangent(
                    center_of(nodes_[k]), radius_of(nodes_[k]), nodes_[k].sense,
                    disks_[i].center, disks_[i].radius, sense);
                angle = std::arg(t.p1 - t.p0);
            } catch (const std::exception&) {
                continue;
            }
            if (best < 0) {
                best = i;
                best_angle = angle;
                continue;
            }
            double diff = angle - best_angle;
            bool better = leftward
                              ? diff < -1e-12 || (std::abs(diff) <= 1e-12 && i < best)
                              : diff > 1e-12 || (std::abs(diff) <= 1e-12 && i > best);
            if (better) {
                best = i;
                best_angle = angle;
            }
        }
        if (best < 0) return false;

        const ConnMeta meta = meta_[k];
        const Node y = nodes_[k + 1];
        bool continues_sweep =
            y.id == meta.terminal_id &&
            std::find(meta.blockers.begin(), meta.blockers.end(), best) !=
                meta.blockers.end();
        int level = continues_sweep ? meta.level : meta.level + 1;
        if (level > level_cap) return false;
        int sweep = continues_sweep ? meta.sweep : next_sweep_++;

        int pref = preferred_sense(d, seg.p0, disks_[best].center);
        for (int sense : {pref, -pref}) {
            Node n{false, {}, best, sense, level, sweep, next_id_++};
            ConnMeta left = meta, right = meta;
            if (continues_sweep) {
                // The leg up to the new node is final for this sweep; repairs
                // of it become corrections via the terminal test.
                left.terminal_id = n.id;
            } else {
                left.level = right.level = level;
                left.sweep = right.sweep = sweep;
                left.terminal_id = n.id;
                right.terminal_id = y.id;
                left.blockers = right.blockers = blockers;
            }
            nodes_.insert(nodes_.begin() + k + 1, n);
            meta_[k] = left;
            meta_.insert(meta_.begin() + k + 1, right);
            if (build()) return true;
            nodes_.erase(nodes_.begin() + k + 1);
            meta_.erase(meta_.begin() + k + 1);
            meta_[k] = meta;
        }
        return false;
    }

    std::optional<AdmissiblePath> finalize(const Chain& chain,
                                           std::vector<TangentEvent>* events,
                                           int* levels_used) const {
        AdmissiblePath path;
        path.model = Model::HalfPlane;
        int max_level = 0;
        for (size_t k = 0; k < chain.connectors.size(); ++k) {
            const auto& seg = chain.connectors[k];
            // Admissibility needs non-horizontal segments.
            if (std::abs(seg.p1.imag() - seg.p0.imag()) <
                1e-12 * (1.0 + std::abs(seg.p1 - seg.p0)))
                return std::nullopt;
            path.pieces.push_back(segment_arc(Model::HalfPlane, seg.p0, seg.p1));
            if (events) {
                const Node& x = nodes_[k];
                const Node& y = nodes_[k + 1];
                bool crossed = !x.is_point && !y.is_point && x.sense != y.sense;
                events->push_back({crossed ? "cross-tangent" : "upper-tangent",
                                   x.is_point ? -1 : x.disk,
                                   y.is_point ? -1 : y.disk, meta_[k].level,
                                   meta_[k].sweep, std::arg(seg.p1 - seg.p0)});
            }
            if (k + 1 < nodes_.size() - 1) {
                const Node& n = nodes_[k + 1];
                if (chain.wraps[k + 1]) {
                    path.pieces.push_back(*chain.wraps[k + 1]);
                    if (events)
                        events->push_back(
                            {"boundary-arc", n.disk, -1, n.level, n.sweep, 0.0});
                }
                max_level = std::max(max_level, n.level);
            }
        }
        if (levels_used) *levels_used = max_level;
        return path;
    }
};

// Free horizontal segments are replaced by an arc of a circle through both
// endpoints that meets the axis; the center is pushed down until the arc
// clears the covering disks.
inline std::optional<CurvatureArc> horizontal_free_arc(
    const cpx& a, const cpx& b, const std::vector<GeneralizedCircle>& disks) {
    double mx = 0.5 * (a.real() + b.real());
    double down = 0.0;
    for (int it = 0; it < 70; ++it) {
        cpx center{mx, -down};
        auto support = GeneralizedCircle::circle(center, std::abs(a - center));
        CurvatureArc arc;
        try {
            bool ccw = detail::in_region_sense(Model::HalfPlane, support, a, b);
            arc = make_arc(Model::HalfPlane, support, a, b, ccw);
        } catch (const std::exception&) {
            down = down == 0.0 ? 1.0 : down * 2.0;
            continue;
        }
        bool clear = std::abs(arc.kappa) < 2.0 - 1e-9;
        if (clear) {
            for (const cpx& z : arc.sample(1e-6, 4000)) {
                for (const auto& dk : disks)
                    if (std::abs(z - dk.center) <= dk.radius + 1e-9) {
                        clear = false;
                        break;
                    }
                if (!clear) break;
            }
        }
        if (clear) return arc;
        down = down == 0.0 ? 1.0 : down * 2.0;
    }
    return std::nullopt;
}

}  // namespace planner_detail

// Constructs an admissible path in the half-plane from q.a to q.b avoiding
// every covering disk, out of tangent segments and covering-boundary arcs.
inline PlanResult plan(const ObstacleScene& scene, const PlanQuery& q) {
    using namespace planner_detail;
    const auto& base = scene.tangent_circles;
    if (std::abs(q.a - q.b) < 1e-12)
        throw std::invalid_argument("plan: coincident endpoints");
    if (!(q.a.imag() > 0.0 && q.b.imag() > 0.0))
        throw std::invalid_argument("plan: endpoints must be in the upper half-plane");
    for (const auto& c : base)
        if (std::abs(q.a - c.center) < c.radius || std::abs(q.b - c.center) < c.radius)
            throw std::invalid_argument("plan: endpoint inside an obstacle");

    double clearance = 1.0;
    for (const auto& c : base) {
        clearance = std::min(clearance, std::abs(q.a - c.center) - c.radius);
        clearance = std::min(clearance, std::abs(q.b - c.center) - c.radius);
    }
    double gap = detail::min_pairwise_gap(base);
    double eps0 = q.epsilon ? *q.epsilon : 0.25 * std::min({clearance, gap, 1.0});
    if (!(eps0 > 0.0))
        throw std::runtime_error("plan: no room for a covering enlargement");

    const int mu = (int)base.size();
    cpx a = q.a, b = q.b;
    bool swapped = a.real() > b.real();
    if (swapped) std::swap(a, b);

    // Retry ladder: alternate small perturbations (dodging horizontal
    // tangents) with halvings (recovering clearance).
    for (int attempt = 0; attempt < 18; ++attempt) {
        double eps = eps0 * std::pow(0.5, attempt / 2) *
                     (attempt % 2 == 1 ? 0.9371 : 1.0);
        auto covering = detail::enlarge_circles(base, eps);
        bool bad = false;
        for (const auto& c : covering)
            if (std::abs(a - c.center) <= c.radius ||
                std::abs(b - c.center) <= c.radius)
                bad = true;
        if (detail::min_pairwise_gap(covering) <= 0.0) bad = true;
        if (bad) continue;

        PlanResult result;
        result.epsilon_used = eps;
        result.covering = covering;
        result.path.model = Model::HalfPlane;

        bool seg_free = true;
        for (const auto& c : covering)
            if (point_segment_distance(c.center, a, b) <= c.radius + 1e-9)
                seg_free = false;
        if (seg_free) {
            bool horizontal =
                std::abs(a.imag() - b.imag()) < 1e-12 * (1.0 + std::abs(a - b));
            if (!horizontal) {
                result.path.pieces.push_back(segment_arc(Model::HalfPlane, a, b));
            } else {
                auto arc = horizontal_free_arc(a, b, covering);
                if (!arc) continue;
                result.path.pieces.push_back(*arc);
                result.tangent_events.push_back({"boundary-arc", -1, -1, 0, 0, 0.0});
            }
            if (swapped) result.path = result.path.reversed();
            return result;
        }

        Builder builder(covering, a, b);
        auto path = builder.run(6 * mu + 12, mu + 2, &result.tangent_events,
                                &result.levels_used);
        if (!path) {
            result.tangent_events.clear();
            continue;
        }
        result.path = *path;
        if (swapped) result.path = result.path.reversed();
        return result;
    }
    throw std::runtime_error("plan: level budget exceeded (numerical degeneracy)");
}

// Checks the planner's contract: endpoints, admissibility, strict avoidance
// of the half-plane covering disks and of the disk-model obstacles after
// transporting back, and the 8*pi turning bound in the disk model.
inline PlanCertificate verify_plan(const ObstacleScene& scene,
                                   const PlanResult& result, const PlanQuery& q) {
    const auto& path = result.path;
    if (path.pieces.empty()) return PlanCertificate::fail("empty path");
    if (std::abs(path.start() - q.a) > 1e-9 || std::abs(path.end() - q.b) > 1e-9)
        return PlanCertificate::fail("endpoints do not match the query");
    auto diag = validate_admissible(path);
    if (!diag.ok) return PlanCertificate::fail("not admissible: " + diag.reason);
    for (const auto& piece : path.pieces)
        for (const cpx& z : piece.sample())
            for (const auto& c : result.covering)
                if (std::abs(z - c.center) < c.radius - 1e-9)
                    return PlanCertificate::fail("path enters a covering disk");

    // Transport to the disk model for obstacle avoidance and the turning bound.
    MoebiusMap back = scene.to_halfplane.inverse();
    AdmissiblePath disk_path;
    disk_path.model = Model::Disk;
    try {
        for (const auto& piece : path.pieces)
            disk_path.pieces.push_back(transport_arc(piece, back, Model::Disk));
    } catch (const std::exception& e) {
        return PlanCertificate::fail(std::string("transport failed: ") + e.what());
    }
    for (const auto& piece : disk_path.pieces)
        for (const cpx& z : piece.sample()) {
            if (std::abs(z) >= 1.0)
                return PlanCertificate::fail("path leaves the unit disk");
            for (const Horodisk& h : scene.obstacles)
                if (std::abs(z - h.center()) < h.radius - 1e-9)
                    return PlanCertificate::fail("path enters an obstacle");
        }
    PlanCertificate cert;
    cert.turning = turning_angle(disk_path);
    if (std::abs(cert.turning) > 8.0 * M_PI + 1e-9)
        return PlanCertificate::fail("turning angle exceeds 8*pi");
    return cert;
}

}  // namespace horoconvex
