#pragma once

// Rejection-sampling generators for admissible arcs and chains, shared by the
// lemma property suites and the acceptance campaign.

#include <optional>

#include "horoconvex/path.hpp"
#include "oracles.hpp"

namespace oracles {

using horoconvex::AdmissiblePath;
using horoconvex::CurvatureArc;

// Single constant-curvature arc between random disk points; retries until
// validate_admissible accepts, cap 100.
inline std::optional<AdmissiblePath> random_admissible_arc(Rng& rng,
                                                           double rmax = 0.7) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        cpx a = rng.disk_point(rmax), b = rng.disk_point(rmax);
        if (std::abs(a - b) < 0.05) continue;
        double kappa = rng.uniform(0.0, 1.9);
        int side = rng.uniform(0, 1) < 0.5 ? +1 : -1;
        AdmissiblePath path;
        path.model = Model::Disk;
        try {
            path.pieces.push_back(horoconvex::arc_through(a, b, kappa, side));
        } catch (const std::exception&) {
            continue;
        }
        if (horoconvex::validate_admissible(path).ok) return path;
    }
    return std::nullopt;
}

// C1 chain of 2..4 pieces grown from a random start point and direction.
inline std::optional<AdmissiblePath> random_admissible_chain(Rng& rng,
                                                             int min_pieces = 2,
                                                             int max_pieces = 4) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        int n = min_pieces +
                (int)(rng.uniform(0.0, 1.0) * (max_pieces - min_pieces + 1));
        n = std::min(n, max_pieces);
        AdmissiblePath path;
        path.model = Model::Disk;
        cpx p = rng.disk_point(0.5);
        cpx t = std::polar(1.0, rng.uniform(-M_PI, M_PI));
        bool broke = false;
        for (int k = 0; k < n; ++k) {
            double kappa = rng.uniform(-1.9, 1.9);
            double extent = rng.uniform(0.1, 0.6);
            CurvatureArc arc;
            try {
                arc = horoconvex::arc_from_start(Model::Disk, p, t, kappa, extent);
            } catch (const std::exception&) {
                broke = true;
                break;
            }
            if (!horoconvex::in_unit_disk(arc.end)) {
                broke = true;
                break;
            }
            path.pieces.push_back(arc);
            p = arc.end;
            t = arc.tangent_at(1.0);
        }
        if (broke || path.pieces.empty()) continue;
        if (horoconvex::validate_admissible(path).ok) return path;
    }
    return std::nullopt;
}

}  // namespace oracles
