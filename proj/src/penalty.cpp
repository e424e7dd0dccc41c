#include "obvp/penalty.hpp"

#include <cmath>
#include <sstream>

namespace obvp::penalty {

double mu(double t) noexcept { return t >= 0.0 ? -1.0 : 0.0; }

Obstacle reference_obstacle() {
    return Obstacle{{
        {{0.0, 0.25}, -1.0},
        {{0.25, 0.75}, 1.0},
        {{0.75, 1.0}, -1.0},
    }};
}

model::PiecewiseBvp reformulate(const PenaltyProblem& problem) {
    const auto& regions = problem.obstacle.regions;
    if (regions.empty()) {
        throw InputError("obstacle has no regions");
    }
    if (!std::isfinite(problem.force)) {
        throw InputError("force must be finite");
    }
    for (std::size_t k = 0; k < regions.size(); ++k) {
        const auto& iv = regions[k].interval;
        if (!(iv.lo < iv.hi) || !std::isfinite(regions[k].level)) {
            std::ostringstream os;
            os << "obstacle region " << k << " is degenerate or has a non-finite level";
            throw InputError(os.str());
        }
        if (k + 1 < regions.size() && iv.hi != regions[k + 1].interval.lo) {
            std::ostringstream os;
            os << "obstacle regions " << k << " and " << k + 1 << " are not contiguous ("
               << iv.hi << " != " << regions[k + 1].interval.lo << ")";
            throw InputError(os.str());
        }
    }

    model::PiecewiseBvp bvp;
    bvp.order = 2;
    for (const auto& region : regions) {
        if (region.level == problem.contact_level) {
            bvp.pieces.push_back(model::normalize_piece(
                1, {1.0, 0.0}, Polynomial::constant(problem.force - region.level), region.interval, 2));
        } else {
            bvp.pieces.push_back(model::normalize_piece(
                1, {0.0, 0.0}, Polynomial::constant(problem.force), region.interval, 2));
        }
    }
    bvp.conditions = problem.conditions;
    bvp.continuity = problem.continuity;
    return bvp;
}

}  // namespace obvp::penalty
