#pragma once

#include <vector>

#include "obvp/model.hpp"

/// String-over-obstacle problems turned into piecewise second-order ODEs by
/// the discontinuous penalty multiplier.
namespace obvp::penalty {

struct ObstacleRegion {
    model::Interval interval;
    double level = 0.0;
};

/// Piecewise-constant obstacle psi(x); regions must tile the domain in order.
struct Obstacle {
    std::vector<ObstacleRegion> regions;
};

struct PenaltyProblem {
    Obstacle obstacle;
    double force = 0.0;
    std::vector<model::PointCondition> conditions;
    /// Regions at this obstacle level are in contact and couple to u.
    double contact_level = 1.0;
    model::ContinuitySpec continuity{{0, 1}};
};

/// Penalty multiplier: -1 for t >= 0, 0 for t < 0.
double mu(double t) noexcept;

/// The psi used by the reference formulation: -1, 1, -1 on [0,1/4), [1/4,3/4), [3/4,1].
Obstacle reference_obstacle();

/// One second-order piece per region: u'' = u + f - level on contact regions,
/// u'' = f elsewhere. Conditions are copied through. Throws InputError for an
/// empty, gapped or reversed obstacle, or a non-finite force.
model::PiecewiseBvp reformulate(const PenaltyProblem& problem);

}  // namespace obvp::penalty
